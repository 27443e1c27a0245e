"""BFS-measured graph metrics, closed-form counterparts, and cost-effectiveness factors.

Measured values come from plain breadth-first search; closed forms come from
the families' defining formulas. The report keeps both sides plus per-field
agreement flags, so a formula that the built graph contradicts shows up as
data instead of being silently trusted.
"""

from __future__ import annotations

import csv
import io
import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .topology import Family, Graph, Label, TopologySpec


def _bfs_indices(adjacency: tuple[tuple[int, ...], ...], source: int) -> list[int]:
    dist = [-1] * len(adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adjacency[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    if min(dist) < 0:
        raise RuntimeError("graph is not connected")
    return dist


def bfs_distances(graph: Graph, source: Label) -> dict[Label, int]:
    """Exact hop distance from ``source`` to every node."""
    dist = _bfs_indices(graph.adjacency, graph.index_of(source))
    return {lab: dist[i] for i, lab in enumerate(graph.nodes)}


def diameter(graph: Graph) -> int:
    """Max over all ordered pairs of BFS distance."""
    return max(
        max(_bfs_indices(graph.adjacency, s)) for s in range(graph.node_count)
    )


def eccentricity(graph: Graph, source: Label) -> int:
    return max(_bfs_indices(graph.adjacency, graph.index_of(source)))


def average_distance(graph: Graph, mode: str = "from_origin") -> Fraction:
    """Mean shortest-path distance, as an exact fraction.

    ``from_origin``: BFS from the all-zeros node, summed over all nodes and
    divided by the node count (the zero self-distance term stays in the
    denominator). ``all_pairs``: mean over all ordered pairs u != v.
    """
    if mode == "from_origin":
        origin = (0,) * graph.spec.dimension
        dist = _bfs_indices(graph.adjacency, graph.index_of(origin))
        return Fraction(sum(dist), graph.node_count)
    if mode == "all_pairs":
        total = sum(
            sum(_bfs_indices(graph.adjacency, s)) for s in range(graph.node_count)
        )
        return Fraction(total, graph.node_count * (graph.node_count - 1))
    raise ValueError(f"unknown mode {mode!r}")


def traffic_density(graph: Graph) -> Fraction:
    """Mean from-origin distance times nodes per link: per-link load proxy."""
    return average_distance(graph, "from_origin") * graph.node_count / graph.edge_count


def cost(graph: Graph) -> int:
    """Maximum degree times measured diameter."""
    return graph.degree_min_max()[1] * diameter(graph)


def cef(n: int, rho: float) -> float:
    """Cost-effectiveness factor 1/(1 + rho*n); rho is link cost over processor cost."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if rho <= 0:
        raise ValueError(f"rho must be positive, got {rho}")
    return 1.0 / (1.0 + rho * n)


def tcef(n: int, rho: float) -> float:
    """Time-cost-effectiveness factor 2/(1 + rho*n + 2^(-2n))."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if rho <= 0:
        raise ValueError(f"rho must be positive, got {rho}")
    return 2.0 / (1.0 + rho * n + 2.0 ** (-2 * n))


def distance_profiles_uniform(graph: Graph) -> bool:
    """True iff every node sees the same multiset of BFS distances."""
    reference: tuple[int, ...] | None = None
    for s in range(graph.node_count):
        profile = tuple(sorted(_bfs_indices(graph.adjacency, s)))
        if reference is None:
            reference = profile
        elif profile != reference:
            return False
    return True


def closed_form_report(spec: TopologySpec) -> dict[str, int | None]:
    """Formula-side values; fields are None where no usable formula exists."""
    n = spec.dimension
    report: dict[str, int | None] = {
        "node_count": spec.node_count,
        "edge_count": spec.edge_count,
        "degree": spec.expected_degree,
        "diameter": None,
        "cost": None,
    }
    if spec.family is Family.HC:
        report["diameter"] = n
    elif spec.family is Family.BVH:
        report["diameter"] = 2 if n == 1 else n + n // 2
    if report["diameter"] is not None:
        report["cost"] = spec.expected_degree * report["diameter"]
    return report


_MEASURED_FIELDS = (
    "node_count",
    "edge_count",
    "degree_min",
    "degree_max",
    "diameter",
    "avg_distance_from_origin",
    "avg_distance_all_pairs",
    "traffic_density",
    "cost",
)


@dataclass(frozen=True)
class MetricsReport:
    family: Family
    dimension: int
    measured: dict[str, object]
    closed_form: dict[str, int | None]
    # per-field: measured equals closed form (only fields with a formula)
    agreement: dict[str, bool]
    distance_profile_uniform: bool
    notes: tuple[str, ...]

    def to_json(self) -> str:
        def plain(v: object) -> object:
            return float(v) if isinstance(v, Fraction) else v

        doc = {
            "family": self.family.value,
            "dimension": self.dimension,
            "measured": {k: plain(v) for k, v in self.measured.items()},
            "measured_exact": {
                k: str(v)
                for k, v in self.measured.items()
                if isinstance(v, Fraction)
            },
            "closed_form": self.closed_form,
            "agreement": self.agreement,
            "distance_profile_uniform": self.distance_profile_uniform,
            "notes": list(self.notes),
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"

    @staticmethod
    def csv_header() -> list[str]:
        cols = ["family", "dimension"]
        cols += [f"measured_{f}" for f in _MEASURED_FIELDS]
        cols += [f"closed_form_{f}" for f in ("node_count", "edge_count", "degree", "diameter", "cost")]
        cols += ["distance_profile_uniform"]
        return cols

    def to_csv_row(self) -> list[str]:
        def fmt(v: object) -> str:
            if v is None:
                return ""
            if isinstance(v, Fraction):
                return f"{float(v):.10g}"
            return str(v)

        row = [self.family.value, str(self.dimension)]
        row += [fmt(self.measured[f]) for f in _MEASURED_FIELDS]
        row += [
            fmt(self.closed_form[f])
            for f in ("node_count", "edge_count", "degree", "diameter", "cost")
        ]
        row += [str(self.distance_profile_uniform)]
        return row

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.csv_header())
        writer.writerow(self.to_csv_row())
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"metrics: {self.family.value} dimension {self.dimension}"]
        for field in _MEASURED_FIELDS:
            value = self.measured[field]
            shown = (
                f"{float(value):.6f} ({value})" if isinstance(value, Fraction) else value
            )
            lines.append(f"  {field}: {shown}")
        lines.append("  closed forms:")
        for field, value in self.closed_form.items():
            if value is None:
                lines.append(f"    {field}: (no formula)")
            else:
                ok = self.agreement.get(field)
                lines.append(f"    {field}: {value}  agreement: {ok}")
        lines.append(f"  distance profile uniform: {self.distance_profile_uniform}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines) + "\n"


def metrics_report(graph: Graph) -> MetricsReport:
    """Measure everything, compare with formulas, and flag every disagreement."""
    spec = graph.spec
    deg_min, deg_max = graph.degree_min_max()
    avg_origin = average_distance(graph, "from_origin")
    avg_all = average_distance(graph, "all_pairs")
    dia = diameter(graph)
    density = avg_origin * graph.node_count / graph.edge_count
    measured: dict[str, object] = {
        "node_count": graph.node_count,
        "edge_count": graph.edge_count,
        "degree_min": deg_min,
        "degree_max": deg_max,
        "diameter": dia,
        "avg_distance_from_origin": avg_origin,
        "avg_distance_all_pairs": avg_all,
        "traffic_density": density,
        "cost": deg_max * dia,
    }
    closed = closed_form_report(spec)
    agreement = {
        "node_count": closed["node_count"] == graph.node_count,
        "edge_count": closed["edge_count"] == graph.edge_count,
        "degree": closed["degree"] == deg_min == deg_max,
    }
    if closed["diameter"] is not None:
        agreement["diameter"] = closed["diameter"] == dia
        agreement["cost"] = closed["cost"] == measured["cost"]

    notes: list[str] = []
    if closed["diameter"] is not None and closed["diameter"] != dia:
        notes.append(
            f"measured diameter {dia} deviates from the closed form "
            f"{closed['diameter']}"
        )
    uniform = distance_profiles_uniform(graph)
    if uniform:
        scaled = avg_origin * graph.node_count / (graph.node_count - 1)
        if scaled != avg_all:
            notes.append(
                "uniform distance profiles but scaled origin average "
                f"{scaled} != all-pairs average {avg_all}"
            )
    if spec.family in (Family.BH, Family.BVH):
        # for 2n-regular families with |E| = n|V|, density must equal avg/n
        if density != avg_origin / spec.dimension:
            notes.append("traffic density does not simplify to avg/dimension")
    return MetricsReport(
        family=spec.family,
        dimension=spec.dimension,
        measured=measured,
        closed_form=closed,
        agreement=agreement,
        distance_profile_uniform=uniform,
        notes=tuple(notes),
    )
