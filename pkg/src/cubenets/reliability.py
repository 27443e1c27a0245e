"""Terminal reliability over vertex-disjoint path classes.

A path with m links and p intermediate processors works with probability
r_link^m * r_proc^p; disjoint paths fail independently, so the source and
target stay connected with probability 1 - prod_classes (1 - r_link^m *
r_proc^p)^k. Endpoints are excluded from the processor exponents. This
product treats the disjoint path set as the whole connection structure, so it
lower-bounds the exact two-terminal reliability; the exhaustive oracle here
measures that gap on tiny graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .metrics import _bfs_indices
from .paths import PathClassSet, classify_paths, max_disjoint_paths
from .topology import Graph, Label

ClassTriples = tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class ReliabilityParams:
    r_link: float = 0.9
    r_proc: float = 0.8
    lambda_link: float = 0.0001  # failures per hour
    lambda_proc: float = 0.001
    t: float = 0.0  # mission time, hours

    def __post_init__(self) -> None:
        for name in ("r_link", "r_proc"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")
        for name in ("lambda_link", "lambda_proc", "t"):
            value = getattr(self, name)
            if value < 0:
                raise ValueError(f"{name} must be >= 0, got {value}")


def component_reliability(lam: float, t: float) -> float:
    """Survival probability e^(-lam*t) of one component at mission time t."""
    if lam < 0:
        raise ValueError(f"failure rate must be >= 0, got {lam}")
    if t < 0:
        raise ValueError(f"mission time must be >= 0, got {t}")
    return math.exp(-lam * t)


def _as_triples(classes: PathClassSet | ClassTriples) -> ClassTriples:
    if isinstance(classes, PathClassSet):
        triples = classes.as_triples()
    else:
        triples = tuple((int(k), int(m), int(p)) for k, m, p in classes)
    if not triples:
        raise ValueError("at least one path class is required")
    for k, m, p in triples:
        if k < 1 or m < 1 or p < 0:
            raise ValueError(f"bad path class (k={k}, m={m}, p={p})")
    return triples


def terminal_reliability(
    classes: PathClassSet | ClassTriples, r_link: float, r_proc: float
) -> float:
    """1 - prod over classes of (1 - r_link^m * r_proc^p)^k."""
    triples = _as_triples(classes)
    for name, value in (("r_link", r_link), ("r_proc", r_proc)):
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"{name} must be in [0, 1], got {value}")
    all_fail = 1.0
    for k, m, p in triples:
        all_fail *= (1.0 - r_link**m * r_proc**p) ** k
    return 1.0 - all_fail


def terminal_reliability_curve(
    classes: PathClassSet | ClassTriples,
    lambda_link: float,
    lambda_proc: float,
    times: tuple[float, ...] | list[float],
) -> tuple[tuple[float, float], ...]:
    """(t, reliability) with r_link = e^(-lambda_link*t), r_proc = e^(-lambda_proc*t)."""
    triples = _as_triples(classes)
    if len(times) == 0:
        raise ValueError("times must be nonempty")
    if any(b < a for a, b in zip(times, list(times)[1:])):
        raise ValueError("times must be nondecreasing")
    points = []
    for t in times:
        r_link = component_reliability(lambda_link, t)
        r_proc = component_reliability(lambda_proc, t)
        points.append((float(t), terminal_reliability(triples, r_link, r_proc)))
    return tuple(points)


def derive_and_evaluate(
    graph: Graph, source: Label, target: Label, params: ReliabilityParams
) -> tuple[float, PathClassSet]:
    """Full pipeline: disjoint paths -> classes -> terminal reliability.

    Returns the probability together with the computed classes so callers can
    report them next to externally given class sets.
    """
    classes = classify_paths(max_disjoint_paths(graph, source, target))
    return terminal_reliability(classes, params.r_link, params.r_proc), classes


def exact_two_terminal_reliability(
    graph: Graph, source: Label, target: Label, r_link: float, r_proc: float
) -> float:
    """Exhaustive oracle: enumerate every up/down state of internal nodes and links.

    Exponential in (nodes - 2 + edges); refuses anything past 2^22 states.
    """
    s = graph.index_of(source)
    t = graph.index_of(target)
    if s == t:
        raise ValueError("source and target must differ")
    internals = [v for v in range(graph.node_count) if v not in (s, t)]
    edge_list = list(graph.edges())
    if len(internals) + len(edge_list) > 22:
        raise ValueError("state space too large for exhaustive enumeration")

    total = 0.0
    for node_up in product((False, True), repeat=len(internals)):
        up = {s, t} | {v for v, ok in zip(internals, node_up) if ok}
        p_nodes = 1.0
        for ok in node_up:
            p_nodes *= r_proc if ok else 1.0 - r_proc
        for link_up in product((False, True), repeat=len(edge_list)):
            p = p_nodes
            for ok in link_up:
                p *= r_link if ok else 1.0 - r_link
            adj: dict[int, list[int]] = {}
            for (u, w), ok in zip(edge_list, link_up):
                if ok and u in up and w in up:
                    adj.setdefault(u, []).append(w)
                    adj.setdefault(w, []).append(u)
            seen = {s}
            stack = [s]
            while stack:
                u = stack.pop()
                for w in adj.get(u, ()):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if t in seen:
                total += p
    return total


def farthest_node(graph: Graph, source: Label) -> Label:
    """Lexicographically smallest node at maximum BFS distance from ``source``."""
    dist = _bfs_indices(graph.adjacency, graph.index_of(source))
    top = max(dist)
    return min(graph.nodes[v] for v in range(graph.node_count) if dist[v] == top)
