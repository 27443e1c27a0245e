"""Node labels, adjacency rules, and graph construction for four cube-family networks.

Families:
  hc  -- binary hypercube, 2^n nodes, degree n
  vq  -- varietal hypercube, 2^n nodes, degree n (twisted cross-half matching
         when the dimension is a multiple of 3)
  bh  -- balanced hypercube, 2^(2n) nodes of n quaternary digits, degree 2n
  bvh -- balanced varietal hypercube, 2^(2n) nodes, degree 2n

Edges are the symmetric closure of each family's per-node rule: an edge exists
iff either endpoint's rule emits the other. The audit reports how much repair
the closure performed, so a one-directional rule table is visible data rather
than a silent fix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Iterator

Label = tuple[int, ...]

# Builds above this size are refused outright; every documented use sits far below.
MAX_NODES = 2**20


class MalformedLabelError(ValueError):
    """A node label has the wrong length or an out-of-range digit."""


class UnsupportedFamilyError(ValueError):
    """An operation was asked for on a family it is not defined for."""


class DisconnectedGraphError(RuntimeError):
    """A built graph came out disconnected (a rule-transcription bug)."""

    def __init__(self, message: str, components: tuple[tuple[Label, ...], ...]):
        super().__init__(message)
        self.components = components


class Family(str, Enum):
    HC = "hc"
    VQ = "vq"
    BH = "bh"
    BVH = "bvh"

    @property
    def radix(self) -> int:
        return 2 if self in (Family.HC, Family.VQ) else 4

    @classmethod
    def parse(cls, name: str) -> "Family":
        try:
            return cls(name.lower())
        except ValueError:
            raise UnsupportedFamilyError(f"unknown family {name!r}") from None


@dataclass(frozen=True)
class TopologySpec:
    """A family plus its dimension; fixes radix, label length, and node count."""

    family: Family
    dimension: int

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dimension}")

    @property
    def radix(self) -> int:
        return self.family.radix

    @property
    def node_count(self) -> int:
        return self.radix**self.dimension

    @property
    def expected_degree(self) -> int:
        n = self.dimension
        return n if self.radix == 2 else 2 * n

    @property
    def edge_count(self) -> int:
        # degree-regular: |E| = degree * |V| / 2
        return self.expected_degree * self.node_count // 2

    def check_label(self, label: Label) -> Label:
        label = tuple(label)
        if len(label) != self.dimension:
            raise MalformedLabelError(
                f"label {label} has length {len(label)}, expected {self.dimension}"
            )
        for d in label:
            if not isinstance(d, int) or not 0 <= d < self.radix:
                raise MalformedLabelError(
                    f"label {label} has digit {d!r} outside 0..{self.radix - 1}"
                )
        return label

    def all_labels(self) -> Iterator[Label]:
        # digits[0] most significant, so iteration order is lexicographic
        return product(range(self.radix), repeat=self.dimension)


def _hc_emissions(label: Label) -> list[Label]:
    out = []
    for i in range(len(label)):
        flipped = list(label)
        flipped[i] ^= 1
        out.append(tuple(flipped))
    return out


def _vq_emissions(label: Label) -> list[Label]:
    # Recursive: digits[0] is the top bit splitting the two half-cubes; the
    # low-order suffix recurses. The cross-half partner keeps the suffix,
    # except when the dimension is a multiple of 3, where the two bits under
    # the top one map (00,01,10,11) -> (00,01,11,10).
    n = len(label)
    if n == 1:
        return [(1 - label[0],)]
    inner = [(label[0],) + rest for rest in _vq_emissions(label[1:])]
    cross = list(label)
    cross[0] ^= 1
    if n % 3 == 0 and label[1] == 1:
        cross[2] ^= 1
    return inner + [tuple(cross)]


def _bh_emissions(label: Label) -> list[Label]:
    a0 = label[0]
    out = [((a0 + 1) % 4,) + label[1:], ((a0 - 1) % 4,) + label[1:]]
    step = 1 if a0 % 2 == 0 else -1  # (-1)^{a0}
    for i in range(1, len(label)):
        for first in ((a0 + 1) % 4, (a0 - 1) % 4):
            moved = list(label)
            moved[0] = first
            moved[i] = (label[i] + step) % 4
            out.append(tuple(moved))
    return out


def _bvh_emissions(label: Label, corrected: bool = True) -> list[Label]:
    """Literal rule emissions for the balanced varietal hypercube.

    ``corrected=False`` reproduces the one flawed case line as printed in the
    source definition (it repeats a neighbor, leaving that case one emission
    short); the default replaces it with the line the symmetric closure forces.
    Both settings close to the identical graph.
    """
    a0 = label[0]
    up, dn = (a0 + 1) % 4, (a0 - 1) % 4
    if a0 % 2 == 0:
        inner = [up, (a0 - 2) % 4]
    else:
        inner = [dn, (a0 + 2) % 4]
    out = [(v,) + label[1:] for v in inner]

    for i in range(1, len(label)):
        ai = label[i]
        if ai in (0, 3):
            if a0 in (0, 3):
                delta = 1 if ai == 0 else -1
                moves = [(up, (ai + delta) % 4), (dn, (ai + delta) % 4)]
            else:
                moves = [(up, (ai + 2) % 4), (dn, (ai + 2) % 4)]
        else:
            if a0 in (0, 1):
                if ai == 1:
                    moves = [(up, (ai + 2) % 4), (dn, (ai - 1) % 4)]
                elif corrected:
                    moves = [(up, (ai + 2) % 4), (dn, (ai + 1) % 4)]
                else:
                    moves = [(up, (ai + 2) % 4), (up, (ai + 2) % 4)]
            else:
                if ai == 1:
                    moves = [(up, (ai - 1) % 4), (dn, (ai + 2) % 4)]
                else:
                    moves = [(up, (ai + 1) % 4), (dn, (ai + 2) % 4)]
        for first, digit in moves:
            moved = list(label)
            moved[0] = first
            moved[i] = digit
            out.append(tuple(moved))
    return out


def _emissions(spec: TopologySpec, label: Label) -> list[Label]:
    """Raw rule output for one node: may contain duplicates, is not closed."""
    if spec.family is Family.HC:
        return _hc_emissions(label)
    if spec.family is Family.VQ:
        return _vq_emissions(label)
    if spec.family is Family.BH:
        return _bh_emissions(label)
    return _bvh_emissions(label)


def _neighbor_set(spec: TopologySpec, label: Label) -> tuple[Label, ...]:
    return tuple(sorted(set(_emissions(spec, spec.check_label(label)))))


def hc_neighbors(spec: TopologySpec, label: Label) -> tuple[Label, ...]:
    if spec.family is not Family.HC:
        raise UnsupportedFamilyError(f"expected hc spec, got {spec.family.value}")
    return _neighbor_set(spec, label)


def vq_neighbors(spec: TopologySpec, label: Label) -> tuple[Label, ...]:
    if spec.family is not Family.VQ:
        raise UnsupportedFamilyError(f"expected vq spec, got {spec.family.value}")
    return _neighbor_set(spec, label)


def bh_neighbors(spec: TopologySpec, label: Label) -> tuple[Label, ...]:
    if spec.family is not Family.BH:
        raise UnsupportedFamilyError(f"expected bh spec, got {spec.family.value}")
    return _neighbor_set(spec, label)


def bvh_neighbors(spec: TopologySpec, label: Label) -> tuple[Label, ...]:
    if spec.family is not Family.BVH:
        raise UnsupportedFamilyError(f"expected bvh spec, got {spec.family.value}")
    return _neighbor_set(spec, label)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph with lexicographically ordered nodes.

    Adjacency is stored as sorted node-index tuples; labels and indices
    correspond one-to-one through ``nodes``.
    """

    spec: TopologySpec
    nodes: tuple[Label, ...]
    adjacency: tuple[tuple[int, ...], ...]
    _index: dict[Label, int] = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self) -> None:
        if not self._index:
            self._index.update({lab: i for i, lab in enumerate(self.nodes)})

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def index_of(self, label: Label) -> int:
        try:
            return self._index[tuple(label)]
        except KeyError:
            raise MalformedLabelError(f"label {tuple(label)} not in graph") from None

    def neighbors(self, label: Label) -> tuple[Label, ...]:
        return tuple(self.nodes[j] for j in self.adjacency[self.index_of(label)])

    def degree(self, label: Label) -> int:
        return len(self.adjacency[self.index_of(label)])

    def has_edge(self, u: Label, v: Label) -> bool:
        return self.index_of(tuple(v)) in self.adjacency[self.index_of(tuple(u))]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Index pairs (i, j) with i < j, in sorted order."""
        for i, nbrs in enumerate(self.adjacency):
            for j in nbrs:
                if i < j:
                    yield (i, j)

    def degree_min_max(self) -> tuple[int, int]:
        degs = [len(a) for a in self.adjacency]
        return min(degs), max(degs)


def _components(adjacency: tuple[tuple[int, ...], ...]) -> list[list[int]]:
    seen = [False] * len(adjacency)
    comps = []
    for start in range(len(adjacency)):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        while queue:
            u = queue.pop()
            for w in adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def build_graph(spec: TopologySpec) -> Graph:
    """Materialize a family rule into an explicit, audited edge set.

    Applies the rule at every node, takes the symmetric closure (an edge
    exists iff either endpoint emits it), and verifies the result is a
    connected simple graph.
    """
    if spec.node_count > MAX_NODES:
        raise ValueError(
            f"{spec.family.value} dimension {spec.dimension} has {spec.node_count} "
            f"nodes, above the build cap of {MAX_NODES}"
        )
    nodes = tuple(spec.all_labels())
    index = {lab: i for i, lab in enumerate(nodes)}
    neighbor_sets: list[set[int]] = [set() for _ in nodes]
    for i, label in enumerate(nodes):
        for emitted in _emissions(spec, label):
            if emitted == label:
                raise ValueError(f"rule emitted a self-loop at {label}")
            j = index[emitted]
            neighbor_sets[i].add(j)
            neighbor_sets[j].add(i)  # symmetric closure
    adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
    comps = _components(adjacency)
    if len(comps) > 1:
        parts = tuple(tuple(nodes[i] for i in comp) for comp in comps)
        raise DisconnectedGraphError(
            f"{spec.family.value} dimension {spec.dimension} built "
            f"{len(comps)} components instead of 1",
            parts,
        )
    return Graph(spec=spec, nodes=nodes, adjacency=adjacency)


def matching_pairs(graph: Graph) -> dict[Label, tuple[Label, ...]]:
    """For each node, the other nodes with exactly the same neighbor set."""
    by_neighborhood: dict[tuple[int, ...], list[int]] = {}
    for i, nbrs in enumerate(graph.adjacency):
        by_neighborhood.setdefault(nbrs, []).append(i)
    table: dict[Label, tuple[Label, ...]] = {}
    for group in by_neighborhood.values():
        for i in group:
            table[graph.nodes[i]] = tuple(graph.nodes[j] for j in group if j != i)
    return {lab: table[lab] for lab in graph.nodes}


@dataclass(frozen=True)
class AdjacencyAuditReport:
    """What the literal rules emitted versus the closed graph they define."""

    family: Family
    dimension: int
    expected_degree: int
    node_count: int
    edge_count: int
    # nodes whose closed-graph degree differs from the family's regular degree
    degree_violations: tuple[tuple[Label, int], ...]
    # ordered (u, w): u emits w but w does not emit u; the closure repaired these
    asymmetric_pair_count: int
    asymmetric_pair_samples: tuple[tuple[Label, Label], ...]
    # total excess emissions (same neighbor listed more than once by one node)
    duplicate_emission_count: int
    matching_pairs: dict[Label, tuple[Label, ...]]

    @property
    def nodes_with_partner(self) -> int:
        return sum(1 for partners in self.matching_pairs.values() if partners)

    @property
    def every_node_has_unique_partner(self) -> bool:
        return all(len(p) == 1 for p in self.matching_pairs.values())

    def to_json(self) -> str:
        doc = {
            "family": self.family.value,
            "dimension": self.dimension,
            "expected_degree": self.expected_degree,
            "node_count": self.node_count,
            "edge_count": self.edge_count,
            "degree_violations": [
                [list(lab), deg] for lab, deg in self.degree_violations
            ],
            "asymmetric_pair_count": self.asymmetric_pair_count,
            "asymmetric_pair_samples": [
                [list(u), list(w)] for u, w in self.asymmetric_pair_samples
            ],
            "duplicate_emission_count": self.duplicate_emission_count,
            "matching_pairs": {
                ",".join(map(str, lab)): [list(p) for p in partners]
                for lab, partners in self.matching_pairs.items()
            },
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"

    def to_text(self) -> str:
        lines = [
            f"adjacency audit: {self.family.value} dimension {self.dimension}",
            f"  nodes: {self.node_count}  edges: {self.edge_count}  "
            f"expected degree: {self.expected_degree}",
            f"  degree violations: {len(self.degree_violations)}",
        ]
        for lab, deg in self.degree_violations[:10]:
            lines.append(f"    {lab} has degree {deg}")
        lines.append(
            f"  asymmetric rule emissions repaired by closure: "
            f"{self.asymmetric_pair_count}"
        )
        for u, w in self.asymmetric_pair_samples[:10]:
            lines.append(f"    {u} emits {w} but not conversely")
        lines.append(f"  duplicate rule emissions: {self.duplicate_emission_count}")
        lines.append(f"  nodes with a matching partner: {self.nodes_with_partner}")
        paired = [
            (lab, partners)
            for lab, partners in self.matching_pairs.items()
            if partners
        ]
        for lab, partners in paired[:16]:
            lines.append(f"    {lab} <-> {', '.join(map(str, partners))}")
        if len(paired) > 16:
            lines.append(f"    ... {len(paired) - 16} more")
        return "\n".join(lines) + "\n"


def audit_graph(spec: TopologySpec) -> AdjacencyAuditReport:
    """Build the graph and report every discrepancy between rules and closure.

    Findings are data, not errors: the audit always completes.
    """
    graph = build_graph(spec)
    emitted: list[set[int]] = []
    duplicate_count = 0
    for label in graph.nodes:
        raw = _emissions(spec, label)
        uniq = {graph.index_of(w) for w in raw}
        duplicate_count += len(raw) - len(uniq)
        emitted.append(uniq)
    asymmetric: list[tuple[Label, Label]] = []
    for i, outs in enumerate(emitted):
        for j in outs:
            if i not in emitted[j]:
                asymmetric.append((graph.nodes[i], graph.nodes[j]))
    violations = tuple(
        (graph.nodes[i], len(adj))
        for i, adj in enumerate(graph.adjacency)
        if len(adj) != spec.expected_degree
    )
    return AdjacencyAuditReport(
        family=spec.family,
        dimension=spec.dimension,
        expected_degree=spec.expected_degree,
        node_count=graph.node_count,
        edge_count=graph.edge_count,
        degree_violations=violations,
        asymmetric_pair_count=len(asymmetric),
        asymmetric_pair_samples=tuple(asymmetric[:10]),
        duplicate_emission_count=duplicate_count,
        matching_pairs=matching_pairs(graph),
    )


def graph_to_json(graph: Graph) -> str:
    """Canonical serialization: identical graphs give identical bytes."""
    doc = {
        "family": graph.spec.family.value,
        "dimension": graph.spec.dimension,
        "radix": graph.spec.radix,
        "nodes": [list(lab) for lab in graph.nodes],
        "edges": [list(e) for e in graph.edges()],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def graph_from_json(text: str) -> Graph:
    doc = json.loads(text)
    spec = TopologySpec(Family.parse(doc["family"]), int(doc["dimension"]))
    if int(doc["radix"]) != spec.radix:
        raise ValueError(
            f"radix {doc['radix']} does not match family {spec.family.value}"
        )
    nodes = tuple(spec.check_label(tuple(lab)) for lab in doc["nodes"])
    if list(nodes) != sorted(set(nodes)):
        raise ValueError("node list must be sorted and duplicate-free")
    neighbor_sets: list[set[int]] = [set() for _ in nodes]
    for i, j in doc["edges"]:
        i, j = int(i), int(j)
        if not (0 <= i < len(nodes) and 0 <= j < len(nodes)) or i == j:
            raise ValueError(f"bad edge [{i}, {j}]")
        if j in neighbor_sets[i]:
            raise ValueError(f"duplicate edge [{i}, {j}]")
        neighbor_sets[i].add(j)
        neighbor_sets[j].add(i)
    adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
    comps = _components(adjacency)
    if len(comps) > 1:
        parts = tuple(tuple(nodes[i] for i in comp) for comp in comps)
        raise DisconnectedGraphError(
            f"serialized graph has {len(comps)} components", parts
        )
    return Graph(spec=spec, nodes=nodes, adjacency=adjacency)
