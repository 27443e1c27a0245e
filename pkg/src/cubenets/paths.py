"""Maximum sets of internally vertex-disjoint paths between node pairs.

The count comes from unit-capacity max flow on the node-split transform
(each non-terminal node becomes an in/out arc of capacity 1), so it equals
the pairwise vertex connectivity. Augmentation scans neighbors in ascending
index order and the flow decomposition always takes the smallest available
next hop, so the returned path set is deterministic and reproducible.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .topology import Graph, Label


@dataclass(frozen=True)
class DisjointPathSet:
    """Internally vertex-disjoint simple paths from source to target."""

    source: Label
    target: Label
    paths: tuple[tuple[Label, ...], ...]

    def validate(self, graph: Graph) -> None:
        seen_internal: set[Label] = set()
        for path in self.paths:
            if path[0] != self.source or path[-1] != self.target:
                raise AssertionError(f"path {path} endpoints are wrong")
            if len(set(path)) != len(path):
                raise AssertionError(f"path {path} repeats a node")
            for u, v in zip(path, path[1:]):
                if not graph.has_edge(u, v):
                    raise AssertionError(f"{u} -- {v} is not an edge")
            internal = set(path[1:-1])
            if internal & seen_internal:
                raise AssertionError(
                    f"paths share internal nodes {internal & seen_internal}"
                )
            seen_internal |= internal

    def to_json(self) -> str:
        doc = {
            "source": list(self.source),
            "target": list(self.target),
            "paths": [[list(lab) for lab in path] for path in self.paths],
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"

    def to_text(self) -> str:
        lines = [
            f"{len(self.paths)} vertex-disjoint paths "
            f"{self.source} -> {self.target}"
        ]
        for path in self.paths:
            hops = " - ".join(",".join(map(str, lab)) for lab in path)
            lines.append(f"  [{len(path) - 1} links] {hops}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PathClass:
    count: int  # paths in this class
    links: int  # edges per path
    processors: int  # intermediate nodes per path


@dataclass(frozen=True)
class PathClassSet:
    """Disjoint paths grouped by (links, intermediate processors)."""

    source: Label
    target: Label
    classes: tuple[PathClass, ...]

    @property
    def total_paths(self) -> int:
        return sum(c.count for c in self.classes)

    def as_triples(self) -> tuple[tuple[int, int, int], ...]:
        return tuple((c.count, c.links, c.processors) for c in self.classes)

    def to_text(self) -> str:
        parts = [
            f"{c.count} path(s) with {c.links} links / {c.processors} processors"
            for c in self.classes
        ]
        return "; ".join(parts)


def max_disjoint_paths(graph: Graph, source: Label, target: Label) -> DisjointPathSet:
    """A maximum-cardinality set of internally vertex-disjoint source-target paths."""
    s = graph.index_of(source)
    t = graph.index_of(target)
    if s == t:
        raise ValueError("source and target must differ")

    # Node-split transform: node v becomes 2v (in) -> 2v+1 (out), capacity 1;
    # each undirected edge u--w becomes out(u)->in(w) and out(w)->in(u).
    n = graph.node_count
    capacity: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    for v in range(n):
        if v != s and v != t:
            capacity[2 * v][2 * v + 1] = 1
    for u in range(n):
        for w in graph.adjacency[u]:
            capacity[2 * u + 1][2 * w] = 1
    src, sink = 2 * s + 1, 2 * t

    def augment() -> bool:
        parent: dict[int, int] = {src: src}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if u == sink:
                break
            for w in sorted(capacity[u]):
                if capacity[u][w] > 0 and w not in parent:
                    parent[w] = u
                    queue.append(w)
        if sink not in parent:
            return False
        v = sink
        while v != src:
            u = parent[v]
            capacity[u][v] -= 1
            capacity[v][u] = capacity[v].get(u, 0) + 1
            v = u
        return True

    flow = 0
    while augment():
        flow += 1

    # Net forward flow between original nodes; opposite unit flows cancel.
    next_hops: list[set[int]] = [set() for _ in range(n)]
    for u in range(n):
        for w in graph.adjacency[u]:
            sent = 1 - capacity[2 * u + 1].get(2 * w, 1)
            returned = 1 - capacity[2 * w + 1].get(2 * u, 1)
            if sent - returned > 0:
                next_hops[u].add(w)

    paths = []
    for _ in range(flow):
        node = s
        path = [graph.nodes[s]]
        while node != t:
            step = min(next_hops[node])
            next_hops[node].discard(step)
            node = step
            path.append(graph.nodes[node])
        paths.append(tuple(path))
    result = DisjointPathSet(
        source=graph.nodes[s], target=graph.nodes[t], paths=tuple(paths)
    )
    result.validate(graph)
    return result


def classify_paths(path_set: DisjointPathSet) -> PathClassSet:
    """Group paths by (edge count, internal node count) with multiplicities."""
    tally: dict[tuple[int, int], int] = {}
    for path in path_set.paths:
        links = len(path) - 1
        processors = len(path) - 2
        tally[(links, processors)] = tally.get((links, processors), 0) + 1
    classes = tuple(
        PathClass(count=k, links=m, processors=p)
        for (m, p), k in sorted(tally.items())
    )
    return PathClassSet(
        source=path_set.source, target=path_set.target, classes=classes
    )


def brute_force_disjoint_count(graph: Graph, source: Label, target: Label) -> int:
    """Independent check: enumerate simple paths and pack a maximum disjoint set.

    Exponential; refuse anything bigger than the small graphs it exists for.
    """
    if graph.node_count > 20:
        raise ValueError("brute-force enumeration is limited to 20 nodes")
    s = graph.index_of(source)
    t = graph.index_of(target)
    if s == t:
        raise ValueError("source and target must differ")

    interiors: list[frozenset[int]] = []
    stack = [(s, [s])]
    while stack:
        u, path = stack.pop()
        if u == t:
            interiors.append(frozenset(path[1:-1]))
            continue
        for w in graph.adjacency[u]:
            if w not in path:
                stack.append((w, path + [w]))

    best = 0

    def extend(start: int, used: frozenset[int], count: int) -> None:
        nonlocal best
        best = max(best, count)
        if count + (len(interiors) - start) <= best:
            return
        for idx in range(start, len(interiors)):
            if not (interiors[idx] & used):
                extend(idx + 1, used | interiors[idx], count + 1)

    extend(0, frozenset(), 0)
    return best
