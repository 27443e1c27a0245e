"""Greedy digit-correction routing, shortest-path oracle, and all-port broadcast.

The greedy router corrects the highest differing digit position first; when no
neighbor fixes it, it falls back to any neighbor strictly closer to the target
(always available on a connected graph), so it provably terminates. The oracle
returns true shortest paths and is the yardstick the greedy lengths are
measured against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .metrics import _bfs_indices
from .topology import Family, Graph, Label, UnsupportedFamilyError


@dataclass(frozen=True)
class RouteTrace:
    source: Label
    target: Label
    hops: tuple[Label, ...]
    policy: str  # "greedy" | "oracle"

    @property
    def length(self) -> int:
        return len(self.hops) - 1

    def validate(self, graph: Graph) -> None:
        if self.hops[0] != self.source or self.hops[-1] != self.target:
            raise AssertionError("trace endpoints are wrong")
        if len(set(self.hops)) != len(self.hops):
            raise AssertionError("trace repeats a node")
        for u, v in zip(self.hops, self.hops[1:]):
            if not graph.has_edge(u, v):
                raise AssertionError(f"{u} -- {v} is not an edge")

    def to_text(self) -> str:
        route = " -> ".join(",".join(map(str, lab)) for lab in self.hops)
        return f"{self.policy} route ({self.length} hops): {route}\n"


def route_oracle(graph: Graph, source: Label, target: Label) -> RouteTrace:
    """A true shortest path, tie-broken by lexicographically smallest next hop."""
    s = graph.index_of(source)
    t = graph.index_of(target)
    dist_to_target = _bfs_indices(graph.adjacency, t)
    hops = [graph.nodes[s]]
    node = s
    while node != t:
        node = min(
            (w for w in graph.adjacency[node] if dist_to_target[w] == dist_to_target[node] - 1),
            key=lambda w: graph.nodes[w],
        )
        hops.append(graph.nodes[node])
    return RouteTrace(
        source=graph.nodes[s], target=graph.nodes[t], hops=tuple(hops), policy="oracle"
    )


def route_greedy(graph: Graph, source: Label, target: Label) -> RouteTrace:
    """Correct the highest differing digit; fall back to BFS descent when stuck.

    At each step, candidates that make every digit from the highest differing
    position upward agree with the target are preferred (smallest BFS distance
    to the target first, then lexicographic). If no neighbor achieves that,
    the router takes the lexicographically smallest strictly-closer neighbor.
    """
    if graph.spec.family is not Family.BVH:
        raise UnsupportedFamilyError(
            f"greedy routing is defined for bvh only, got {graph.spec.family.value}"
        )
    s = graph.index_of(source)
    t = graph.index_of(target)
    target_label = graph.nodes[t]
    n = graph.spec.dimension
    dist_to_target = _bfs_indices(graph.adjacency, t)

    node = s
    hops = [graph.nodes[s]]
    budget = graph.node_count + graph.spec.expected_degree
    while node != t:
        budget -= 1
        if budget < 0:
            raise RuntimeError("greedy routing exceeded its hop budget")
        label = graph.nodes[node]
        highest = max(i for i in range(n) if label[i] != target_label[i])
        fixing = [
            w
            for w in graph.adjacency[node]
            if graph.nodes[w][highest:] == target_label[highest:]
        ]
        if fixing:
            node = min(fixing, key=lambda w: (dist_to_target[w], graph.nodes[w]))
        else:
            node = min(
                (w for w in graph.adjacency[node] if dist_to_target[w] == dist_to_target[node] - 1),
                key=lambda w: graph.nodes[w],
            )
        hops.append(graph.nodes[node])
    return RouteTrace(
        source=graph.nodes[s], target=graph.nodes[t], hops=tuple(hops), policy="greedy"
    )


@dataclass(frozen=True)
class BroadcastSchedule:
    """One-to-all broadcast rounds under the all-port model.

    ``rounds[r]`` holds the (sender, receiver) pairs of round r+1; every node
    other than the root receives exactly once.
    """

    root: Label
    rounds: tuple[tuple[tuple[Label, Label], ...], ...]

    @property
    def round_count(self) -> int:
        return len(self.rounds)

    def to_json(self) -> str:
        doc = {
            "root": list(self.root),
            "rounds": [
                [[list(snd), list(rcv)] for snd, rcv in rnd] for rnd in self.rounds
            ],
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"

    def to_text(self) -> str:
        lines = [f"broadcast from {self.root}: {self.round_count} rounds"]
        for r, rnd in enumerate(self.rounds, start=1):
            lines.append(f"  round {r}:")
            for snd, rcv in rnd:
                lines.append(f"    {snd} -> {rcv}")
        return "\n".join(lines) + "\n"


def broadcast_schedule(graph: Graph, root: Label) -> BroadcastSchedule:
    """BFS-layer schedule: every newly reachable node is sent to by its
    lowest-label already-informed neighbor; rounds = eccentricity of the root."""
    r = graph.index_of(root)
    dist = _bfs_indices(graph.adjacency, r)
    depth = max(dist)
    rounds = []
    for layer in range(1, depth + 1):
        pairs = []
        for v in range(graph.node_count):
            if dist[v] != layer:
                continue
            sender = min(
                (w for w in graph.adjacency[v] if dist[w] == layer - 1),
                key=lambda w: graph.nodes[w],
            )
            pairs.append((graph.nodes[sender], graph.nodes[v]))
        rounds.append(tuple(sorted(pairs)))
    return BroadcastSchedule(root=graph.nodes[r], rounds=tuple(rounds))


def schedule_violations(graph: Graph, schedule: BroadcastSchedule) -> list[str]:
    """Structural checks; an empty list means the schedule is valid."""
    problems = []
    informed = {schedule.root}
    received: dict[Label, int] = {}
    for r, rnd in enumerate(schedule.rounds, start=1):
        fanout: dict[Label, int] = {}
        for snd, rcv in rnd:
            if snd not in informed:
                problems.append(f"round {r}: sender {snd} not informed yet")
            if not graph.has_edge(snd, rcv):
                problems.append(f"round {r}: {snd} -> {rcv} is not an edge")
            received[rcv] = received.get(rcv, 0) + 1
            fanout[snd] = fanout.get(snd, 0) + 1
        for snd, k in fanout.items():
            if k > graph.degree(snd):
                problems.append(
                    f"round {r}: sender {snd} uses {k} ports, degree is "
                    f"{graph.degree(snd)}"
                )
        informed |= {rcv for _, rcv in rnd}
    for rcv, k in received.items():
        if k != 1:
            problems.append(f"{rcv} received {k} times")
    missing = set(graph.nodes) - informed
    if missing:
        problems.append(f"{len(missing)} nodes never informed")
    if schedule.root in received:
        problems.append("root received a message")
    return problems
