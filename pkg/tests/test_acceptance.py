"""Acceptance criteria, one test per criterion.

Each test prints exactly one line, ``ACCEPTANCE <n>: PASS|FAIL -- detail``
(run pytest with ``-s`` to see the lines for passing tests too). Criteria
whose published worked values the built graphs contradict are asserted as
stated and fail honestly; the detail line carries the measured value.
"""

import random
import time
from fractions import Fraction

from cubenets import (
    audit_graph,
    average_distance,
    bfs_distances,
    broadcast_schedule,
    brute_force_disjoint_count,
    build_graph,
    cef,
    diameter,
    max_disjoint_paths,
    route_greedy,
    route_oracle,
    schedule_violations,
    tcef,
    terminal_reliability,
    terminal_reliability_curve,
)
from cubenets.reference import (
    AVG_DISTANCE_REFERENCE,
    AVG_DISTANCE_TOLERANCE,
    CEF_REFERENCE,
    CEF_TOLERANCE,
    RELIABILITY_CLASSES,
    RELIABILITY_REFERENCE,
    RELIABILITY_TOLERANCE,
    TCEF_REFERENCE,
    TCEF_TOLERANCE,
)
from cubenets.topology import Family, TopologySpec


def _report(number: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} -- {detail}", flush=True)
    assert ok, f"criterion {number}: {detail}"


def test_criterion_01_structural_theorems(built):
    started = time.monotonic()
    problems = []
    for n in range(1, 6):
        g = built("bvh", n)
        deg_min, deg_max = g.degree_min_max()
        if g.node_count != 2 ** (2 * n):
            problems.append(f"n={n}: {g.node_count} nodes")
        if g.edge_count != n * 2 ** (2 * n):
            problems.append(f"n={n}: {g.edge_count} edges")
        if (deg_min, deg_max) != (2 * n, 2 * n):
            problems.append(f"n={n}: degree range {(deg_min, deg_max)}")
        for i, nbrs in enumerate(g.adjacency):
            if i in nbrs or len(set(nbrs)) != len(nbrs):
                problems.append(f"n={n}: node {i} breaks simplicity")
                break
            if any(i not in g.adjacency[j] for j in nbrs):
                problems.append(f"n={n}: node {i} breaks symmetry")
                break
        # connectivity is enforced at build time; reaching here means connected
    elapsed = time.monotonic() - started
    if elapsed >= 10.0:
        problems.append(f"took {elapsed:.1f}s (budget 10s)")
    _report(
        1,
        not problems,
        problems[0] if problems else
        f"dimensions 1..5: 2^(2n) nodes, n*2^(2n) edges, 2n-regular, connected, "
        f"simple in {elapsed:.1f}s",
    )


def test_criterion_02_diameter(built):
    measured = {n: diameter(built("bvh", n)) for n in range(1, 6)}
    required = {1: 2, 2: 3, 3: 4}
    closed = {4: 6, 5: 7}  # n + floor(n/2), recorded for comparison only
    recorded = ", ".join(
        f"n={n}: measured {measured[n]} vs closed form {closed[n]}"
        f"{' (deviation)' if measured[n] != closed[n] else ''}"
        for n in (4, 5)
    )
    ok = all(measured[n] == required[n] for n in required)
    _report(
        2,
        ok,
        f"measured diameters n=1..3 are {measured[1]},{measured[2]},{measured[3]} "
        f"(required {required[1]},{required[2]},{required[3]}); {recorded}",
    )


def test_criterion_03_average_distance(built):
    problems = []
    origin_1 = average_distance(built("bvh", 1), "from_origin")
    if origin_1 != Fraction(1):
        problems.append(f"BVH_1 mean {origin_1} != 1.0")
    for n in (2, 3):
        value = float(average_distance(built("bvh", n), "from_origin"))
        ref = AVG_DISTANCE_REFERENCE["bvh"][n]
        if abs(value - ref) > AVG_DISTANCE_TOLERANCE:
            problems.append(
                f"BVH_{n} mean {value:.6f} outside {ref} +/- "
                f"{AVG_DISTANCE_TOLERANCE}"
            )
    for n in range(1, 7):
        value = average_distance(built("hc", n), "from_origin")
        if value != Fraction(n, 2):
            problems.append(f"HC_{n} mean {value} != {Fraction(n, 2)}")
    _report(
        3,
        not problems,
        "; ".join(problems) if problems else
        "BVH_1 = 1.0 exactly, BVH_2/BVH_3 within 0.07 of references, "
        "HC column = n/2 exactly for n=1..6",
    )


def test_criterion_04_cef_table():
    worst = max(
        abs(cef(n, rho) - ref) for (n, rho), ref in CEF_REFERENCE.items()
    )
    _report(
        4,
        worst <= CEF_TOLERANCE,
        f"all 18 cells within {CEF_TOLERANCE} (worst |delta| = {worst:.6f})",
    )


def test_criterion_05_tcef_table():
    worst = max(
        abs(tcef(n, rho) - ref) for (n, rho), ref in TCEF_REFERENCE.items()
    )
    _report(
        5,
        worst <= TCEF_TOLERANCE,
        f"all 18 cells within {TCEF_TOLERANCE} (worst |delta| = {worst:.6f}); "
        f"n=1 rho=0.1 gives {tcef(1, 0.1):.5f}",
    )


def test_criterion_06_disjoint_paths(built):
    started = time.monotonic()
    problems = []
    g1 = built("bvh", 1)
    for s in g1.nodes:
        for t in g1.nodes:
            if s == t:
                continue
            ps = max_disjoint_paths(g1, s, t)
            ps.validate(g1)
            if len(ps.paths) != 2:
                problems.append(f"BVH_1 {s}->{t}: {len(ps.paths)} paths")
            if brute_force_disjoint_count(g1, s, t) != len(ps.paths):
                problems.append(f"BVH_1 {s}->{t}: flow != brute force")
    g2 = built("bvh", 2)
    for i, s in enumerate(g2.nodes):
        for t in g2.nodes[i + 1:]:
            ps = max_disjoint_paths(g2, s, t)
            ps.validate(g2)
            if len(ps.paths) != 4:
                problems.append(f"BVH_2 {s}->{t}: {len(ps.paths)} paths")
    g3 = built("bvh", 3)
    rng = random.Random(20260819)
    for _ in range(200):
        s, t = rng.sample(g3.nodes, 2)
        ps = max_disjoint_paths(g3, s, t)
        ps.validate(g3)
        if len(ps.paths) != 6:
            problems.append(f"BVH_3 {s}->{t}: {len(ps.paths)} paths")
    elapsed = time.monotonic() - started
    if elapsed >= 60.0:
        problems.append(f"took {elapsed:.1f}s (budget 60s)")
    _report(
        6,
        not problems,
        problems[0] if problems else
        f"2n disjoint paths for all BVH_1/BVH_2 pairs and 200 random BVH_3 "
        f"pairs; flow matches brute force on BVH_1; {elapsed:.1f}s",
    )


def test_criterion_07_terminal_reliability():
    problems = []
    for key in (("bvh", 2), ("bvh", 3)):
        value = terminal_reliability(RELIABILITY_CLASSES[key], 0.9, 0.8)
        ref = RELIABILITY_REFERENCE[key]
        if abs(value - ref) > RELIABILITY_TOLERANCE:
            problems.append(f"{key}: {value:.6f} not within 1e-4 of {ref}")
    times = [float(t) for t in range(0, 5001, 100)]
    curve = terminal_reliability_curve(
        RELIABILITY_CLASSES[("bvh", 2)], 0.0001, 0.001, times
    )
    if curve[0][1] != 1.0:
        problems.append(f"curve at t=0 is {curve[0][1]}")
    values = [v for _, v in curve]
    if any(a < b - 1e-15 for a, b in zip(values, values[1:])):
        problems.append("curve is not nonincreasing")
    _report(
        7,
        not problems,
        "; ".join(problems) if problems else
        f"class products give "
        f"{terminal_reliability(RELIABILITY_CLASSES[('bvh', 2)], 0.9, 0.8):.4f} and "
        f"{terminal_reliability(RELIABILITY_CLASSES[('bvh', 3)], 0.9, 0.8):.4f}; "
        f"curve starts at 1.0 and is nonincreasing over 0..5000h",
    )


def test_criterion_08_broadcast(built):
    problems = []
    rounds1 = broadcast_schedule(built("bvh", 1), (0,)).round_count
    if rounds1 != 2:
        problems.append(f"BVH_1 rounds {rounds1} != 2")
    rounds2 = broadcast_schedule(built("bvh", 2), (0, 0)).round_count
    if rounds2 != 3:
        problems.append(f"BVH_2 rounds {rounds2} != 3")
    g3 = built("bvh", 3)
    rng = random.Random(8)
    for root in [g3.nodes[i] for i in rng.sample(range(g3.node_count), 50)]:
        violations = schedule_violations(g3, broadcast_schedule(g3, root))
        if violations:
            problems.append(f"root {root}: {violations[0]}")
            break
    _report(
        8,
        not problems,
        "; ".join(problems) if problems else
        "BVH_1 completes in 2 rounds, BVH_2 in 3; coverage and "
        "single-reception hold for 50 random BVH_3 roots",
    )


def test_criterion_09_routing(built):
    problems = []
    g2 = built("bvh", 2)
    cap = diameter(g2) + 2
    worst = 0
    for s in g2.nodes:
        for t in g2.nodes:
            if s == t:
                continue
            trace = route_greedy(g2, s, t)
            trace.validate(g2)
            worst = max(worst, trace.length)
            if trace.length > cap:
                problems.append(f"greedy {s}->{t} took {trace.length} hops")
    for n in (1, 2):
        g = built("bvh", n)
        for s in g.nodes:
            dist = bfs_distances(g, s)
            for t in g.nodes:
                if route_oracle(g, s, t).length != dist[t]:
                    problems.append(f"oracle {s}->{t} is not shortest")
    _report(
        9,
        not problems,
        problems[0] if problems else
        f"greedy reaches every BVH_2 target (worst {worst} hops <= diameter+2 "
        f"= {cap}); oracle equals BFS distance on all BVH_1/BVH_2 pairs",
    )


def test_criterion_10_matching_pair_audits():
    problems = []
    for n in (1, 2, 3):
        report = audit_graph(TopologySpec(Family.BH, n))
        if not report.every_node_has_unique_partner:
            problems.append(f"BH_{n}: not every node has exactly one partner")
        if report.degree_violations:
            problems.append(f"BH_{n}: degree violations")
    bvh_report = audit_graph(TopologySpec(Family.BVH, 2))
    rendered = bvh_report.to_text()
    if not rendered or "matching partner" not in rendered:
        problems.append("BVH_2 audit report was not emitted")
    paired = bvh_report.nodes_with_partner
    _report(
        10,
        not problems,
        "; ".join(problems) if problems else
        f"BH_1..3 all have exactly one identical-neighborhood partner per "
        f"node; BVH_2 audit completed (reported {paired} paired nodes, "
        f"no assertion)",
    )
