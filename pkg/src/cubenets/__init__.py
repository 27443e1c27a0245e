"""Construction and analysis of hypercube-family interconnection networks."""

from .comms import (
    BroadcastSchedule,
    RouteTrace,
    broadcast_schedule,
    route_greedy,
    route_oracle,
    schedule_violations,
)
from .metrics import (
    MetricsReport,
    average_distance,
    bfs_distances,
    cef,
    closed_form_report,
    cost,
    diameter,
    distance_profiles_uniform,
    eccentricity,
    metrics_report,
    tcef,
    traffic_density,
)
from .paths import (
    DisjointPathSet,
    PathClass,
    PathClassSet,
    brute_force_disjoint_count,
    classify_paths,
    max_disjoint_paths,
)
from .reliability import (
    ReliabilityParams,
    component_reliability,
    derive_and_evaluate,
    exact_two_terminal_reliability,
    farthest_node,
    terminal_reliability,
    terminal_reliability_curve,
)
from .topology import (
    AdjacencyAuditReport,
    DisconnectedGraphError,
    Family,
    Graph,
    MalformedLabelError,
    TopologySpec,
    UnsupportedFamilyError,
    audit_graph,
    bh_neighbors,
    build_graph,
    bvh_neighbors,
    graph_from_json,
    graph_to_json,
    hc_neighbors,
    matching_pairs,
    vq_neighbors,
)

__version__ = "0.1.0"

__all__ = [
    "AdjacencyAuditReport",
    "BroadcastSchedule",
    "DisconnectedGraphError",
    "DisjointPathSet",
    "Family",
    "Graph",
    "MalformedLabelError",
    "MetricsReport",
    "PathClass",
    "PathClassSet",
    "ReliabilityParams",
    "RouteTrace",
    "TopologySpec",
    "UnsupportedFamilyError",
    "audit_graph",
    "average_distance",
    "bfs_distances",
    "bh_neighbors",
    "broadcast_schedule",
    "brute_force_disjoint_count",
    "build_graph",
    "bvh_neighbors",
    "cef",
    "classify_paths",
    "closed_form_report",
    "component_reliability",
    "cost",
    "derive_and_evaluate",
    "diameter",
    "distance_profiles_uniform",
    "eccentricity",
    "exact_two_terminal_reliability",
    "farthest_node",
    "graph_from_json",
    "graph_to_json",
    "hc_neighbors",
    "matching_pairs",
    "max_disjoint_paths",
    "metrics_report",
    "route_greedy",
    "route_oracle",
    "schedule_violations",
    "tcef",
    "terminal_reliability",
    "terminal_reliability_curve",
    "traffic_density",
    "vq_neighbors",
]
