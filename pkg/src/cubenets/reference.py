"""Published reference values the table diff reports compare against.

These constants mirror previously published measurement tables for the four
families, embedded so diffing never needs network access. Where our own BFS
measurements contradict a published cell, the diff report shows the cell as
failing — the discrepancy is surfaced, not patched over.
"""

from __future__ import annotations

# Mean distance from the all-zeros node (self-distance counted in the
# denominator), per family and dimension. Tolerance reflects the two-decimal
# printing of the source table.
AVG_DISTANCE_REFERENCE: dict[str, dict[int, float]] = {
    "hc": {1: 1.0, 2: 1.0, 3: 1.5, 4: 2.0, 5: 2.5, 6: 3.0},
    "bh": {1: 1.0, 2: 2.25, 3: 3.156, 4: 4.14, 5: 5.12, 6: 6.11},
    "bvh": {1: 1.0, 2: 1.93, 3: 2.83, 4: 3.82, 5: 4.81, 6: 5.79},
}
AVG_DISTANCE_TOLERANCE = 0.07

# Cost-effectiveness factor 1/(1 + rho*n), printed to three decimals.
CEF_REFERENCE: dict[tuple[int, float], float] = {
    (1, 0.1): 0.909, (1, 0.2): 0.833, (1, 0.3): 0.769,
    (2, 0.1): 0.833, (2, 0.2): 0.714, (2, 0.3): 0.625,
    (3, 0.1): 0.769, (3, 0.2): 0.625, (3, 0.3): 0.526,
    (4, 0.1): 0.714, (4, 0.2): 0.555, (4, 0.3): 0.454,
    (5, 0.1): 0.666, (5, 0.2): 0.500, (5, 0.3): 0.400,
    (6, 0.1): 0.625, (6, 0.2): 0.454, (6, 0.3): 0.357,
}
CEF_TOLERANCE = 0.001

# Time-cost-effectiveness factor 2/(1 + rho*n + 2^(-2n)), five-decimal cells.
TCEF_REFERENCE: dict[tuple[int, float], float] = {
    (1, 0.1): 1.48148, (1, 0.2): 1.37931, (1, 0.3): 1.29032,
    (2, 0.1): 1.58415, (2, 0.2): 1.36752, (2, 0.3): 1.20300,
    (3, 0.1): 1.52019, (3, 0.2): 1.23791, (3, 0.3): 1.04404,
    (4, 0.1): 1.42459, (4, 0.2): 1.10870, (4, 0.3): 0.90748,
    (5, 0.1): 1.33246, (5, 0.2): 0.99950, (5, 0.3): 0.79968,
    (6, 0.1): 1.24981, (6, 0.2): 0.90899, (6, 0.3): 0.71422,
}
TCEF_TOLERANCE = 0.0001

RHO_GRID = (0.1, 0.2, 0.3)
DIMENSION_GRID = (1, 2, 3, 4, 5, 6)

# Worked terminal-reliability examples: path classes as (count, links,
# intermediate processors) and the values they evaluate to at the default
# component reliabilities.
RELIABILITY_CLASSES: dict[tuple[str, int], tuple[tuple[int, int, int], ...]] = {
    ("bvh", 2): ((2, 3, 2), (2, 4, 3)),
    ("bvh", 3): ((4, 5, 4), (2, 3, 2)),
}
RELIABILITY_REFERENCE: dict[tuple[str, int], float] = {
    ("bvh", 2): 0.8745,
    ("bvh", 3): 0.9059,
}
RELIABILITY_TOLERANCE = 0.0001

DEFAULT_R_LINK = 0.9
DEFAULT_R_PROC = 0.8
DEFAULT_LAMBDA_LINK = 0.0001  # failures per hour
DEFAULT_LAMBDA_PROC = 0.001
