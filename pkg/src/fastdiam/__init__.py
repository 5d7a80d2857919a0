"""Exact maximum distance (diameter) of 2D point sets.

Two elimination stages shrink the input before any pairwise scanning:
a polar subdivision around the bounding-box center discards everything
that provably cannot be an endpoint of the farthest pair, then a uniform
grid over the survivors prunes whole cell pairs by distance bounds.  The
handful of remaining candidates is scanned exhaustively, so the result is
exact, and it is verified against an all-pairs reference throughout the
test suite.
"""

from .bench import BenchRecord, SweepRow, run_bench, run_sweep
from .generators import DISTRIBUTIONS, DatasetSpec, generate, halton_element
from .geometry import (
    SECTOR_COUNT,
    Aabb,
    OrientedEdge,
    nearest_corner,
    outer_product,
    pseudo_angle,
    squared_distance,
)
from .grid import CellPair, Grid, build_grid, cell_pair_bounds, max_over_pairs, prune_pairs
from .oracle import brute_force_diameter
from .pipeline import DiameterResult, PipelineStats, default_k, diameter
from .polar import (
    InitialPolygon,
    PolarState,
    RecheckResult,
    Sector,
    compute_aabb_and_extremals,
    initial_polygon_filter,
    initial_r_min,
    polar_divide,
    recheck,
)

__version__ = "0.1.0"

__all__ = [
    "Aabb",
    "BenchRecord",
    "CellPair",
    "DISTRIBUTIONS",
    "DatasetSpec",
    "DiameterResult",
    "Grid",
    "InitialPolygon",
    "OrientedEdge",
    "PipelineStats",
    "PolarState",
    "RecheckResult",
    "SECTOR_COUNT",
    "Sector",
    "SweepRow",
    "brute_force_diameter",
    "build_grid",
    "cell_pair_bounds",
    "compute_aabb_and_extremals",
    "default_k",
    "diameter",
    "generate",
    "halton_element",
    "initial_polygon_filter",
    "initial_r_min",
    "max_over_pairs",
    "nearest_corner",
    "outer_product",
    "polar_divide",
    "prune_pairs",
    "pseudo_angle",
    "recheck",
    "run_bench",
    "run_sweep",
    "squared_distance",
]
