"""End-to-end diameter pipeline with per-phase statistics.

Phase order: bounding box and extremal polygon, interior-point discard,
polar sector division, recheck, uniform-grid pruning, exhaustive scan of
the surviving cell pairs.  All comparisons run on squared distances; the
single square root happens at the very end.

Inputs that defeat the polygon machinery get documented fallbacks: a point
set collapsed onto an axis-parallel line is answered directly from its
extremal spread, and any input whose extremal polygon has no area (fewer
than 3 distinct extremal vertices, or exactly collinear ones) goes to the
all-pairs reference scan.  Both fallbacks return the same result contract.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .geometry import Aabb, squared_distance
from .grid import build_grid, max_over_pairs, prune_pairs
from .oracle import brute_force_diameter
from .polar import compute_aabb_and_extremals, initial_polygon_filter, polar_divide, recheck

# Grid sizes are clamped to this window when chosen automatically.
_MIN_AUTO_K = 2
_MAX_AUTO_K = 256


@dataclass(frozen=True)
class PipelineStats:
    """Survivor counts per phase plus grid bookkeeping.

    The counts are non-increasing along the elimination chain.  For the
    degenerate fallbacks the grid fields are zero and the chain reflects
    the points actually handed to the final scan.
    """

    n_input: int
    n_after_initial_polygon: int
    n_after_polar: int
    n_after_recheck: int
    nonempty_cells: int
    pairs_total: int
    pairs_surviving: int
    k_used: int


@dataclass(frozen=True)
class DiameterResult:
    distance: float
    pair: tuple[tuple[float, float], tuple[float, float]]
    stats: PipelineStats
    phase_ms: dict[str, float]


def default_k(n_survivors: int) -> int:
    """Grid size targeting a few survivors per nonempty cell.

    ``ceil(sqrt(n / 4))`` clamped to [2, 256]; measured optima grow with the
    survivor count, and the sweep harness exists to tune per workload.
    """
    k = math.ceil(math.sqrt(n_survivors / 4.0))
    return min(max(k, _MIN_AUTO_K), _MAX_AUTO_K)


def diameter(points, k: int | None = None) -> DiameterResult:
    """Exact maximum pairwise distance of a 2D point set.

    ``k`` forces the grid size; by default :func:`default_k` picks one from
    the recheck survivor count.  Deterministic for a fixed input order and
    grid size.  Raises ``ValueError`` for fewer than 2 points, a malformed
    array, or non-finite coordinates.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("expected an (n, 2) array of points")
    if len(pts) < 2:
        raise ValueError("need at least 2 points")
    if not np.isfinite(pts).all():
        raise ValueError("non-finite coordinate in input")
    if k is not None and k < 1:
        raise ValueError("grid size k must be >= 1")

    n = len(pts)
    phase_ms: dict[str, float] = {}
    t0 = time.perf_counter()
    aabb, poly = compute_aabb_and_extremals(pts)
    phase_ms["extremals"] = _ms_since(t0)

    if aabb.width == 0.0 or aabb.height == 0.0:
        return _axis_degenerate_result(pts, aabb, n, phase_ms)

    t0 = time.perf_counter()
    if poly.has_area:
        survivors = initial_polygon_filter(pts, poly)
    else:
        survivors = pts
    phase_ms["initial_filter"] = _ms_since(t0)

    if not poly.has_area:
        # extremal polygon carries no interior: answer by reference scan
        t0 = time.perf_counter()
        dist, pair = brute_force_diameter(survivors)
        phase_ms["fallback_scan"] = _ms_since(t0)
        m = len(survivors)
        stats = PipelineStats(n, m, m, m, 0, 0, 0, 0)
        return DiameterResult(dist, pair, stats, phase_ms)

    t0 = time.perf_counter()
    state = polar_divide(survivors, aabb, poly)
    phase_ms["polar_divide"] = _ms_since(t0)

    t0 = time.perf_counter()
    rec = recheck(state)
    phase_ms["recheck"] = _ms_since(t0)

    k_used = k if k is not None else default_k(len(rec.survivors))
    t0 = time.perf_counter()
    grid = build_grid(rec.survivors, aabb, k_used)
    phase_ms["grid"] = _ms_since(t0)

    t0 = time.perf_counter()
    pairs = prune_pairs(grid)
    phase_ms["prune"] = _ms_since(t0)

    t0 = time.perf_counter()
    d2, p, q = max_over_pairs(grid, pairs)
    phase_ms["pair_scan"] = _ms_since(t0)

    m = grid.n_nonempty
    stats = PipelineStats(
        n_input=n,
        n_after_initial_polygon=len(survivors),
        n_after_polar=len(state.kept_points),
        n_after_recheck=len(rec.survivors),
        nonempty_cells=m,
        pairs_total=m * (m + 1) // 2,
        pairs_surviving=len(pairs),
        k_used=k_used,
    )
    pair = ((float(p[0]), float(p[1])), (float(q[0]), float(q[1])))
    return DiameterResult(math.sqrt(d2), pair, stats, phase_ms)


def _axis_degenerate_result(pts, aabb: Aabb, n, phase_ms) -> DiameterResult:
    # all points on one axis-parallel line: the spread along the live axis
    # is the answer, taken from the extremal points directly
    axis = 1 if aabb.width == 0.0 else 0
    i_lo = int(np.argmin(pts[:, axis]))
    i_hi = int(np.argmax(pts[:, axis]))
    p, q = pts[i_lo], pts[i_hi]
    d2 = float(squared_distance(p, q))
    stats = PipelineStats(n, 2, 2, 2, 0, 0, 0, 0)
    pair = ((float(p[0]), float(p[1])), (float(q[0]), float(q[1])))
    return DiameterResult(math.sqrt(d2), pair, stats, phase_ms)


def _ms_since(t0: float) -> float:
    return (time.perf_counter() - t0) * 1000.0
