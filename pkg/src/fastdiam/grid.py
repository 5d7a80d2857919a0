"""Uniform-grid phase: scatter survivors, bound cell pairs, prune, and scan.

Survivors are hashed into a k x k grid over the bounding box.  For every
pair of nonempty cells the shortest and largest possible point distances
follow from the cell index deltas alone.  The largest of the shortest
distances is a certified lower bound on the set diameter, so any cell pair
whose largest distance falls below it cannot contain the farthest pair and
is skipped; the few remaining pairs are scanned exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .geometry import Aabb

# Upper bound on elements per temporary distance block in the pair scans.
_BLOCK_ELEMS = 4_000_000

# Pairs are pruned only when provably useless beyond float64 noise on the
# bound arithmetic, so a farthest pair can never be lost to rounding.
_PRUNE_SLACK = 1.0 - 16.0 * np.finfo(np.float64).eps


@dataclass
class Grid:
    """k x k subdivision of the AABB; only nonempty cells are stored.

    Cell index is ``row * k + col`` with rows growing along +y.
    """

    k: int
    dx: float
    dy: float
    x_min: float
    y_min: float
    cells: dict[int, np.ndarray]
    _ids: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self._ids = np.array(sorted(self.cells), dtype=np.intp)

    @property
    def nonempty_ids(self) -> np.ndarray:
        return self._ids

    @property
    def n_nonempty(self) -> int:
        return len(self._ids)


class CellPair(NamedTuple):
    """Unordered cell pair with its squared distance bounds."""

    i: int
    j: int
    d_min2: float
    d_max2: float


def build_grid(points, aabb: Aabb, k: int) -> Grid:
    """Scatter points into the grid.

    Row/column come from flooring the offset over the cell size, clamped so
    points on the max boundary land in the last cell instead of overflowing.
    """
    if k < 1:
        raise ValueError("grid size k must be >= 1")
    aabb.require_positive_extent()
    pts = np.asarray(points, dtype=np.float64)
    dx = aabb.width / k
    dy = aabb.height / k
    col = np.clip((pts[:, 0] - aabb.x_min) / dx, 0, k - 1).astype(np.intp)
    row = np.clip((pts[:, 1] - aabb.y_min) / dy, 0, k - 1).astype(np.intp)
    idx = row * k + col

    order = np.argsort(idx, kind="stable")  # stable: keep input order per cell
    sorted_idx = idx[order]
    sorted_pts = pts[order]
    ids, starts = np.unique(sorted_idx, return_index=True)
    bounds = np.append(starts, len(pts))
    cells = {
        int(ids[c]): sorted_pts[bounds[c] : bounds[c + 1]] for c in range(len(ids))
    }
    return Grid(k=k, dx=dx, dy=dy, x_min=aabb.x_min, y_min=aabb.y_min, cells=cells)


def cell_pair_bounds(grid: Grid, i: int, j: int) -> CellPair:
    """Shortest and largest squared distance achievable between two cells.

    With column/row deltas dc, dr the nearest corners are ``max(dc-1, 0)``
    cells apart per axis and the farthest corners ``dc + 1``; both bounds
    come from the index deltas, exact for lattice-aligned cells.
    """
    if i > j:
        i, j = j, i
    k = grid.k
    dc = abs(i % k - j % k)
    dr = abs(i // k - j // k)
    d_min2, d_max2 = _bounds_from_deltas(dc, dr, grid.dx, grid.dy)
    return CellPair(i, j, float(d_min2), float(d_max2))


def _bounds_from_deltas(dc, dr, dx, dy):
    gap_x = np.maximum(dc - 1, 0) * dx
    gap_y = np.maximum(dr - 1, 0) * dy
    span_x = (dc + 1) * dx
    span_y = (dr + 1) * dy
    return gap_x * gap_x + gap_y * gap_y, span_x * span_x + span_y * span_y


def prune_pairs(grid: Grid) -> list[CellPair]:
    """Keep only the cell pairs that can still contain the farthest pair.

    Enumerates all unordered pairs of nonempty cells (self-pairs included:
    with few survivors the farthest pair may share a cell), takes the
    maximum over the shortest distances, and drops every pair whose largest
    distance falls below that bound.
    """
    ids = grid.nonempty_ids
    if len(ids) == 0:
        raise ValueError("grid has no points")
    rows = ids // grid.k
    cols = ids % grid.k
    iu, ju = np.triu_indices(len(ids))
    dc = np.abs(cols[iu] - cols[ju])
    dr = np.abs(rows[iu] - rows[ju])
    d_min2, d_max2 = _bounds_from_deltas(dc, dr, grid.dx, grid.dy)
    d_max_cell = d_min2.max()
    keep = d_max2 >= d_max_cell * _PRUNE_SLACK
    return [
        CellPair(int(ids[a]), int(ids[b]), float(lo), float(hi))
        for a, b, lo, hi in zip(iu[keep], ju[keep], d_min2[keep], d_max2[keep])
    ]


def max_over_pairs(
    grid: Grid, pairs: list[CellPair]
) -> tuple[float, np.ndarray, np.ndarray]:
    """Exhaustive scan of the surviving cell pairs.

    Returns the maximum squared distance and the first point pair achieving
    it, scanning pairs in list order and points row-major within each pair.
    """
    best = -1.0
    best_p = best_q = None
    for pair in pairs:
        p_i = grid.cells[pair.i]
        p_j = grid.cells[pair.j]
        if pair.i == pair.j:
            if len(p_i) < 2:
                continue
            d2, a, b = _max_within(p_i)
        else:
            d2, a, b = _max_between(p_i, p_j)
        if d2 > best:
            best = d2
            best_p, best_q = a, b
    if best_p is None:
        raise ValueError("no point pair among the given cell pairs")
    return best, best_p, best_q


def _max_between(pts_a: np.ndarray, pts_b: np.ndarray):
    xa, ya = pts_a[:, 0], pts_a[:, 1]
    xb, yb = pts_b[:, 0], pts_b[:, 1]
    block = max(1, _BLOCK_ELEMS // max(1, len(pts_b)))
    best = -1.0
    bi = bj = 0
    for lo in range(0, len(pts_a), block):
        hi = min(lo + block, len(pts_a))
        d2 = (xa[lo:hi, None] - xb[None, :]) ** 2 + (ya[lo:hi, None] - yb[None, :]) ** 2
        flat = int(np.argmax(d2))
        r, c = divmod(flat, len(pts_b))
        if d2[r, c] > best:
            best = float(d2[r, c])
            bi, bj = lo + r, c
    return best, pts_a[bi], pts_b[bj]


def _max_within(pts: np.ndarray):
    x, y = pts[:, 0], pts[:, 1]
    n = len(pts)
    block = max(1, _BLOCK_ELEMS // n)
    best = -1.0
    bi, bj = 0, 1
    for lo in range(0, n - 1, block):
        hi = min(lo + block, n - 1)
        d2 = (x[lo:hi, None] - x[None, :]) ** 2 + (y[lo:hi, None] - y[None, :]) ** 2
        # mask ordered duplicates and self-pairs: keep j > i only
        cols = np.arange(n)[None, :]
        rows = np.arange(lo, hi)[:, None]
        d2[cols <= rows] = -1.0
        flat = int(np.argmax(d2))
        r, c = divmod(flat, n)
        if d2[r, c] > best:
            best = float(d2[r, c])
            bi, bj = lo + r, c
    return best, pts[bi], pts[bj]
