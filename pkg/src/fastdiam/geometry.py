"""Scalar and vectorized 2D primitives shared by every pipeline phase.

Points are plain ``(x, y)`` pairs; point sets are float64 arrays of shape
``(n, 2)``.  Every function here broadcasts over leading axes, so the same
code serves both the hand-checkable scalar contracts and the hot vectorized
paths.  All operations are pure and thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

# Number of polar sectors around the bounding-box center. The pseudo-angle
# runs over [0, SECTOR_COUNT) with one unit per sector.
SECTOR_COUNT = 8

# Relative slack for orientation tests: cross products are trusted only
# outside +/- _GUARD * (magnitude of their two terms). Points inside the
# noise band are conservatively retained by the elimination phases.
_GUARD = 8.0 * np.finfo(np.float64).eps


@dataclass(frozen=True)
class Aabb:
    """Tight axis-aligned bounding box of a point set."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float

    def __post_init__(self):
        if not (self.x_min <= self.x_max and self.y_min <= self.y_max):
            raise ValueError("inverted bounding box")

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    @property
    def center(self) -> tuple[float, float]:
        return ((self.x_min + self.x_max) / 2.0, (self.y_min + self.y_max) / 2.0)

    @property
    def corners(self) -> np.ndarray:
        """The four corners, counter-clockwise from (x_min, y_min)."""
        return np.array(
            [
                [self.x_min, self.y_min],
                [self.x_max, self.y_min],
                [self.x_max, self.y_max],
                [self.x_min, self.y_max],
            ]
        )

    def require_positive_extent(self) -> None:
        if self.width == 0.0 or self.height == 0.0:
            raise ValueError("degenerate bounding box: zero width or height")


class OrientedEdge(NamedTuple):
    """Directed line through ``base`` along ``direction`` (nonzero)."""

    base: tuple[float, float]
    direction: tuple[float, float]


def squared_distance(a, b):
    """Squared Euclidean distance between points (broadcasts over arrays).

    Every distance comparison in the package goes through this expression,
    which keeps results bit-for-bit reproducible across code paths.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    dx = a[..., 0] - b[..., 0]
    dy = a[..., 1] - b[..., 1]
    return dx * dx + dy * dy


def outer_product(edge: OrientedEdge, p):
    """Signed side test of ``p`` against an oriented edge.

    Returns ``v_x * (p_y - base_y) - v_y * (p_x - base_x)``: positive iff
    ``p`` lies strictly left of the edge direction, zero iff collinear.
    """
    p = np.asarray(p, dtype=np.float64)
    bx, by = edge.base
    vx, vy = edge.direction
    return vx * (p[..., 1] - by) - vy * (p[..., 0] - bx)


def cross_side(ax, ay, bx, by, px, py):
    """Cross product of (B - A) with (P - A) plus its rounding-noise bound.

    Returns ``(f, guard)`` where ``f > guard`` certifies P strictly left of
    the directed line A->B and ``f < -guard`` certifies strictly right.
    ``|f| <= guard`` means the sign is below float64 noise and callers must
    treat the point as on the line.
    """
    t1 = (bx - ax) * (py - ay)
    t2 = (by - ay) * (px - ax)
    return t1 - t2, _GUARD * (np.abs(t1) + np.abs(t2))


def pseudo_angle(aabb: Aabb, p):
    """Monotone angle surrogate in [0, 8), uniform along the AABB perimeter.

    The ray from the box center through ``p`` is parameterized by where it
    crosses the box boundary: 0 at the right-edge midpoint, 1 at the
    top-right corner, increasing counter-clockwise at one unit per corner
    or edge midpoint.  Costs one division, no trigonometry.  ``p`` equal to
    the center maps to 0 by convention.

    Broadcasts over arrays of points shaped ``(..., 2)``.
    """
    aabb.require_positive_extent()
    p = np.asarray(p, dtype=np.float64)
    cx, cy = aabb.center
    u = (p[..., 0] - cx) / (aabb.width / 2.0)
    v = (p[..., 1] - cy) / (aabb.height / 2.0)
    return _pseudo_angle_uv(u, v)


def _pseudo_angle_uv(u, v):
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    au = np.abs(u)
    av = np.abs(v)
    nonzero = (u != 0.0) | (v != 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        r_vu = v / u
        r_uv = u / v
        phi = np.select(
            [
                nonzero & (u >= av) & (v >= 0.0),
                nonzero & (u >= av),
                v > au,
                (-u >= av) & (u < 0.0),
                -v > au,
            ],
            [r_vu, 8.0 + r_vu, 2.0 - r_uv, 4.0 + r_vu, 6.0 - r_uv],
            default=0.0,
        )
    # 8 + v/u can round up to 8.0 for v barely below zero; keep [0, 8) exact.
    phi = np.where(phi >= 8.0, 0.0, phi)
    if phi.ndim == 0:
        return float(phi)
    return phi


def boundary_point(aabb: Aabb, phi):
    """Inverse of :func:`pseudo_angle` restricted to the AABB boundary.

    Maps ``phi`` in [0, 8) to the boundary point with that pseudo-angle.
    """
    aabb.require_positive_extent()
    phi = np.asarray(phi, dtype=np.float64)
    u = np.select(
        [phi <= 1.0, phi <= 3.0, phi <= 5.0, phi <= 7.0],
        [1.0, 2.0 - phi, -1.0, phi - 6.0],
        default=1.0,
    )
    v = np.select(
        [phi <= 1.0, phi <= 3.0, phi <= 5.0, phi <= 7.0],
        [phi, 1.0, 4.0 - phi, -1.0],
        default=phi - 8.0,
    )
    cx, cy = aabb.center
    out = np.stack(
        [cx + u * (aabb.width / 2.0), cy + v * (aabb.height / 2.0)], axis=-1
    )
    if out.ndim == 1:
        return float(out[0]), float(out[1])
    return out


def nearest_corner(aabb: Aabb, p):
    """AABB corner in the same quadrant as ``p`` (ties go to +x / +y).

    Broadcasts; returns an array shaped like ``p``.
    """
    aabb.require_positive_extent()
    p = np.asarray(p, dtype=np.float64)
    cx, cy = aabb.center
    corner_x = np.where(p[..., 0] >= cx, aabb.x_max, aabb.x_min)
    corner_y = np.where(p[..., 1] >= cy, aabb.y_max, aabb.y_min)
    out = np.stack([corner_x, corner_y], axis=-1)
    return out


def corner_distance_sq(aabb: Aabb, p):
    """Squared distance from each point to its own quadrant corner."""
    return squared_distance(p, nearest_corner(aabb, p))
