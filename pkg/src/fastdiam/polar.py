"""Polar elimination phase: extremal polygon, 8-sector division, recheck.

The phase runs in three steps over a point set:

1. Build the counter-clockwise polygon of the axis-extremal points and drop
   everything strictly inside it (an interior point can never be an endpoint
   of the farthest pair).
2. Sweep the remaining points once, assigning each to one of 8 angular
   sectors around the box center.  Each sector tracks the point closest to
   its quadrant corner; the 8 tracked points form a growing polygon whose
   chords cut away interior points on the fly.
3. Recheck every survivor against the union polygon built from the extremal
   vertices and the final per-sector minima.

Elimination is always strict: a point exactly on a cutting chord (or within
float64 noise of it) is retained, so the surviving set provably contains a
farthest pair of the original input.

``polar_divide`` mutates per-sector state and is sequential over one call;
distinct calls are independent.  ``recheck`` is read-only over frozen state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import (
    SECTOR_COUNT,
    Aabb,
    OrientedEdge,
    _pseudo_angle_uv,
    boundary_point,
    corner_distance_sq,
    cross_side,
    pseudo_angle,
)

# Dimensionless slack when intersecting sector mid-axis rays with polygon
# edges; covers rounding when a ray exits exactly through a vertex.
_RAY_EPS = 1e-9

# Points per block in the streaming scans; sized so a block's working set
# stays cache-resident, which keeps per-point cost flat from 1e4 to 1e7.
_CHUNK = 32_768


@dataclass(frozen=True)
class InitialPolygon:
    """CCW polygon of the input's axis-extremal points (1 to 4 vertices)."""

    vertices: np.ndarray  # (m, 2) float64, counter-clockwise

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def has_area(self) -> bool:
        """True unless the vertices are fewer than 3 or exactly collinear."""
        return self.n_vertices >= 3 and self.signed_area != 0.0

    @property
    def signed_area(self) -> float:
        v = self.vertices
        if len(v) < 3:
            return 0.0
        x, y = v[:, 0], v[:, 1]
        xn, yn = np.roll(x, -1), np.roll(y, -1)
        return float(np.sum(x * yn - xn * y) / 2.0)

    def oriented_edges(self) -> list[OrientedEdge]:
        v = self.vertices
        n = len(v)
        return [
            OrientedEdge(tuple(v[i]), tuple(v[(i + 1) % n] - v[i]))
            for i in range(n)
        ]


@dataclass
class Sector:
    """One of the 8 angular wedges with its tracked corner-minimal point."""

    index: int
    r_min_point: np.ndarray  # (2,)
    r_min_dist2: float  # squared distance of r_min_point to its quadrant corner
    kept: np.ndarray  # (m_i, 2) points retained in this sector, stream order


@dataclass
class EliminationWitness:
    """Audit trail: each eliminated point with the chord that removed it.

    Chords are stored with endpoint ``a`` at the smaller unwrapped
    pseudo-angle, so the eliminated point is strictly on the left
    (center) side of the directed line a -> b.
    """

    points: np.ndarray  # (m, 2)
    chord_a: np.ndarray  # (m, 2)
    chord_b: np.ndarray  # (m, 2)

    def __len__(self) -> int:
        return len(self.points)


@dataclass
class PolarState:
    """Result of one polar division pass.

    ``kept_points`` preserves the input stream order across sectors, which
    keeps the whole pipeline deterministic for a fixed input ordering.
    """

    aabb: Aabb
    initial: InitialPolygon
    sectors: list[Sector]
    eliminated_count: int
    kept_points: np.ndarray  # (n_kept, 2), input order
    kept_phi: np.ndarray = field(repr=False, default=None)  # cached angles
    witnesses: EliminationWitness | None = None


@dataclass
class RecheckResult:
    survivors: np.ndarray  # (n, 2), input order
    witnesses: EliminationWitness | None = None


def compute_aabb_and_extremals(points) -> tuple[Aabb, InitialPolygon]:
    """Single pass: tight bounding box plus the CCW extremal polygon.

    The polygon vertices are the first-encountered points achieving min-x,
    min-y, max-x and max-y, in that (counter-clockwise) cyclic order, with
    exact coordinate duplicates removed.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.size == 0:
        raise ValueError("empty input: need at least one point")
    i_xmin, i_xmax = _argminmax_chunked(pts[:, 0])
    i_ymin, i_ymax = _argminmax_chunked(pts[:, 1])
    x, y = pts[:, 0], pts[:, 1]
    aabb = Aabb(float(x[i_xmin]), float(x[i_xmax]), float(y[i_ymin]), float(y[i_ymax]))

    # left, bottom, right, top is counter-clockwise
    verts: list[np.ndarray] = []
    for i in (i_xmin, i_ymin, i_xmax, i_ymax):
        p = pts[i]
        if not any(p[0] == q[0] and p[1] == q[1] for q in verts):
            verts.append(p)
    return aabb, InitialPolygon(np.array(verts))


def initial_polygon_filter(points, poly: InitialPolygon) -> np.ndarray:
    """Drop points strictly inside the extremal polygon.

    A point survives iff its side test against at least one polygon edge is
    non-positive (up to float noise); with fewer than 3 vertices everything
    passes through.
    """
    pts = np.asarray(points, dtype=np.float64)
    if poly.n_vertices < 3:
        return pts
    keep = np.empty(len(pts), dtype=bool)
    for lo in range(0, len(pts), _CHUNK):
        hi = min(lo + _CHUNK, len(pts))
        _outside_polygon_mask(
            pts[lo:hi, 0], pts[lo:hi, 1], poly.vertices, out=keep[lo:hi]
        )
    return pts[keep]


def _outside_polygon_mask(x, y, vertices, out):
    """``out[i] = True`` iff point i is not strictly inside the CCW polygon."""
    out[:] = False
    n = len(vertices)
    for i in range(n):
        ax, ay = vertices[i]
        bx, by = vertices[(i + 1) % n]
        f, band = cross_side(ax, ay, bx, by, x, y)
        out |= f <= band
    return out


def _argminmax_chunked(values: np.ndarray) -> tuple[int, int]:
    """First argmin and argmax in one streaming pass."""
    i_min = i_max = 0
    v_min = v_max = values[0]
    for lo in range(0, len(values), _CHUNK):
        chunk = values[lo : lo + _CHUNK]
        a = int(np.argmin(chunk))
        b = int(np.argmax(chunk))
        if chunk[a] < v_min:
            v_min, i_min = chunk[a], lo + a
        if chunk[b] > v_max:
            v_max, i_max = chunk[b], lo + b
    return i_min, i_max


def initial_r_min(aabb: Aabb, poly: InitialPolygon, sector_index: int) -> np.ndarray:
    """Intersection of a sector's mid-axis ray with the polygon boundary.

    The ray starts at the box center and leaves at pseudo-angle
    ``sector_index + 0.5``.  With the center inside (or on) the polygon the
    boundary crossing always exists; if the center sits exactly on the
    boundary and the ray points outward, the crossing is the center itself.
    """
    if poly.n_vertices < 3:
        raise ValueError("initial polygon needs at least 3 vertices")
    aabb.require_positive_extent()
    cx, cy = aabb.center
    bx_, by_ = boundary_point(aabb, sector_index + 0.5)
    dx, dy = bx_ - cx, by_ - cy

    best_t = None
    v = poly.vertices
    n = len(v)
    for i in range(n):
        ax, ay = v[i]
        ex, ey = v[(i + 1) % n] - v[i]
        denom = dx * ey - dy * ex
        if denom == 0.0:
            continue
        t = ((ax - cx) * ey - (ay - cy) * ex) / denom
        s = ((ax - cx) * dy - (ay - cy) * dx) / denom
        if t >= -_RAY_EPS and -_RAY_EPS <= s <= 1.0 + _RAY_EPS:
            t = max(t, 0.0)
            if best_t is None or t < best_t:
                best_t = t
    if best_t is None:
        # center numerically outside a sliver polygon; fall back to center
        return np.array([cx, cy])
    return np.array([cx + best_t * dx, cy + best_t * dy])


def polar_divide(
    survivors,
    aabb: Aabb,
    poly: InitialPolygon,
    record_witnesses: bool = False,
) -> PolarState:
    """One sequential sweep dividing points into sectors with elimination.

    For each point in input order: if it is strictly closer to its quadrant
    corner than the sector's current minimum, it becomes the new minimum and
    is kept (this implicitly moves the two chords incident to the sector).
    Otherwise it is tested against the chord between the angularly adjacent
    sector minima on its side (the one with the smaller angle when the point
    lies below the sector minimum's angle, the other one above), and dropped
    iff strictly on the center side.

    The sweep vectorizes between minimum replacements: replacements are
    exactly the strict running minima of the per-sector corner distances,
    which are known up front, so the chord geometry is constant on each
    interval between them.  Semantics are identical to the point-by-point
    loop.
    """
    pts = np.asarray(survivors, dtype=np.float64)
    aabb.require_positive_extent()
    m = len(pts)
    x, y = pts[:, 0], pts[:, 1]
    phi, sect, cdist2 = _classify_points(pts, aabb)

    cx, cy = aabb.center
    r_pts = np.empty((SECTOR_COUNT, 2))
    r_phi = np.empty(SECTOR_COUNT)
    r_d2 = np.empty(SECTOR_COUNT)
    for i in range(SECTOR_COUNT):
        r = initial_r_min(aabb, poly, i)
        r_pts[i] = r
        # a ray exiting at the center itself has no angle of its own;
        # order it by its mid-axis
        r_phi[i] = i + 0.5 if (r[0] == cx and r[1] == cy) else pseudo_angle(aabb, r)
        r_d2[i] = corner_distance_sq(aabb, r)

    # promotion schedule: strict running minima of corner distance per sector
    promoted = np.zeros(m, dtype=bool)
    for s in range(SECTOR_COUNT):
        idx = np.nonzero(sect == s)[0]
        if len(idx) == 0:
            continue
        d = cdist2[idx]
        prev = np.empty(len(d))
        prev[0] = r_d2[s]
        if len(d) > 1:
            np.minimum(r_d2[s], np.minimum.accumulate(d[:-1]), out=prev[1:])
        promoted[idx] = d < prev
    events = np.nonzero(promoted)[0]

    kept = np.ones(m, dtype=bool)
    wit_points: list[np.ndarray] = []
    wit_a: list[np.ndarray] = []
    wit_b: list[np.ndarray] = []

    def run_chords(lo: int, hi: int) -> None:
        if lo >= hi:
            return
        s = sect[lo:hi]
        use_minus = phi[lo:hi] < r_phi[s]
        ia = np.where(use_minus, (s - 1) % SECTOR_COUNT, s)
        ib = np.where(use_minus, s, (s + 1) % SECTOR_COUNT)
        a = r_pts[ia]
        b = r_pts[ib]
        f, band = cross_side(a[:, 0], a[:, 1], b[:, 0], b[:, 1], x[lo:hi], y[lo:hi])
        elim = f > band  # strictly on the center side of the chord
        kept[lo:hi] = ~elim
        if record_witnesses and elim.any():
            wit_points.append(pts[lo:hi][elim])
            wit_a.append(a[elim])
            wit_b.append(b[elim])

    start = 0
    for e in events:
        run_chords(start, int(e))
        s = int(sect[e])
        r_pts[s] = pts[e]
        r_phi[s] = phi[e]
        r_d2[s] = cdist2[e]
        start = int(e) + 1
    run_chords(start, m)

    sectors = [
        Sector(
            index=s,
            r_min_point=r_pts[s].copy(),
            r_min_dist2=float(r_d2[s]),
            kept=pts[(sect == s) & kept],
        )
        for s in range(SECTOR_COUNT)
    ]
    witnesses = None
    if record_witnesses:
        witnesses = EliminationWitness(
            points=_concat(wit_points),
            chord_a=_concat(wit_a),
            chord_b=_concat(wit_b),
        )
    return PolarState(
        aabb=aabb,
        initial=poly,
        sectors=sectors,
        eliminated_count=int(m - kept.sum()),
        kept_points=pts[kept],
        kept_phi=phi[kept] if m else np.empty(0),
        witnesses=witnesses,
    )


def recheck(state: PolarState, record_witnesses: bool = False) -> RecheckResult:
    """Retest all kept points against the union polygon.

    The polygon vertices are the extremal vertices plus the final sector
    minima, deduplicated and sorted by pseudo-angle (angular ties keep the
    vertex farthest from the center, which preserves the extremal points).
    Each point is tested against the chord between the two vertices whose
    angles bracket its own; strictly center-side points are dropped.  A
    polygon vertex tests exactly zero against its own chord and therefore
    always survives.
    """
    aabb = state.aabb
    cx, cy = aabb.center
    r_final = np.array([s.r_min_point for s in state.sectors])
    # sector minima still sitting exactly on the center carry no direction
    off_center = (r_final[:, 0] != cx) | (r_final[:, 1] != cy)
    cand = np.vstack([state.initial.vertices, r_final[off_center]])
    cand = np.unique(cand, axis=0)

    vphi = np.atleast_1d(pseudo_angle(aabb, cand))
    d2c = (cand[:, 0] - cx) ** 2 + (cand[:, 1] - cy) ** 2
    order = np.lexsort((d2c, vphi))
    vphi_sorted = vphi[order]
    # keep the farthest vertex of each angular tie group (the last one)
    last_of_group = np.ones(len(order), dtype=bool)
    last_of_group[:-1] = vphi_sorted[:-1] != vphi_sorted[1:]
    verts = cand[order][last_of_group]
    vphi_sorted = vphi_sorted[last_of_group]

    pts = state.kept_points
    if len(pts) == 0:
        return RecheckResult(
            survivors=pts,
            witnesses=EliminationWitness(*(np.empty((0, 2)),) * 3)
            if record_witnesses
            else None,
        )
    ph = state.kept_phi
    if ph is None:
        ph = np.atleast_1d(pseudo_angle(aabb, pts))

    nv = len(verts)
    j = np.searchsorted(vphi_sorted, ph, side="right") - 1
    j = np.where(j < 0, nv - 1, j)  # angles below the first vertex wrap around
    a = verts[j]
    b = verts[(j + 1) % nv]
    f, band = cross_side(a[:, 0], a[:, 1], b[:, 0], b[:, 1], pts[:, 0], pts[:, 1])
    elim = f > band

    witnesses = None
    if record_witnesses:
        witnesses = EliminationWitness(
            points=pts[elim], chord_a=a[elim], chord_b=b[elim]
        )
    return RecheckResult(survivors=pts[~elim], witnesses=witnesses)


def _classify_points(pts: np.ndarray, aabb: Aabb):
    """Pseudo-angle, sector index and quadrant-corner distance per point.

    Streaming equivalent of :func:`fastdiam.geometry.pseudo_angle` plus
    :func:`fastdiam.geometry.corner_distance_sq` (same expressions, same
    results bit for bit), blocked so large inputs stay cache-friendly.
    """
    m = len(pts)
    phi = np.empty(m)
    sect = np.empty(m, dtype=np.intp)
    cdist2 = np.empty(m)
    cx, cy = aabb.center
    half_w = aabb.width / 2.0
    half_h = aabb.height / 2.0
    for lo in range(0, m, _CHUNK):
        hi = min(lo + _CHUNK, m)
        x = pts[lo:hi, 0]
        y = pts[lo:hi, 1]
        ph = _pseudo_angle_uv((x - cx) / half_w, (y - cy) / half_h)
        phi[lo:hi] = ph
        sect[lo:hi] = ph.astype(np.intp)  # floor: phi is in [0, 8)
        dx = x - np.where(x >= cx, aabb.x_max, aabb.x_min)
        dy = y - np.where(y >= cy, aabb.y_max, aabb.y_min)
        cdist2[lo:hi] = dx * dx + dy * dy
    return phi, sect, cdist2


def _concat(chunks: list[np.ndarray]) -> np.ndarray:
    if not chunks:
        return np.empty((0, 2))
    return np.concatenate(chunks, axis=0)
