"""All-pairs reference for the farthest-pair distance.

Two nested loops over every unordered pair, maximum of the squared
distances, one square root at the end.  The inner loop is a numpy slice so
the reference stays usable at 1e5 points, but the structure is the obvious
quadratic scan and is meant to stay that way: this module is the ground
truth the pipeline is verified against, not something to optimize.
"""

from __future__ import annotations

import math

import numpy as np


def brute_force_diameter(points) -> tuple[float, tuple[tuple[float, float], tuple[float, float]]]:
    """Exact diameter by scanning all pairs.

    Returns ``(distance, (p, q))`` where ``(p, q)`` is the first maximizing
    pair in lexicographic (i, j) scan order.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("expected an (n, 2) array of points")
    n = len(pts)
    if n < 2:
        raise ValueError("need at least 2 points")
    x, y = pts[:, 0], pts[:, 1]
    best = -math.inf
    best_i, best_j = 0, 1
    for i in range(n - 1):
        dx = x[i + 1 :] - x[i]
        dy = y[i + 1 :] - y[i]
        d2 = dx * dx + dy * dy
        j = int(np.argmax(d2))
        if d2[j] > best:
            best = float(d2[j])
            best_i, best_j = i, i + 1 + j
    p = (float(x[best_i]), float(y[best_i]))
    q = (float(x[best_j]), float(y[best_j]))
    return math.sqrt(best), (p, q)
