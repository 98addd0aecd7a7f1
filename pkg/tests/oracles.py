"""Independent brute-force oracles used only by the test suite.

These deliberately do not share code paths with the library: the hull
oracle enumerates supporting edges in O(n^3), the circle oracle
enumerates all pair/triple candidate circles in O(n^4), the mask oracle
re-evaluates the membership predicate per pixel in scalar Python, and
the stats oracle accumulates per pixel with Python ints.
"""

from __future__ import annotations

import math

import numpy as np


def brute_hull(points: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Convex hull vertex cycle (CCW, starting at the lexicographic min)
    by testing every directed point pair as a supporting edge.

    Assumes points in general position (no duplicates, no collinear
    triples), which holds with probability 1 for random float inputs.
    """
    pts = np.asarray(points, dtype=np.float64)
    n = len(pts)
    # cross[i, j, k] = cross(pj - pi, pk - pi)
    d = pts[np.newaxis, :, :] - pts[:, np.newaxis, :]  # d[i, j] = pj - pi
    cross = d[:, :, np.newaxis, 0] * d[:, np.newaxis, :, 1] - d[:, :, np.newaxis, 1] * d[:, np.newaxis, :, 0]
    succ: dict[int, int] = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            others = cross[i, j, :]
            mask = np.ones(n, dtype=bool)
            mask[i] = mask[j] = False
            if np.all(others[mask] > 0.0):
                succ[i] = j
    assert succ, "no supporting edges found"
    start = min(succ, key=lambda i: (pts[i, 0], pts[i, 1]))
    cycle = [start]
    cur = succ[start]
    while cur != start:
        cycle.append(cur)
        cur = succ[cur]
    return [tuple(pts[i]) for i in cycle]


def brute_mec(points: list[tuple[float, float]]) -> tuple[float, float, float]:
    """Minimum enclosing circle by enumerating every pair-diameter and
    triple-circumscribed candidate circle."""
    pts = [(float(x), float(y)) for x, y in points]
    if len(pts) == 1:
        return (pts[0][0], pts[0][1], 0.0)

    def encloses(cx: float, cy: float, r: float) -> bool:
        slack = r * 1e-12 + 1e-12
        return all(math.hypot(x - cx, y - cy) <= r + slack for x, y in pts)

    best: tuple[float, float, float] | None = None
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            cx = (pts[i][0] + pts[j][0]) / 2.0
            cy = (pts[i][1] + pts[j][1]) / 2.0
            r = math.hypot(pts[i][0] - cx, pts[i][1] - cy)
            if encloses(cx, cy, r) and (best is None or r < best[2]):
                best = (cx, cy, r)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                c = _circumcircle(pts[i], pts[j], pts[k])
                if c is None:
                    continue
                if encloses(*c) and (best is None or c[2] < best[2]):
                    best = c
    assert best is not None
    return best


def _circumcircle(a, b, c):
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        return None
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    r = max(math.hypot(ax - ux, ay - uy), math.hypot(bx - ux, by - uy), math.hypot(cx - ux, cy - uy))
    return (ux, uy, r)


def scalar_sclera_predicate(px: float, py: float, hull_vertices, circle_center, circle_radius) -> bool:
    """Scalar re-statement of the sclera membership predicate: inside the
    hull (boundary-inclusive, eps -1e-9) and strictly outside the circle."""
    n = len(hull_vertices)
    for i in range(n):
        ax, ay = hull_vertices[i]
        bx, by = hull_vertices[(i + 1) % n]
        cross = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
        if cross < -1e-9:
            return False
    dx = px - circle_center[0]
    dy = py - circle_center[1]
    return dx * dx + dy * dy > circle_radius * circle_radius


def rasterize_mask_oracle(rect, hull_vertices, circle_center, circle_radius) -> np.ndarray:
    """Per-pixel scalar rasterization over a PixelRect-like (x0,y0,x1,y1)."""
    x0, y0, x1, y1 = rect
    out = np.zeros((y1 - y0, x1 - x0), dtype=bool)
    for py in range(y0, y1):
        for px in range(x0, x1):
            out[py - y0, px - x0] = scalar_sclera_predicate(
                px + 0.5, py + 0.5, hull_vertices, circle_center, circle_radius
            )
    return out


def rasterize_polygon_oracle(rect, hull_vertices) -> np.ndarray:
    """Hull-only rasterization (no circle exclusion)."""
    x0, y0, x1, y1 = rect
    out = np.zeros((y1 - y0, x1 - x0), dtype=bool)
    for py in range(y0, y1):
        for px in range(x0, x1):
            out[py - y0, px - x0] = scalar_sclera_predicate(
                px + 0.5, py + 0.5, hull_vertices, (0.0, 0.0), -1.0
            )
    return out


def stats_oracle(pixels: list[tuple[int, int, int]]) -> dict:
    """Naive per-pixel accumulation of all RegionStats fields."""
    n = len(pixels)
    assert n > 0
    total = 0
    per = [0, 0, 0]
    luma_values = []
    hist_luma = [0] * 256
    hist_chan = [[0] * 256 for _ in range(3)]
    for r, g, b in pixels:
        total += r + g + b
        per[0] += r
        per[1] += g
        per[2] += b
        y = (299 * r + 587 * g + 114 * b) / 1000
        luma_values.append(y)
        hist_luma[math.floor(y + 0.5)] += 1
        hist_chan[0][r] += 1
        hist_chan[1][g] += 1
        hist_chan[2][b] += 1
    mean_luma = sum(luma_values) / n
    var = sum((y - mean_luma) ** 2 for y in luma_values) / n
    return {
        "pixel_count": n,
        "mean_all_channels": total / (3 * n),
        "mean_per_channel": (per[0] / n, per[1] / n, per[2] / n),
        "mean_luma": mean_luma,
        "std_luma": math.sqrt(var),
        "histogram_luma": hist_luma,
        "histogram_per_channel": hist_chan,
    }
