"""Pixel-center rasterization of convex regions.

A pixel (px, py) belongs to a region iff its center (px + 0.5, py + 0.5)
satisfies the region predicate.  The vectorized evaluations here use the
same arithmetic expressions as the scalar predicates in `geometry`, so
the two paths agree bit for bit.
"""

from __future__ import annotations

import numpy as np

from .geometry import EPS, Circle, ConvexPolygon, PixelRect


def pixel_center_grid(rect: PixelRect) -> tuple[np.ndarray, np.ndarray]:
    """(xs, ys) pixel-center coordinates broadcastable to (height, width)."""
    xs = rect.x0 + 0.5 + np.arange(rect.width, dtype=np.float64)
    ys = rect.y0 + 0.5 + np.arange(rect.height, dtype=np.float64)
    return xs[np.newaxis, :], ys[:, np.newaxis]


def polygon_bits(poly: ConvexPolygon, rect: PixelRect) -> np.ndarray:
    """Boundary-inclusive convex polygon membership over a pixel rect."""
    if rect.is_empty():
        return np.zeros((rect.height, rect.width), dtype=bool)
    xs, ys = pixel_center_grid(rect)
    bits = np.ones((rect.height, rect.width), dtype=bool)
    v = poly.vertices
    n = len(v)
    for i in range(n):
        a = v[i]
        b = v[(i + 1) % n]
        cross = (b.x - a.x) * (ys - a.y) - (b.y - a.y) * (xs - a.x)
        bits &= cross >= -EPS
    return bits


def outside_circle_bits(circle: Circle, rect: PixelRect) -> np.ndarray:
    """Strict exterior of a circle over a pixel rect (boundary excluded)."""
    if rect.is_empty():
        return np.zeros((rect.height, rect.width), dtype=bool)
    xs, ys = pixel_center_grid(rect)
    dx = xs - circle.center.x
    dy = ys - circle.center.y
    return dx * dx + dy * dy > circle.radius * circle.radius
