"""Exact 2-D geometry primitives for eye-region segmentation.

Coordinates are pixels with the origin at the top-left corner, x growing
rightward and y growing downward.  Polygons are counter-clockwise in the
numeric sense (positive shoelace area).  All arithmetic is double
precision; comparisons use an absolute epsilon of 1e-9 unless a function
documents otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateInput, EmptyInput

EPS = 1e-9


class Point2D(NamedTuple):
    x: float
    y: float


class Circle(NamedTuple):
    center: Point2D
    radius: float


@dataclass(frozen=True)
class PixelRect:
    """Integer pixel rectangle, inclusive-exclusive: [x0,x1) x [y0,y1)."""

    x0: int
    y0: int
    x1: int
    y1: int

    def __post_init__(self) -> None:
        if self.x0 > self.x1 or self.y0 > self.y1:
            raise ValueError(f"inverted rect {self}")

    @property
    def width(self) -> int:
        return self.x1 - self.x0

    @property
    def height(self) -> int:
        return self.y1 - self.y0

    def is_empty(self) -> bool:
        return self.width == 0 or self.height == 0

    def intersect(self, other: "PixelRect") -> "PixelRect":
        x0 = max(self.x0, other.x0)
        y0 = max(self.y0, other.y0)
        x1 = max(x0, min(self.x1, other.x1))
        y1 = max(y0, min(self.y1, other.y1))
        return PixelRect(x0, y0, x1, y1)


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon, vertices counter-clockwise, no repeats."""

    vertices: tuple[Point2D, ...]

    def __post_init__(self) -> None:
        v = self.vertices
        if len(v) < 3:
            raise ValueError("polygon needs at least 3 vertices")
        n = len(v)
        for i in range(n):
            a, b, c = v[i], v[(i + 1) % n], v[(i + 2) % n]
            if _cross(a, b, c) <= 0.0:
                raise ValueError(f"vertices not strictly convex CCW at index {i}")

    @property
    def signed_area(self) -> float:
        v = self.vertices
        acc = 0.0
        for i in range(len(v)):
            a, b = v[i], v[(i + 1) % len(v)]
            acc += a.x * b.y - b.x * a.y
        return acc / 2.0

    def translated(self, dx: float, dy: float) -> "ConvexPolygon":
        return ConvexPolygon(tuple(Point2D(p.x + dx, p.y + dy) for p in self.vertices))


def _cross(o: Point2D, a: Point2D, b: Point2D) -> float:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def convex_hull(points: Sequence[tuple[float, float]]) -> ConvexPolygon:
    """Convex hull via Andrew's monotone chain.

    Collinear points are dropped so the result is strictly convex; sort
    ties break lexicographically (x, then y).  Raises DegenerateInput for
    fewer than 3 points or an all-collinear set.
    """
    if len(points) < 3:
        raise DegenerateInput(f"convex hull needs >= 3 points, got {len(points)}")
    pts = sorted({(float(x), float(y)) for x, y in points})
    if len(pts) < 3:
        raise DegenerateInput("fewer than 3 distinct points")

    def chain(seq: Iterable[tuple[float, float]]) -> list[Point2D]:
        out: list[Point2D] = []
        for q in seq:
            p = Point2D(*q)
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= EPS:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("points are collinear")
    return ConvexPolygon(tuple(hull))


def point_in_convex_polygon(p: tuple[float, float], poly: ConvexPolygon) -> bool:
    """Boundary-inclusive membership test (cross-product sign per edge)."""
    px, py = float(p[0]), float(p[1])
    v = poly.vertices
    n = len(v)
    for i in range(n):
        a = v[i]
        b = v[(i + 1) % n]
        cross = (b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x)
        if cross < -EPS:
            return False
    return True


def point_outside_circle(p: tuple[float, float], c: Circle) -> bool:
    """True iff the point is strictly farther from the center than the radius.

    Points on the boundary are NOT outside.  Compared in squared distance
    so both sides stay exact whenever the inputs are.
    """
    dx = float(p[0]) - c.center.x
    dy = float(p[1]) - c.center.y
    return dx * dx + dy * dy > c.radius * c.radius


def bounding_rect(
    points: Sequence[tuple[float, float]], clamp: PixelRect | None = None
) -> PixelRect:
    """Minimum integer pixel rect covering the points, optionally clamped.

    x0 = floor(min x), x1 = ceil(max x) + 1, likewise for y, so every
    input point lies inside the half-open rect before clamping.
    """
    if not points:
        raise EmptyInput("bounding_rect of no points")
    xs = [float(p[0]) for p in points]
    ys = [float(p[1]) for p in points]
    rect = PixelRect(
        math.floor(min(xs)),
        math.floor(min(ys)),
        math.ceil(max(xs)) + 1,
        math.ceil(max(ys)) + 1,
    )
    if clamp is not None:
        rect = rect.intersect(clamp)
    return rect


def min_enclosing_circle(points: Sequence[tuple[float, float]]) -> Circle:
    """Smallest circle enclosing all points.

    Incremental move-to-front construction (Welzl's recurrences made
    iterative).  The input order is used as-is, not shuffled, so the
    result is reproducible run to run; the minimum circle itself is
    unique, so any order converges to the same circle up to rounding.
    """
    if not points:
        raise EmptyInput("min_enclosing_circle of no points")
    pts = [(float(x), float(y)) for x, y in points]

    c = (pts[0][0], pts[0][1], 0.0)
    for i, p in enumerate(pts[1:], start=1):
        if not _in_circle(c, p):
            c = _circle_one_point(pts[: i + 1], p)
    return Circle(Point2D(c[0], c[1]), c[2])


def _in_circle(c: tuple[float, float, float], p: tuple[float, float]) -> bool:
    # multiplicative slack absorbs accumulated rounding in the constructions
    return math.hypot(p[0] - c[0], p[1] - c[1]) <= c[2] * (1.0 + 1e-12) + 1e-12


def _circle_one_point(
    pts: list[tuple[float, float]], p: tuple[float, float]
) -> tuple[float, float, float]:
    c = (p[0], p[1], 0.0)
    for i, q in enumerate(pts):
        if not _in_circle(c, q):
            if c[2] == 0.0:
                c = _diameter(p, q)
            else:
                c = _circle_two_points(pts[: i + 1], p, q)
    return c


def _circle_two_points(
    pts: list[tuple[float, float]], p: tuple[float, float], q: tuple[float, float]
) -> tuple[float, float, float]:
    circ = _diameter(p, q)
    left: tuple[float, float, float] | None = None
    right: tuple[float, float, float] | None = None
    px, py = p
    qx, qy = q
    for r in pts:
        if _in_circle(circ, r):
            continue
        cross = _cross_xy(px, py, qx, qy, r[0], r[1])
        c = _circumcircle(p, q, r)
        if c is None:
            continue
        side = _cross_xy(px, py, qx, qy, c[0], c[1])
        if cross > 0.0 and (left is None or side > _cross_xy(px, py, qx, qy, left[0], left[1])):
            left = c
        elif cross < 0.0 and (right is None or side < _cross_xy(px, py, qx, qy, right[0], right[1])):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right  # type: ignore[return-value]
    if right is None:
        return left
    return left if left[2] <= right[2] else right


def _cross_xy(x0: float, y0: float, x1: float, y1: float, x2: float, y2: float) -> float:
    return (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0)


def _diameter(p: tuple[float, float], q: tuple[float, float]) -> tuple[float, float, float]:
    cx = (p[0] + q[0]) / 2.0
    cy = (p[1] + q[1]) / 2.0
    r = max(math.hypot(p[0] - cx, p[1] - cy), math.hypot(q[0] - cx, q[1] - cy))
    return (cx, cy, r)


def _circumcircle(
    a: tuple[float, float], b: tuple[float, float], c: tuple[float, float]
) -> tuple[float, float, float] | None:
    # relative coordinates keep the determinant well conditioned
    ox = (min(a[0], b[0], c[0]) + max(a[0], b[0], c[0])) / 2.0
    oy = (min(a[1], b[1], c[1]) + max(a[1], b[1], c[1])) / 2.0
    ax, ay = a[0] - ox, a[1] - oy
    bx, by = b[0] - ox, b[1] - oy
    cx, cy = c[0] - ox, c[1] - oy
    d = (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)) * 2.0
    if d == 0.0:
        return None
    x = ox + ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    y = oy + ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    r = max(math.hypot(a[0] - x, a[1] - y), math.hypot(b[0] - x, b[1] - y), math.hypot(c[0] - x, c[1] - y))
    return (x, y, r)
