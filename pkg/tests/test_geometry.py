import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scleraqc import (
    Circle,
    ConvexPolygon,
    DegenerateInput,
    EmptyInput,
    PixelRect,
    Point2D,
    bounding_rect,
    convex_hull,
    min_enclosing_circle,
    point_in_convex_polygon,
    point_outside_circle,
)

from oracles import brute_hull, brute_mec


# Sub-pixel landmark coordinates on a 1/64 px grid in [0, 256).  On this
# grid every cross product is exact in float64, so the 1e-9 comparison
# tolerances never cut into real geometry and the properties below hold
# exactly; arbitrary-float inputs are covered by the brute-force oracle
# comparisons instead.
coords = st.integers(min_value=0, max_value=256 * 64 - 1).map(lambda k: k / 64.0)
point_lists = st.lists(st.tuples(coords, coords), min_size=3, max_size=40)


def hull_or_none(points):
    try:
        return convex_hull(points)
    except DegenerateInput:
        return None


# ------------------------------------------------------------- convex hull


def test_hull_of_triangle_is_itself():
    poly = convex_hull([(0, 0), (4, 0), (0, 4)])
    assert {tuple(v) for v in poly.vertices} == {(0, 0), (4, 0), (0, 4)}


def test_hull_drops_interior_point():
    poly = convex_hull([(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)])
    assert {tuple(v) for v in poly.vertices} == {(0, 0), (4, 0), (4, 4), (0, 4)}


def test_hull_drops_collinear_edge_point():
    poly = convex_hull([(0, 0), (2, 0), (4, 0), (4, 4), (0, 4)])
    assert (2.0, 0.0) not in {tuple(v) for v in poly.vertices}


def test_hull_rejects_degenerate_input():
    with pytest.raises(DegenerateInput):
        convex_hull([(0, 0), (1, 1)])
    with pytest.raises(DegenerateInput):
        convex_hull([(0, 0), (1, 1), (2, 2), (3, 3)])
    with pytest.raises(DegenerateInput):
        convex_hull([(1, 1), (1, 1), (1, 1)])


def test_hull_is_ccw_positive_area():
    poly = convex_hull([(0, 0), (4, 0), (4, 4), (0, 4)])
    assert poly.signed_area > 0


def test_hull_matches_bruteforce_on_random_sets():
    rng = np.random.default_rng(7)
    for _ in range(50):
        n = int(rng.integers(3, 51))
        pts = [tuple(p) for p in rng.uniform(0, 256, size=(n, 2))]
        poly = convex_hull(pts)
        expected = brute_hull(pts)
        got = [tuple(v) for v in poly.vertices]
        start = got.index(min(got))
        assert got[start:] + got[:start] == expected


@given(point_lists)
def test_hull_contains_every_input_point(points):
    poly = hull_or_none(points)
    if poly is None:
        return
    for p in points:
        assert point_in_convex_polygon(p, poly)


@given(point_lists)
def test_hull_vertices_are_input_points(points):
    poly = hull_or_none(points)
    if poly is None:
        return
    inputs = {(float(x), float(y)) for x, y in points}
    assert {tuple(v) for v in poly.vertices} <= inputs


@given(point_lists)
def test_hull_idempotent(points):
    poly = hull_or_none(points)
    if poly is None:
        return
    again = convex_hull([tuple(v) for v in poly.vertices])
    assert {tuple(v) for v in again.vertices} == {tuple(v) for v in poly.vertices}


@given(point_lists, st.integers(-1000, 1000), st.integers(-1000, 1000))
def test_hull_translation_equivariance(points, dx, dy):
    poly = hull_or_none(points)
    if poly is None:
        return
    shifted = convex_hull([(x + dx, y + dy) for x, y in points])
    moved = {(v.x + dx, v.y + dy) for v in poly.vertices}
    assert all(
        any(abs(a.x - x) <= 1e-9 and abs(a.y - y) <= 1e-9 for (x, y) in moved)
        for a in shifted.vertices
    )
    assert len(shifted.vertices) == len(poly.vertices)


# ------------------------------------------------- point-in-polygon tests


def test_point_in_polygon_boundary_inclusive():
    square = convex_hull([(0, 0), (4, 0), (4, 4), (0, 4)])
    assert point_in_convex_polygon((2, 2), square)
    assert point_in_convex_polygon((4, 2), square)  # on edge
    assert point_in_convex_polygon((4, 4), square)  # on vertex
    assert not point_in_convex_polygon((5, 2), square)
    assert not point_in_convex_polygon((4.0001, 2), square)


def test_convex_polygon_validates():
    with pytest.raises(ValueError):
        ConvexPolygon((Point2D(0, 0), Point2D(1, 0)))
    with pytest.raises(ValueError):  # clockwise
        ConvexPolygon((Point2D(0, 0), Point2D(0, 4), Point2D(4, 0)))
    with pytest.raises(ValueError):  # collinear run
        ConvexPolygon((Point2D(0, 0), Point2D(2, 0), Point2D(4, 0), Point2D(0, 4)))


# ---------------------------------------------------------------- circles


def test_point_outside_circle_strict():
    c = Circle(Point2D(0, 0), 3.0)
    assert not point_outside_circle((0, 0), c)
    assert not point_outside_circle((3, 0), c)  # exactly on boundary
    assert point_outside_circle((10, 0), c)
    exact = Circle(Point2D(0, 0), 5.0)
    assert not point_outside_circle((3, 4), exact)  # 3-4-5, exact boundary


def test_mec_two_points_diameter():
    c = min_enclosing_circle([(0, 0), (4, 0)])
    assert c.center == Point2D(2.0, 0.0)
    assert c.radius == pytest.approx(2.0, abs=1e-12)


def test_mec_equilateral_circumcircle():
    # independent analytic solve: circumcenter of (0,0),(2,0),(1,sqrt(3))
    # is equidistant from all three -> x = 1 by symmetry, y from
    # 1 + y^2 = (y - sqrt(3))^2 + 1... solving gives y = 1/sqrt(3)
    y = 1.0 / math.sqrt(3.0)
    r = math.hypot(1.0, y)
    c = min_enclosing_circle([(0, 0), (2, 0), (1, math.sqrt(3))])
    assert c.center.x == pytest.approx(1.0, abs=1e-9)
    assert c.center.y == pytest.approx(y, abs=1e-9)
    assert c.radius == pytest.approx(r, abs=1e-9)


def test_mec_single_point():
    c = min_enclosing_circle([(3.5, 7.25)])
    assert c.center == Point2D(3.5, 7.25)
    assert c.radius == 0.0


def test_mec_empty_raises():
    with pytest.raises(EmptyInput):
        min_enclosing_circle([])
    with pytest.raises(EmptyInput):
        bounding_rect([])


def test_mec_matches_bruteforce_on_random_sets():
    rng = np.random.default_rng(11)
    for _ in range(60):
        n = int(rng.integers(1, 13))
        pts = [tuple(p) for p in rng.uniform(0, 256, size=(n, 2))]
        got = min_enclosing_circle(pts)
        _, _, expected_r = brute_mec(pts)
        assert abs(got.radius - expected_r) <= 1e-6


@given(point_lists)
def test_mec_encloses_all_points(points):
    c = min_enclosing_circle(points)
    eps = 1e-9 * max(max(abs(x), abs(y)) for x, y in points)
    for x, y in points:
        assert math.hypot(x - c.center.x, y - c.center.y) <= c.radius + max(eps, 1e-12)


@given(point_lists)
@settings(max_examples=50)
def test_mec_supported_by_at_most_three_boundary_points(points):
    c = min_enclosing_circle(points)
    tol = max(c.radius * 1e-7, 1e-9)
    support = [
        (x, y)
        for x, y in points
        if abs(math.hypot(x - c.center.x, y - c.center.y) - c.radius) <= tol
    ]
    assert len(support) >= (2 if len(set(points)) >= 2 else 1)
    again = min_enclosing_circle(support)
    assert again.radius == pytest.approx(c.radius, rel=1e-6, abs=1e-9)


@given(point_lists, st.integers(-1000, 1000), st.integers(-1000, 1000))
@settings(max_examples=50)
def test_mec_translation_equivariance(points, dx, dy):
    c = min_enclosing_circle(points)
    shifted = min_enclosing_circle([(x + dx, y + dy) for x, y in points])
    assert shifted.radius == pytest.approx(c.radius, abs=1e-9)
    assert shifted.center.x == pytest.approx(c.center.x + dx, abs=1e-9)
    assert shifted.center.y == pytest.approx(c.center.y + dy, abs=1e-9)


def test_mec_deterministic_for_fixed_order():
    pts = [(12.5, 3.25), (0.0, 9.0), (44.0, 17.5), (8.0, 8.0), (30.0, 1.0)]
    first = min_enclosing_circle(pts)
    second = min_enclosing_circle(pts)
    assert first == second


# ----------------------------------------------------------- bounding rect


def test_bounding_rect_floor_ceil():
    assert bounding_rect([(1.2, 3.7), (5.9, 4.1)]) == PixelRect(1, 3, 7, 6)


def test_bounding_rect_single_point():
    assert bounding_rect([(3, 3)]) == PixelRect(3, 3, 4, 4)


def test_bounding_rect_clamped_to_image():
    clamp = PixelRect(0, 0, 100, 100)
    rect = bounding_rect([(-5.0, 50.0), (120.0, 90.0)], clamp=clamp)
    assert rect == PixelRect(0, 50, 100, 91)


def test_bounding_rect_contains_points_after_clamp():
    rect = bounding_rect([(10.5, 20.5), (30.0, 40.0)])
    for x, y in [(10.5, 20.5), (30.0, 40.0)]:
        assert rect.x0 <= x < rect.x1
        assert rect.y0 <= y < rect.y1
