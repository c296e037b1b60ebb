from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from planecover.geometry import (Line, Orientation, Point, Ray, Segment, as_scalar,
                                 convex_hull_small, cross, line_line_intersection,
                                 orientation, point_on_segment,
                                 ray_segment_intersection, segments_intersect,
                                 segments_properly_cross)

from conftest import P, points


# --- independent oracles -----------------------------------------------------

def param_intersection(s1, s2):
    """Solve a + s(b-a) = c + t(d-c) by Cramer's rule; None if parallel."""
    (ax, ay), (bx, by) = (s1.a.x, s1.a.y), (s1.b.x, s1.b.y)
    (cx, cy), (dx, dy) = (s2.a.x, s2.a.y), (s2.b.x, s2.b.y)
    det = (bx - ax) * (-(dy - cy)) + (dx - cx) * (by - ay)
    if det == 0:
        return None
    s = ((cx - ax) * (-(dy - cy)) + (dx - cx) * (cy - ay)) / det
    t = ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax)) / det
    return s, t


def in_closed_triangle(p, a, b, c):
    if cross(a, b, c) == 0:
        return False  # flat triangles are handled by the segment test
    d = [cross(a, b, p), cross(b, c, p), cross(c, a, p)]
    return all(v >= 0 for v in d) or all(v <= 0 for v in d)


def brute_hull_vertices(pts):
    out = set()
    for p in pts:
        others = [q for q in pts if q != p]
        inside = any(point_on_segment(p, Segment(a, b)) for a, b in combinations(others, 2))
        inside = inside or any(in_closed_triangle(p, *t) for t in combinations(others, 3))
        if not inside:
            out.add(p)
    return out


# --- orientation ---------------------------------------------------------------

def test_orientation_examples():
    assert orientation(P(0, 0), P(1, 0), P(0, 1)) is Orientation.COUNTERCLOCKWISE
    assert orientation(P(0, 0), P(1, 1), P(2, 2)) is Orientation.COLLINEAR
    assert orientation(P(0, 0), P(1, 0), P(1, -1)) is Orientation.CLOCKWISE


@given(points(), points(), points())
def test_orientation_antisymmetric(p, q, r):
    assert orientation(p, q, r) == -orientation(p, r, q)


@given(points(), points(), points(), st.fractions(min_value=Fraction(1, 7), max_value=9))
def test_orientation_scale_invariant(p, q, r, k):
    s = lambda v: Point(v.x * k, v.y * k)
    assert orientation(p, q, r) == orientation(s(p), s(q), s(r))


def test_as_scalar_inputs():
    assert as_scalar("0.25") == Fraction(1, 4)
    assert as_scalar("-3/6") == Fraction(-1, 2)
    assert as_scalar("1e-3") == Fraction(1, 1000)
    assert as_scalar(0.5) == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_scalar(True)


def test_point_coerces_and_hashes():
    p = Point("1/2", 3)
    assert p == P(Fraction(1, 2), 3)
    assert hash(p) == hash(Point(Fraction(1, 2), Fraction(3)))
    assert {p: 1}[Point(Fraction(2, 4), 3)] == 1


# --- lines and rays --------------------------------------------------------------

def test_line_line_examples():
    xaxis, yaxis = Line(P(0, 0), P(1, 0)), Line(P(0, 0), P(0, 1))
    assert line_line_intersection(xaxis, yaxis) == P(0, 0)
    assert line_line_intersection(Line(P(0, 0), P(1, 0)), Line(P(0, 1), P(1, 1))) is None
    assert line_line_intersection(Line(P(0, 0), P(2, 2)), Line(P(0, 2), P(2, 0))) == P(1, 1)


def test_degenerate_primitives_rejected():
    with pytest.raises(ValueError):
        Line(P(1, 1), P(1, 1))
    with pytest.raises(ValueError):
        Ray(P(0, 0), P(0, 0))


@given(points(), points(), points(), points())
def test_line_intersection_lies_on_both(a, b, c, d):
    assume(a != b and c != d)
    x = line_line_intersection(Line(a, b), Line(c, d))
    if x is None:
        assert cross(a, b, c) - cross(a, b, d) == 0  # parallel: equal offsets
    else:
        assert orientation(a, b, x) is Orientation.COLLINEAR
        assert orientation(c, d, x) is Orientation.COLLINEAR


def test_ray_segment_examples():
    assert ray_segment_intersection(Ray(P(-1, 0), P(0, 0)), Segment(P(1, -1), P(1, 1))) == P(1, 0)
    assert ray_segment_intersection(Ray(P(0, 0), P(1, 0)), Segment(P(-2, -1), P(-2, 1))) is None
    # overlap along the ray: nearest point to the origin
    assert ray_segment_intersection(Ray(P(0, 0), P(1, 1)), Segment(P(2, 2), P(3, 3))) == P(2, 2)
    assert ray_segment_intersection(Ray(P(0, 0), P(1, 1)), Segment(P(3, 3), P(-1, -1))) == P(0, 0)


@given(points(), points(), points(), points())
def test_ray_segment_matches_parametric(o, d, a, b):
    assume(o != d and a != b)
    got = ray_segment_intersection(Ray(o, d), Segment(a, b))
    sol = param_intersection(Segment(o, d), Segment(a, b))
    if sol is not None:
        s, t = sol
        want = Point(o.x + s * (d.x - o.x), o.y + s * (d.y - o.y)) if s >= 0 and 0 <= t <= 1 else None
        assert got == want
    elif cross(o, d, a) != 0:
        assert got is None
    else:
        # collinear: brute force over the overlap endpoints
        dx, dy = d.x - o.x, d.y - o.y
        par = lambda p: ((p.x - o.x) / dx) if dx else ((p.y - o.y) / dy)
        lo, hi = sorted((par(a), par(b)))
        if hi < 0:
            assert got is None
        else:
            t0 = max(lo, Fraction(0))
            assert got == Point(o.x + t0 * dx, o.y + t0 * dy)


# --- segments ----------------------------------------------------------------------

def test_properly_cross_examples():
    assert segments_properly_cross(Segment(P(0, 0), P(2, 2)), Segment(P(0, 2), P(2, 0)))
    assert not segments_properly_cross(Segment(P(0, 0), P(1, 0)), Segment(P(1, 0), P(2, 1)))
    assert segments_properly_cross(Segment(P(0, 0), P(2, 0)), Segment(P(1, 0), P(3, 0)))
    assert not segments_properly_cross(Segment(P(0, 0), P(1, 0)), Segment(P(1, 0), P(2, 0)))


def test_point_on_segment_examples():
    s = Segment(P(0, 0), P(2, 2))
    assert point_on_segment(P(1, 1), s)
    assert not point_on_segment(P(3, 3), s)
    assert not point_on_segment(P(1, 0), s)


@given(points(), points(), points(), points())
def test_crossing_matches_parametric(a, b, c, d):
    assume(a != b and c != d)
    s1, s2 = Segment(a, b), Segment(c, d)
    got = segments_properly_cross(s1, s2)
    assert got == segments_properly_cross(s2, s1)
    sol = param_intersection(s1, s2)
    if sol is not None:
        s, t = sol
        assert got == (0 < s < 1 and 0 < t < 1)
        assert segments_intersect(s1, s2) == (0 <= s <= 1 and 0 <= t <= 1)
    elif cross(a, b, c) != 0:
        assert not got and not segments_intersect(s1, s2)
    else:
        # collinear: interval overlap along the dominant axis
        key = (lambda p: p.x) if a.x != b.x else (lambda p: p.y)
        lo1, hi1 = sorted((key(a), key(b)))
        lo2, hi2 = sorted((key(c), key(d)))
        assert got == (min(hi1, hi2) > max(lo1, lo2))
        assert segments_intersect(s1, s2) == (min(hi1, hi2) >= max(lo1, lo2))


# --- hull ---------------------------------------------------------------------------

def test_hull_examples():
    sq = [P(0, 0), P(1, 0), P(1, 1), P(0, 1)]
    assert convex_hull_small(sq) == [P(0, 0), P(1, 0), P(1, 1), P(0, 1)]
    pts = [P(0, 0), P(2, 0), P(1, Fraction(1, 2)), P(1, 2), P(Fraction(1, 2), 1)]
    assert set(convex_hull_small(pts)) == {P(0, 0), P(2, 0), P(1, 2)}
    assert convex_hull_small([P(0, 0), P(1, 0), P(2, 0)]) == [P(0, 0), P(2, 0)]


@given(st.lists(points(-6, 6, 1), min_size=3, max_size=7, unique=True))
def test_hull_matches_brute_force(pts):
    hull = convex_hull_small(pts)
    assert set(hull) == brute_hull_vertices(pts)
    if len(hull) >= 3:
        # counterclockwise, strictly convex
        k = len(hull)
        assert all(cross(hull[i], hull[(i + 1) % k], hull[(i + 2) % k]) > 0 for i in range(k))
