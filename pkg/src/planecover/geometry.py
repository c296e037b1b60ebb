"""Exact planar primitives over rationals.

Every coordinate is a :class:`fractions.Fraction`; no predicate or
construction in this module touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Scalar = Fraction
ScalarLike = Union[Fraction, int, str, Decimal, float]


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce ``value`` to an exact Fraction.

    Strings accept decimal literals (``"0.25"``, ``"-1e-3"``) and ``num/den``.
    Floats are converted exactly (their binary value, not their repr).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True, order=True, slots=True)
class Point:
    x: Fraction
    y: Fraction
    # Fraction hashing is slow and points are hashed a lot by the searches
    _hash: int = field(default=-1, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if type(self.x) is not Fraction:
            object.__setattr__(self, "x", as_scalar(self.x))
        if type(self.y) is not Fraction:
            object.__setattr__(self, "y", as_scalar(self.y))

    def __hash__(self) -> int:
        h = self._hash
        if h == -1:
            h = hash((self.x, self.y))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


@dataclass(frozen=True, slots=True)
class Segment:
    a: Point
    b: Point


@dataclass(frozen=True, slots=True)
class Ray:
    origin: Point
    through: Point

    def __post_init__(self) -> None:
        if self.origin == self.through:
            raise ValueError("ray needs two distinct points")


@dataclass(frozen=True, slots=True)
class Line:
    p: Point
    q: Point

    def __post_init__(self) -> None:
        if self.p == self.q:
            raise ValueError("line needs two distinct points")


class Orientation(IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


def cross(p: Point, q: Point, r: Point) -> Fraction:
    """Twice the signed area of triangle pqr."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    d = cross(p, q, r)
    if d > 0:
        return Orientation.COUNTERCLOCKWISE
    if d < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def line_line_intersection(m1: Line, m2: Line) -> Optional[Point]:
    """Unique intersection of two lines, or None when parallel or coincident."""
    dx1, dy1 = m1.q.x - m1.p.x, m1.q.y - m1.p.y
    dx2, dy2 = m2.q.x - m2.p.x, m2.q.y - m2.p.y
    den = dx1 * dy2 - dy1 * dx2
    if den == 0:
        return None
    t = ((m2.p.x - m1.p.x) * dy2 - (m2.p.y - m1.p.y) * dx2) / den
    return Point(m1.p.x + t * dx1, m1.p.y + t * dy1)


def point_on_segment(p: Point, s: Segment) -> bool:
    if cross(s.a, s.b, p) != 0:
        return False
    return (min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x)
            and min(s.a.y, s.b.y) <= p.y <= max(s.a.y, s.b.y))


def _ray_param(r: Ray, p: Point) -> Fraction:
    # p is assumed on the ray's line; returns t with p = origin + t * (through - origin)
    dx = r.through.x - r.origin.x
    if dx != 0:
        return (p.x - r.origin.x) / dx
    return (p.y - r.origin.y) / (r.through.y - r.origin.y)


def ray_segment_intersection(r: Ray, s: Segment) -> Optional[Point]:
    """Intersection of a closed ray with a closed segment.

    When the two overlap along a common line, the overlap point nearest the
    ray origin is returned.
    """
    o, d = r.origin, r.through
    ca = cross(o, d, s.a)
    cb = cross(o, d, s.b)
    if ca == 0 and cb == 0:
        ta, tb = _ray_param(r, s.a), _ray_param(r, s.b)
        lo, hi = min(ta, tb), max(ta, tb)
        if hi < 0:
            return None
        t = max(lo, Fraction(0))
        return Point(o.x + t * (d.x - o.x), o.y + t * (d.y - o.y))
    if _sign(ca) * _sign(cb) > 0:
        return None
    if s.a == s.b:
        return None
    p = line_line_intersection(Line(o, d), Line(s.a, s.b))
    if p is None:
        return None
    return p if _ray_param(r, p) >= 0 else None


def _collinear_overlap_positive(s1: Segment, s2: Segment) -> bool:
    # s1, s2 lie on one line; compare along the dominant axis
    if s1.a.x != s1.b.x or s2.a.x != s2.b.x:
        lo1, hi1 = sorted((s1.a.x, s1.b.x))
        lo2, hi2 = sorted((s2.a.x, s2.b.x))
    else:
        lo1, hi1 = sorted((s1.a.y, s1.b.y))
        lo2, hi2 = sorted((s2.a.y, s2.b.y))
    return min(hi1, hi2) > max(lo1, lo2)


def segments_properly_cross(s1: Segment, s2: Segment) -> bool:
    """True when the interiors cross at one point, or the segments overlap
    collinearly with positive length. Touching at an endpoint is not a crossing."""
    o1 = _sign(cross(s1.a, s1.b, s2.a))
    o2 = _sign(cross(s1.a, s1.b, s2.b))
    o3 = _sign(cross(s2.a, s2.b, s1.a))
    o4 = _sign(cross(s2.a, s2.b, s1.b))
    if o1 == o2 == o3 == o4 == 0:
        return _collinear_overlap_positive(s1, s2)
    return o1 * o2 < 0 and o3 * o4 < 0


def segments_intersect(s1: Segment, s2: Segment) -> bool:
    """True when the closed segments share at least one point."""
    o1 = _sign(cross(s1.a, s1.b, s2.a))
    o2 = _sign(cross(s1.a, s1.b, s2.b))
    o3 = _sign(cross(s2.a, s2.b, s1.a))
    o4 = _sign(cross(s2.a, s2.b, s1.b))
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return ((o1 == 0 and point_on_segment(s2.a, s1))
            or (o2 == 0 and point_on_segment(s2.b, s1))
            or (o3 == 0 and point_on_segment(s1.a, s2))
            or (o4 == 0 and point_on_segment(s1.b, s2)))


def convex_hull_small(pts: Sequence[Point]) -> list[Point]:
    """Strict convex hull, counterclockwise from the lexicographically smallest
    vertex. Points on the relative interior of a hull edge are not vertices."""
    ps = sorted(set(pts))
    if len(ps) <= 2:
        return ps

    def chain(seq: Iterable[Point]) -> list[Point]:
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(ps)
    upper = chain(reversed(ps))
    hull = lower[:-1] + upper[:-1]
    return hull


def bbox_overlap(s1: Segment, s2: Segment) -> bool:
    return (min(s1.a.x, s1.b.x) <= max(s2.a.x, s2.b.x)
            and min(s2.a.x, s2.b.x) <= max(s1.a.x, s1.b.x)
            and min(s1.a.y, s1.b.y) <= max(s2.a.y, s2.b.y)
            and min(s2.a.y, s2.b.y) <= max(s1.a.y, s1.b.y))
