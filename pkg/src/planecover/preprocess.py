"""Ingestion, deduplication and the exact tie-breaking shear.

The scan needs pairwise-distinct x-coordinates.  Instead of a rotation we use
the shear ``(x, y) -> (x + eps*y, y)``: it has determinant one, so every
orientation sign (and with it collinearity, convexity, coverage and crossing)
is unchanged, and it is exactly invertible over the rationals.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyInput
from .geometry import Point

_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class PointSet:
    """Distinct input points in first-occurrence order.

    ``source_index[i]`` is the position of ``points[i]`` in the raw input and
    ``duplicates`` lists ``(dropped_input_index, kept_input_index)`` pairs.
    """

    points: tuple[Point, ...]
    source_index: tuple[int, ...] = ()
    duplicates: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_iterable(cls, pts: Iterable[Point]) -> "PointSet":
        first: dict[Point, int] = {}
        kept: list[Point] = []
        src: list[int] = []
        dups: list[tuple[int, int]] = []
        for i, p in enumerate(pts):
            if not isinstance(p, Point):
                p = Point(*p)
            j = first.get(p)
            if j is None:
                first[p] = i
                kept.append(p)
                src.append(i)
            else:
                dups.append((i, j))
        return cls(tuple(kept), tuple(src), tuple(dups))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def as_point_set(pts: "PointSet | Iterable[Point]") -> PointSet:
    return pts if isinstance(pts, PointSet) else PointSet.from_iterable(pts)


class Direction(enum.Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


@dataclass(frozen=True)
class ShearTransform:
    epsilon: Fraction = Fraction(0)

    def forward(self, p: Point) -> Point:
        if not self.epsilon:
            return p
        return Point(p.x + self.epsilon * p.y, p.y)

    def inverse(self, p: Point) -> Point:
        if not self.epsilon:
            return p
        return Point(p.x - self.epsilon * p.y, p.y)


@dataclass
class IntegerFrame:
    """All coordinates scaled by one common denominator.

    ``xs[i] / denominator`` and ``ys[i] / denominator`` are the exact
    coordinates of point ``i``.  Orientation signs are unchanged by the
    positive scaling, so integer predicates can stand in for rational ones.
    """

    denominator: int
    xs: list[int] = field(repr=False)
    ys: list[int] = field(repr=False)

    @classmethod
    def from_points(cls, pts: Sequence[Point]) -> "IntegerFrame":
        xr = [p.x.as_integer_ratio() for p in pts]
        yr = [p.y.as_integer_ratio() for p in pts]
        dens = {b for _, b in xr}
        dens.update(b for _, b in yr)
        d = math.lcm(*dens) if dens else 1
        if len(dens) == 1:
            xs = [a for a, _ in xr]
            ys = [a for a, _ in yr]
        else:
            xs = [a * (d // b) for a, b in xr]
            ys = [a * (d // b) for a, b in yr]
        return cls(d, xs, ys)

    def max_abs(self) -> int:
        if not self.xs:
            return 0
        return max(max(self.xs), -min(self.xs), max(self.ys), -min(self.ys))


def _min_positive_gap(values: list[int]) -> int | None:
    if len(values) < 2:
        return None
    if max(values) < _INT64_SAFE and -min(values) < _INT64_SAFE:
        u = np.unique(np.asarray(values, dtype=np.int64))
        if len(u) < 2:
            return None
        return int(np.diff(u).min())
    u = sorted(set(values))
    if len(u) < 2:
        return None
    return min(b - a for a, b in zip(u, u[1:]))


def shear_for_frame(frame: IntegerFrame) -> ShearTransform:
    xs = frame.xs
    if len(set(xs)) == len(xs):
        return ShearTransform(Fraction(0))
    gap = _min_positive_gap(xs)
    dy = max(frame.ys) - min(frame.ys)
    if gap is None:
        return ShearTransform(Fraction(1))
    # eps = min(1, Dx / (2 (dY + 1))) in original units; both gaps carry the
    # same scale factor, the "+1" must be scaled too
    eps = Fraction(gap, 2 * (dy + frame.denominator))
    return ShearTransform(min(Fraction(1), eps))


def compute_shear(ps: "PointSet | Sequence[Point]") -> ShearTransform:
    pts = ps.points if isinstance(ps, PointSet) else list(ps)
    if not pts:
        raise EmptyInput("no points")
    if len(set(pts)) != len(pts):
        raise ValueError("points must be distinct; build a PointSet first")
    return shear_for_frame(IntegerFrame.from_points(pts))


def apply_shear(points: "PointSet | Sequence[Point]", t: ShearTransform,
                direction: Direction = Direction.FORWARD) -> list[Point]:
    pts = points.points if isinstance(points, PointSet) else points
    f = t.forward if direction is Direction.FORWARD else t.inverse
    return [f(p) for p in pts]


def sheared_sort_order(frame: IntegerFrame, t: ShearTransform) -> tuple[list[int], list[int], list[int], int]:
    """Sort by sheared x in the integer frame.

    Returns ``(order, sx, sy, q)`` where ``sx, sy`` are the sheared integer
    coordinates ``(q*X + p*Y, q*Y)`` for ``eps = p/q`` (already permuted into
    sorted order).
    """
    p, q = t.epsilon.numerator, t.epsilon.denominator
    arrays = sorted_frame_arrays(frame, t)
    if arrays is not None:
        order, X, Y = arrays
        return order.tolist(), (q * X + p * Y).tolist(), (q * Y).tolist(), q
    xs, ys = frame.xs, frame.ys
    sx = [q * x + p * y for x, y in zip(xs, ys)]
    order = sorted(range(len(sx)), key=sx.__getitem__)
    return order, [sx[i] for i in order], [q * ys[i] for i in order], q


def sorted_frame_arrays(frame: IntegerFrame, t: ShearTransform):
    """``(order, X, Y)`` as int64 arrays, X and Y the unsheared frame
    coordinates already in sheared order; None if int64 could overflow."""
    p, q = t.epsilon.numerator, t.epsilon.denominator
    n = len(frame.xs)
    if not n or frame.max_abs() * (p + q) >= _INT64_SAFE:
        return None
    X = np.asarray(frame.xs, dtype=np.int64)
    Y = np.asarray(frame.ys, dtype=np.int64)
    order = np.argsort(q * X + p * Y if p else X, kind="stable")
    return order, X[order], Y[order]
