"""Exact minimum-link covering paths for tiny instances (n <= 9).

Bends are drawn from the arrangement of lines through pairs of input points.
A segment either runs along one of those lines or along the line through its
start bend and an input point it covers.  The path may start and end
anywhere; trimming shows both ends can be taken at input points.

Iterative deepening starts from ceil(n / M), M the most input points on one
line, since no segment covers more than M points.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from math import gcd
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import EmptyInput, TooLarge
from .geometry import Point, Segment, point_on_segment
from .preprocess import PointSet, as_point_set
from .window_solver import Arrangement, _Searcher

MAX_N = 9


class OracleMode(enum.Enum):
    CROSSING = "crossing"
    PLANE = "plane"


@dataclass
class OracleResult:
    min_segments: int
    witness: list[Point]
    mode: OracleMode
    # True when the answer is optimal over all paths, not just the family
    complete: bool
    lower_bound: int = 0
    refuted: list[int] = field(default_factory=list)

    def as_dict(self) -> dict:
        from .io import rational
        return {
            "min_segments": self.min_segments,
            "witness": [{"x": rational(p.x), "y": rational(p.y)} for p in self.witness],
            "mode": self.mode.value,
            "complete": self.complete,
            "lower_bound": self.lower_bound,
            "refuted": self.refuted,
        }


class _OracleArrangement(Arrangement):
    """Pair-line arrangement whose moves also follow the line from a bend
    through any input point."""

    def _ray_groups(self, v: Point) -> dict[tuple[int, int], list[tuple[Fraction, Point]]]:
        # every other bend, keyed by the primitive direction from v and
        # carrying its distance along that direction (up to a common factor)
        out: dict[tuple[int, int], list[tuple[Fraction, Point]]] = {}
        vx, vy = v.x, v.y
        for w in self.vertex_lines:
            if w == v:
                continue
            dx, dy = w.x - vx, w.y - vy
            den = dx.denominator * dy.denominator
            a, b = dx.numerator * dy.denominator, dy.numerator * dx.denominator
            g = gcd(a, b)
            out.setdefault((a // g, b // g), []).append((Fraction(g, den), w))
        return out

    def moves(self, v: Point) -> list[tuple[Point, int]]:
        got = self._moves.get(v)
        if got is not None:
            return got
        out = dict(Arrangement.moves(self, v))
        own = self.bit.get(v, 0)
        groups = None
        for t in self.targets:
            if t == v:
                continue
            if groups is None:
                groups = self._ray_groups(v)
            dx, dy = t.x - v.x, t.y - v.y
            a, b = dx.numerator * dy.denominator, dy.numerator * dx.denominator
            g = gcd(a, b)
            a, b = a // g, b // g
            for key in ((a, b), (-a, -b)):
                acc = own
                for _, w in sorted(groups.get(key, ())):
                    acc |= self.bit.get(w, 0)
                    out[w] = out.get(w, 0) | acc
        got = sorted(out.items(), key=lambda it: (-bin(it[1]).count("1"), it[0]))
        self._moves[v] = got
        return got


def _lower_bound(arr: Arrangement, n: int) -> int:
    if n <= 1:
        return 0
    m = max(arr.max_on_line, 2)
    return -(-n // m)


def _search(arr: Arrangement, plane: bool, k: int) -> Optional[list[Point]]:
    # paths whose every segment covers a new point are found fastest; only
    # the full family can refute k
    for progress in (True, False):
        s = _Searcher(arr, None, plane=plane, progress=progress)
        for start in arr.targets:
            found = s.search(start, arr.bit[start], k)
            if found is not None:
                return found
    return None


def _check_cover(points: list[Point], path: list[Point]) -> bool:
    if len(path) == 1:
        return all(p == path[0] for p in points)
    segs = [Segment(a, b) for a, b in zip(path, path[1:])]
    return all(any(point_on_segment(p, s) for s in segs) for p in points)


def _min_link(pts: list[Point], mode: OracleMode) -> tuple[int, list[Point], int, list[int]]:
    n = len(pts)
    if n == 1:
        return 0, [pts[0]], 0, []
    arr = _OracleArrangement(pts)
    lb = _lower_bound(arr, n)
    refuted = []
    for k in range(lb, n):
        found = _search(arr, mode is OracleMode.PLANE, k)
        if found is not None:
            return len(found) - 1, found, lb, refuted
        refuted.append(k)
    raise AssertionError("an x-sorted chain always exists")


def min_link_path(points: "PointSet | Iterable[Point]",
                  mode: OracleMode = OracleMode.CROSSING) -> OracleResult:
    """Fewest segments of a covering path (plane or not) over the candidate family.

    In plane mode ``complete`` is only claimed when the plane answer meets
    the crossing-allowed optimum, which bounds every plane path from below.
    """
    if isinstance(mode, str):
        mode = OracleMode(mode)
    ps = as_point_set(points)
    pts = list(ps.points)
    if not pts:
        raise EmptyInput("no points")
    if len(pts) > MAX_N:
        raise TooLarge(f"n = {len(pts)} > {MAX_N}")
    k, witness, lb, refuted = _min_link(pts, mode)
    assert _check_cover(pts, witness)
    complete = True
    if mode is OracleMode.PLANE:
        kc = _min_link(pts, OracleMode.CROSSING)[0]
        complete = kc == k
    return OracleResult(k, witness, mode, complete, lb, refuted)
