"""Left-to-right scan producing a plane covering path with at most
ceil(6n/7) segments.

Internally every point is a 4-tuple ``(X, Y, W, idx)`` of integers in the
sheared, denominator-scaled frame: the point is ``(X/W, Y/W)``, ``W > 0``, and
``idx`` is the index into the input PointSet (``-1`` for constructed
vertices).  All predicates are exact integer arithmetic.

Each intermediate iteration looks at the anchor ``l'`` (the rightmost point
covered so far) and the next six points ``l, m1, m2, m3, r, r'``; the middle
three get the roles ``a, b, c`` depending on the hull of
``S = {l, m1, m2, m3, r}``.  Symmetric subcases are reduced to a canonical one
by mirroring the window about the x-axis and/or left-to-right (which swaps the
roles of ``(l', l)`` and ``(r', r)``), and the resulting path is mapped back.
"""
from __future__ import annotations

import enum
import gc
import logging
import time
from contextvars import ContextVar
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

import numpy as np

from . import window_solver
from .errors import (ConstructionFailed, DegenerateInput,
                     DegenerateWindowUnsolvable, EmptyInput)
from .geometry import Point
from .preprocess import (IntegerFrame, PointSet, ShearTransform,
                         as_point_set, shear_for_frame, sheared_sort_order,
                         sorted_frame_arrays)

log = logging.getLogger(__name__)

CASE_IDS = (
    "C1.1", "C1.2", "C1.3-by", "C1.3-by′",
    "C2.1", "C2.2-l′", "C2.2-r′", "C2.2-v",
    "C3a.1-cy", "C3a.1-cy′", "C3a.2",
    "C3b-l′", "C3b-r′", "C3b-al", "C3b-z-right", "C3b-d", "C3b-e", "C3b-f",
    "DEGEN-SOLVER", "FINAL-TAIL",
)


class DegeneracyMode(enum.Enum):
    STRICT = "strict"
    PERMISSIVE = "permissive"


@dataclass(frozen=True)
class SolveOptions:
    degeneracy_mode: DegeneracyMode = DegeneracyMode.PERMISSIVE
    # re-verify every general-position window exactly, not just the region claims
    check_windows: bool = False
    record_trace: bool = True


@dataclass(frozen=True)
class CoveringPath:
    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        collapsed = [v for i, v in enumerate(vs) if i == 0 or v != vs[i - 1]]
        object.__setattr__(self, "vertices", tuple(collapsed))

    @classmethod
    def _trusted(cls, vertices: tuple[Point, ...]) -> "CoveringPath":
        # vertices already free of consecutive repeats
        obj = object.__new__(cls)
        object.__setattr__(obj, "vertices", vertices)
        return obj

    @property
    def segment_count(self) -> int:
        return max(0, len(self.vertices) - 1)

    def segments(self) -> list[tuple[Point, Point]]:
        return list(zip(self.vertices, self.vertices[1:]))


@dataclass
class IterationTrace:
    case_id: str
    anchor: Point
    appended_vertices: tuple[Point, ...]
    consumed: int
    budget: int
    aux_points: dict[str, Point] = field(default_factory=dict)
    roles: dict[str, Point] = field(default_factory=dict)
    # (left-right mirror, mirror about the x-axis)
    reflection_flags: tuple[bool, bool] = (False, False)
    fallback: bool = False

    @property
    def segments_appended(self) -> int:
        return len(self.appended_vertices)


@dataclass
class Solution:
    path: CoveringPath
    traces: list[IterationTrace]
    warnings: list[str]
    shear: ShearTransform
    duplicates: tuple[tuple[int, int], ...] = ()
    timings: dict[str, float] = field(default_factory=dict)
    windows: int = 0

    @property
    def segment_count(self) -> int:
        return self.path.segment_count


@dataclass
class ScanState:
    path: list[Point]
    m: int
    rightmost: Point
    remaining: list[Point]


@dataclass(frozen=True)
class Window:
    anchor: Point
    pts: tuple[Point, ...]

    def __post_init__(self) -> None:
        if len(self.pts) not in (6, 7):
            raise ValueError("a window holds 6 or 7 points")
        xs = [self.anchor.x] + [p.x for p in self.pts]
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise ValueError("window x-coordinates must strictly increase")


# ---------------------------------------------------------------------------
# integer predicates


def _cross(p, q, r) -> int:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


# Sign handed out for a tied orientation.  0 means ties are errors; the scan
# sets it to +1 or -1 while it retries a degenerate window, and the result is
# only kept if the exact subpath check accepts it.  Only read on a tie.
_TIE: ContextVar[int] = ContextVar("planecover_tie", default=0)


def _side(p, q, r) -> int:
    """Sign of orient(p, q, r) for input points; a tie is a degeneracy."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    if d > 0:
        return 1
    if d < 0:
        return -1
    tie = _TIE.get()
    if tie:
        return tie
    raise DegenerateInput("collinear triple in window")


def _meet(p1, p2, p3, p4):
    """Intersection of lines p1p2 and p3p4 (input points) as a homogeneous point."""
    ax, ay = p2[0] - p1[0], p2[1] - p1[1]
    bx, by = p4[0] - p3[0], p4[1] - p3[1]
    den = ax * by - ay * bx
    if den == 0:
        raise ConstructionFailed("parallel lines")
    t = (p3[0] - p1[0]) * by - (p3[1] - p1[1]) * bx
    X = p1[0] * den + t * ax
    Y = p1[1] * den + t * ay
    if den < 0:
        X, Y, den = -X, -Y, -den
    g = gcd(gcd(X, Y), den)
    if g > 1:
        X, Y, den = X // g, Y // g, den // g
    return (X, Y, den, -1)


def _meet_or_none(p1, p2, p3, p4):
    try:
        return _meet(p1, p2, p3, p4)
    except ConstructionFailed:
        return None


def _at_vertical(p, q, x):
    """Point of line pq with abscissa x (x given as an integer)."""
    d = q[0] - p[0]
    Y = p[1] * d + (x - p[0]) * (q[1] - p[1])
    X = x * d
    if d < 0:
        X, Y, d = -X, -Y, -d
    return (X, Y, d, -1)


def _xlt(p, q) -> bool:
    return p[0] * q[2] < q[0] * p[2]


def _xle(p, q) -> bool:
    return p[0] * q[2] <= q[0] * p[2]


def _within(p, a, b) -> bool:
    """p (known collinear with a, b) lies on the closed segment ab, compared by x."""
    if _xle(a, b):
        return _xle(a, p) and _xle(p, b)
    return _xle(b, p) and _xle(p, a)


def _horient(a, b, c) -> int:
    d = (a[0] * (b[1] * c[2] - b[2] * c[1])
         - a[1] * (b[0] * c[2] - b[2] * c[0])
         + a[2] * (b[0] * c[1] - b[1] * c[0]))
    return (d > 0) - (d < 0)


def _hbox(p, a, b) -> bool:
    for k in (0, 1):
        lo, hi = (a, b) if a[k] * b[2] <= b[k] * a[2] else (b, a)
        if p[k] * lo[2] < lo[k] * p[2] or hi[k] * p[2] < p[k] * hi[2]:
            return False
    return True


def _hon_segment(p, a, b) -> bool:
    return _horient(a, b, p) == 0 and _hbox(p, a, b)


def _hsegments_meet(a, b, c, d) -> bool:
    o1, o2 = _horient(a, b, c), _horient(a, b, d)
    o3, o4 = _horient(c, d, a), _horient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return ((o1 == 0 and _hbox(c, a, b)) or (o2 == 0 and _hbox(d, a, b))
            or (o3 == 0 and _hbox(a, c, d)) or (o4 == 0 and _hbox(b, c, d)))


def _same(p, q) -> bool:
    return p[0] * q[2] == q[0] * p[2] and p[1] * q[2] == q[1] * p[2]


def validate_subpath(verts: Sequence, targets: Sequence) -> bool:
    """Exact strict check of one appended subpath: covers the targets, no two
    non-adjacent segments meet, adjacent segments share only their joint, and
    all vertices after the first lie strictly right of it and not right of
    the last one."""
    first, last = verts[0], verts[-1]
    for v in verts[1:]:
        if not _xlt(first, v) or _xlt(last, v):
            return False
    segs = list(zip(verts, verts[1:]))
    for a, b in segs:
        if _same(a, b):
            return False
    for t in targets:
        if not any(_hon_segment(t, a, b) for a, b in segs):
            return False
    k = len(segs)
    for i in range(k - 1):
        a, b = segs[i]
        c = segs[i + 1][1]
        # collinear joint must continue straight, not fold back
        if _horient(a, b, c) == 0 and (_hbox(c, a, b) or _hbox(a, b, c)):
            return False
        for j in range(i + 2, k):
            if _hsegments_meet(a, b, *segs[j]):
                return False
    return True


# ---------------------------------------------------------------------------
# one intermediate iteration


class _Frame:
    """The window seen through a mirror. fx = -1 mirrors left-right (and
    reverses the roles), fy = -1 mirrors about the x-axis."""

    __slots__ = ("fx", "fy", "A", "L", "M", "R", "R1", "R2")

    def __init__(self, win, fx: int, fy: int):
        self.fx, self.fy = fx, fy
        if fx == 1 and fy == 1:
            t = win
        else:
            t = [(fx * p[0], fy * p[1], p[2], p[3]) for p in win]
        if fx == 1:
            self.A, self.L = t[0], t[1]
            self.M = (t[2], t[3], t[4])
            self.R, self.R1 = t[5], t[6]
            self.R2 = t[7] if len(t) > 7 else None
        else:
            self.A, self.L = t[6], t[5]
            self.M = (t[4], t[3], t[2])
            self.R, self.R1 = t[1], t[0]
            self.R2 = None

    def mid(self, k: int):
        """Middle point by its index in the unmirrored x-order."""
        return self.M[k] if self.fx == 1 else self.M[2 - k]

    def to_global(self, p):
        if self.fx == 1 and self.fy == 1:
            return p
        return (self.fx * p[0], self.fy * p[1], p[2], p[3])


@dataclass(slots=True)
class _Built:
    case_id: str
    frame: _Frame
    path: list            # local frame, anchor first
    claims: list          # (point, seg_start, seg_end): point must lie on that segment
    aux: dict
    roles: dict
    consumed: int = 6


def _hull_middles(L, M, R):
    """Which of the three middle points are on the lower / upper hull of S."""
    # Andrew's monotone chain over five x-sorted points, orientation inlined
    pts = (L, M[0], M[1], M[2], R)
    lower = [0, 1]
    upper = [0, 1]
    for i in (2, 3, 4):
        px, py = pts[i][0], pts[i][1]
        while len(lower) >= 2:
            a, b = pts[lower[-2]], pts[lower[-1]]
            d = (b[0] - a[0]) * (py - a[1]) - (b[1] - a[1]) * (px - a[0])
            if d == 0:
                d = _side(a, b, pts[i])
            if d > 0:
                break
            lower.pop()
        lower.append(i)
        while len(upper) >= 2:
            a, b = pts[upper[-2]], pts[upper[-1]]
            d = (b[0] - a[0]) * (py - a[1]) - (b[1] - a[1]) * (px - a[0])
            if d == 0:
                d = _side(a, b, pts[i])
            if d < 0:
                break
            upper.pop()
        upper.append(i)
    return [i - 1 for i in lower[1:-1]], [i - 1 for i in upper[1:-1]]


def _case1(win, lo, up) -> _Built:
    ia = (lo or up)[0]
    fy = 1 if lo else -1
    rest = [k for k in range(3) if k != ia]
    F = _Frame(win, 1, fy)
    a, b, c = F.mid(ia), F.mid(rest[0]), F.mid(rest[1])
    sl, sr, sa = _side(b, c, F.L), _side(b, c, F.R), _side(b, c, a)
    if sl == sa != sr:
        return _case1_quad(F, a, b, c, "C1.1")
    if sr == sa != sl:
        G = _Frame(win, -1, fy)
        return _case1_quad(G, G.mid(ia), G.mid(rest[1]), G.mid(rest[0]), "C1.2")
    # l(b, c) crosses al and ar; want b left of c with ray a->b reaching L
    if b[0] < a[0]:
        return _case1_wedge(F, a, b, c)
    G = _Frame(win, -1, fy)
    return _case1_wedge(G, G.mid(ia), G.mid(rest[1]), G.mid(rest[0]))


def _case1_quad(F: _Frame, a, b, c, cid: str) -> _Built:
    A, L, R, R1 = F.A, F.L, F.R, F.R1
    # order the convex quadrilateral as l, B, C, a: its diagonals are lC and Ba
    if _side(L, c, b) != _side(L, c, a) and _side(b, a, L) != _side(b, a, c):
        B, C = b, c
    else:
        B, C = c, b
    x = _meet(a, C, L, B)
    return _Built(cid, F, [A, L, x, a, R, R1],
                  [(B, L, x), (C, x, a)], {"x": x},
                  {"l′": A, "l": L, "a": a, "b": B, "c": C, "r": R, "r′": R1})


def _case1_wedge(F: _Frame, a, b, c) -> _Built:
    A, L, R, R1 = F.A, F.L, F.R, F.R1
    y = _at_vertical(a, b, L[0])
    y2 = _at_vertical(b, c, L[0])
    roles = {"l′": A, "l": L, "a": a, "b": b, "c": c, "r": R, "r′": R1}
    if _side(A, L, b) < 0:
        u = _meet(A, L, a, b)
        return _Built("C1.3-by", F, [A, u, a, c, R, R1],
                      [(L, A, u), (b, u, a)], {"y": y, "y′": y2, "u": u}, roles)
    u = _meet(A, L, b, c)
    return _Built("C1.3-by′", F, [A, u, c, a, R, R1],
                  [(L, A, u), (b, u, c)], {"y": y, "y′": y2, "u": u}, roles)


def _case2(win, lo, up) -> _Built:
    if len(lo) == 3 or len(up) == 3:
        F = _Frame(win, 1, 1 if lo else -1)
        A, L, R, R1 = F.A, F.L, F.R, F.R1
        a, b, c = F.M
        x = _meet(L, a, b, c)
        return _Built("C2.1", F, [A, L, x, c, R, R1],
                      [(a, L, x), (b, x, c)], {"x": x},
                      {"l′": A, "l": L, "a": a, "b": b, "c": c, "r": R, "r′": R1})
    pair, single = (lo, up) if len(lo) == 2 else (up, lo)
    fy = 1 if len(lo) == 2 else -1
    F = _Frame(win, 1, fy)
    a, b, c = F.mid(pair[0]), F.mid(pair[1]), F.mid(single[0])
    if _side(F.L, c, F.A) > 0:
        return _case2_lp(F, a, b, c, "C2.2-l′")
    if _side(c, F.R, F.R1) > 0:
        G = _Frame(win, -1, fy)
        return _case2_lp(G, G.mid(pair[1]), G.mid(pair[0]), G.mid(single[0]), "C2.2-r′")
    A, L, R, R1 = F.A, F.L, F.R, F.R1
    v = _meet(A, L, R, c)
    u = _meet_or_none(L, a, R, b)
    return _Built("C2.2-v", F, [A, v, R, a, b, R1],
                  [(L, A, v), (c, v, R)], {"u": u, "v": v},
                  {"l′": A, "l": L, "a": a, "b": b, "c": c, "r": R, "r′": R1})


def _case2_lp(F: _Frame, a, b, c, cid: str) -> _Built:
    A, L, R, R1 = F.A, F.L, F.R, F.R1
    u = _meet(L, a, R, b)
    return _Built(cid, F, [A, c, L, u, R, R1],
                  [(a, L, u), (b, u, R)], {"u": u},
                  {"l′": A, "l": L, "a": a, "b": b, "c": c, "r": R, "r′": R1})


def _case3a(win, lo, up) -> _Built:
    hull = [lo[0], up[0]]
    ic = [k for k in range(3) if k not in hull][0]
    # try the mirror about the x-axis in an order that itself flips under
    # that mirror, so mirrored windows pick mirrored frames
    fy0 = 1 if lo[0] < up[0] else -1
    for fx in (1, -1):
        for fy in (fy0, -fy0):
            F = _Frame(win, fx, fy)
            c = F.mid(ic)
            p, q = F.mid(hull[0]), F.mid(hull[1])
            a, b = (p, q) if _side(F.L, F.R, p) < 0 else (q, p)
            if _side(a, b, c) > 0 and c[0] < a[0]:
                return _case3a_built(F, a, b, c)
    raise ConstructionFailed("no normal frame for case 3a")


def _case3a_built(F: _Frame, a, b, c) -> _Built:
    A, L, R, R1 = F.A, F.L, F.R, F.R1
    roles = {"l′": A, "l": L, "a": a, "b": b, "c": c, "r": R, "r′": R1}
    y = _at_vertical(a, c, L[0])
    if c[0] < b[0]:
        y2 = _at_vertical(b, c, L[0])
        if _side(A, L, c) < 0:
            x = _meet(A, L, a, c)
            return _Built("C3a.1-cy", F, [A, x, a, b, R, R1],
                          [(L, A, x), (c, x, a)], {"y": y, "y′": y2, "x": x}, roles)
        x = _meet(A, L, b, c)
        return _Built("C3a.1-cy′", F, [A, x, b, a, R, R1],
                      [(L, A, x), (c, x, b)], {"y": y, "y′": y2, "x": x}, roles)
    u = _meet(b, c, R, a)
    return _Built("C3a.2", F, [A, L, b, u, R, R1],
                  [(c, b, u), (a, u, R)], {"y": y, "u": u}, roles)


def _forward(o, d, p) -> bool:
    # p on line od (non-vertical); is it on the ray from o through d?
    if d[0] > o[0]:
        return _xle(o, p)
    return _xle(p, o)


def _case3b(win, lo, up) -> _Built:
    pair = lo if len(lo) == 2 else up
    fy = 1 if len(lo) == 2 else -1
    ic = [k for k in range(3) if k not in pair][0]
    F = _Frame(win, 1, fy)
    A, L, R, R1 = F.A, F.L, F.R, F.R1
    a, b, c = F.mid(pair[0]), F.mid(pair[1]), F.mid(ic)
    if _side(L, c, A) > 0:
        return _case3b_lp(F, a, b, c, "C3b-l′")
    G = _Frame(win, -1, fy)
    if _side(G.L, G.mid(ic), G.A) > 0:
        return _case3b_lp(G, G.mid(pair[1]), G.mid(pair[0]), G.mid(ic), "C3b-r′")
    roles = {"l′": A, "l": L, "a": a, "b": b, "c": c, "r": R, "r′": R1}
    x = _meet_or_none(L, a, R, b)
    # does the ray b->c hit the segment al?
    if _side(b, c, a) != _side(b, c, L):
        hit = _meet(b, c, a, L)
        if _forward(b, c, hit):
            u = _meet(L, c, R, b)
            return _Built("C3b-al", F, [A, a, L, u, R, R1],
                          [(c, L, u), (b, u, R)], {"x": x, "u": u}, roles)
    zr = _meet_or_none(b, c, R1, R)
    if zr is not None and _forward(b, c, zr) and _xle(L, zr) and _xle(zr, R):
        return _Built("C3b-z-right", F, [A, L, a, b, zr, R1],
                      [(c, b, zr), (R, zr, R1)], {"x": x, "z": zr}, roles)
    z = _meet_or_none(b, c, A, L)
    if z is None or not (_forward(b, c, z) and _xle(L, z) and _xle(z, R)):
        raise ConstructionFailed("ray bc meets neither l'l nor r'r in the slab")
    R2 = F.R2
    if R2 is None:
        raise ConstructionFailed("case 3b needs a seventh point")
    roles["r″"] = R2
    aux = {"x": x, "z": z}
    if _side(R, R1, R2) < 0:
        v = _meet(b, R, R2, R1)
        aux["v"] = v
        return _Built("C3b-d", F, [A, L, a, c, b, v, R2],
                      [(R, b, v), (R1, v, R2)], aux, roles, 7)
    if _side(a, b, R1) > 0:
        w = _meet(L, a, R1, b)
        aux["w"] = w
        return _Built("C3b-e", F, [A, L, w, R1, c, R, R2],
                      [(a, L, w), (b, w, R1)], aux, roles, 7)
    return _Built("C3b-f", F, [A, z, b, a, R1, R, R2],
                  [(L, A, z), (c, z, b)], aux, roles, 7)


def _case3b_lp(F: _Frame, a, b, c, cid: str) -> _Built:
    A, L, R, R1 = F.A, F.L, F.R, F.R1
    x = _meet(L, a, R, b)
    return _Built(cid, F, [A, c, L, x, R, R1],
                  [(a, L, x), (b, x, R)], {"x": x},
                  {"l′": A, "l": L, "a": a, "b": b, "c": c, "r": R, "r′": R1})


def _dispatch(win) -> _Built:
    F = _Frame(win, 1, 1)
    lo, up = _hull_middles(F.L, F.M, F.R)
    h = 2 + len(lo) + len(up)
    if h == 3:
        return _case1(win, lo, up)
    if h == 5:
        return _case2(win, lo, up)
    if len(lo) == 1:
        return _case3a(win, lo, up)
    return _case3b(win, lo, up)


def _global_path(built: _Built) -> list:
    """Map the local path back and check the claimed covers and the slab."""
    for p, s, e in built.claims:
        if not _within(p, s, e):
            raise ConstructionFailed(f"{built.case_id}: claimed cover fails")
    F = built.frame
    if F.fx == 1 and F.fy == 1:
        path = built.path
    else:
        fx, fy = F.fx, F.fy
        path = [(fx * v[0], fy * v[1], v[2], v[3]) for v in built.path]
        if fx == -1:
            path.reverse()
    # strictly right of the first vertex, not right of the last
    x0, w0 = path[0][0], path[0][2]
    x1, w1 = path[-1][0], path[-1][2]
    for v in path[1:]:
        if v[0] * w0 <= x0 * v[2] or x1 * v[2] < v[0] * w1:
            raise ConstructionFailed(f"{built.case_id}: vertex outside the slab")
    return path


def _has_collinear(pts) -> bool:
    k = len(pts)
    for i in range(k):
        for j in range(i + 1, k):
            for m in range(j + 1, k):
                if _cross(pts[i], pts[j], pts[m]) == 0:
                    return True
    return False


def _merged_chain(pts) -> list:
    """x-monotone chain through ``pts`` (sorted by x), merging collinear runs."""
    out = [pts[0], pts[1]]
    for p in pts[2:]:
        if _cross(out[-2], out[-1], p) == 0:
            out[-1] = p
        else:
            out.append(p)
    return out


def _collinear_mask(xs: list[int], ys: list[int], span: int = 7) -> Optional[list[bool]]:
    """mask[i] is True when some three of points i .. i+span-1 are collinear.

    Vectorized over all window starts; None when int64 could overflow.
    """
    n = len(xs)
    if n < span:
        return [False] * n
    X = np.asarray(xs, dtype=object if isinstance(xs, list) else np.int64)
    Y = np.asarray(ys, dtype=object if isinstance(ys, list) else np.int64)
    if max(X.max(), -X.min(), Y.max(), -Y.min()) >= 1 << 30:
        return None
    X, Y = X.astype(np.int64), Y.astype(np.int64)
    m = n - span + 1
    out = np.zeros(m, dtype=bool)
    # every triple of a window is a shifted copy of a triple (a, a+d1, a+d2)
    for d1 in range(1, span - 1):
        for d2 in range(d1 + 1, span):
            t = n - d2
            col = ((X[d1:d1 + t] - X[:t]) * (Y[d2:d2 + t] - Y[:t])
                   == (Y[d1:d1 + t] - Y[:t]) * (X[d2:d2 + t] - X[:t]))
            for shift in range(span - d2):
                out |= col[shift:shift + m]
    res = out.tolist()
    res.extend([True] * (n - m))
    return res


# ---------------------------------------------------------------------------
# solve


class _Scan:
    def __init__(self, ps: PointSet, opts: SolveOptions):
        self.ps = ps
        self.opts = opts
        self.warnings: list[str] = []
        self.traces: list[IterationTrace] = []

    def to_point(self, v) -> Point:
        if v[3] >= 0:
            return self.ps.points[v[3]]
        q, p, d = self.q, self.p, self.den
        X, Y, W = v[0], v[1], v[2]
        s = W * q * d
        return Point(Fraction(q * X - p * Y, s * q), Fraction(Y, s))

    def solver_point(self, v) -> Point:
        return Point(Fraction(v[0], v[2]), Fraction(v[1], v[2]))

    def from_solver(self, p: Point, lookup: dict):
        hit = lookup.get(p)
        if hit is not None:
            return hit
        w = p.x.denominator * p.y.denominator // gcd(p.x.denominator, p.y.denominator)
        return (p.x.numerator * (w // p.x.denominator), p.y.numerator * (w // p.y.denominator), w, -1)

    def chain(self, win):
        """Cheapest budget path: an x-monotone chain in which three
        consecutive collinear points share one segment."""
        for k in (6, 7):
            if len(win) > k:
                chain = _merged_chain(win[:1 + k])
                if len(chain) <= k:
                    return chain, k, k - 1, False
        return None

    def window_by_solver(self, win, start: int):
        """Degenerate or failed window: bounded exact search, then fallback."""
        chain = self.chain(win)
        if chain is not None:
            return chain
        for k, budget in ((6, 5), (7, 6)):
            targets = win[1:1 + k]
            if len(targets) < k:
                continue
            sp = [self.solver_point(v) for v in win[:1 + k]]
            lookup = {p: v for p, v in zip(sp, win)}
            found = window_solver.solve_window(
                window_solver.WindowProblem(sp[0], tuple(sp[1:]), budget))
            if found is not None:
                return [self.from_solver(p, lookup) for p in found], k, budget, False
        if self.opts.degeneracy_mode is DegeneracyMode.STRICT:
            raise DegenerateWindowUnsolvable(f"window at sorted position {start}")
        msg = f"window at sorted position {start}: no budget path found; used a monotone chain"
        log.warning(msg)
        self.warnings.append(msg)
        return list(win[:7]), 6, 5, True

    def attempt(self, win, degenerate: bool):
        built = _dispatch(win)
        if built.consumed == 7 and not degenerate:
            degenerate = _has_collinear(win[:8])
        path = _global_path(built)
        if degenerate or self.opts.check_windows:
            if not validate_subpath(path, win[1:1 + built.consumed]):
                raise ConstructionFailed(f"{built.case_id}: subpath check failed")
        return built, path

    def iteration(self, win, start: int, degenerate: bool):
        built = None
        found = None
        if not degenerate:
            try:
                built, path = self.attempt(win, False)
            except (DegenerateInput, ConstructionFailed) as exc:
                log.debug("window %d rejected: %s", start, exc)
        else:
            found = self.chain(win)
            if found is None:
                for tie in (0, 1, -1):
                    token = _TIE.set(tie)
                    try:
                        built, path = self.attempt(win, True)
                        break
                    except (DegenerateInput, ConstructionFailed) as exc:
                        log.debug("window %d (tie %d) rejected: %s", start, tie, exc)
                    finally:
                        _TIE.reset(token)
        if built is None and found is None:
            found = self.window_by_solver(win, start)
        if found is not None:
            path, consumed, budget, fallback = found
            if self.opts.record_trace:
                self.traces.append(IterationTrace(
                    "DEGEN-SOLVER", self.to_point(win[0]),
                    tuple(self.to_point(v) for v in path[1:]), consumed, budget,
                    fallback=fallback))
            return path, consumed
        if self.opts.record_trace:
            F = built.frame
            conv = lambda v: self.to_point(F.to_global(v))
            self.traces.append(IterationTrace(
                built.case_id, self.to_point(path[0]),
                tuple(self.to_point(v) for v in path[1:]), built.consumed,
                built.consumed - 1,
                {k: conv(v) for k, v in built.aux.items() if v is not None},
                {k: conv(v) for k, v in built.roles.items()},
                (F.fx == -1, F.fy == -1)))
        return path, built.consumed

    def run(self) -> Solution:
        # the scan allocates millions of small acyclic tuples; cyclic GC
        # passes over them only cost time
        enabled = gc.isenabled()
        gc.disable()
        try:
            return self._run()
        finally:
            if enabled:
                gc.enable()

    def _run(self) -> Solution:
        t0 = time.perf_counter()
        ps = self.ps
        n = len(ps.points)
        frame = IntegerFrame.from_points(ps.points)
        shear = shear_for_frame(frame)
        arrays = sorted_frame_arrays(frame, shear)
        if arrays is not None:
            o, X, Y = arrays
            p, q = shear.epsilon.numerator, shear.epsilon.denominator
            order, sx, sy = o.tolist(), (q * X + p * Y).tolist(), (q * Y).tolist()
        else:
            order, sx, sy, q = sheared_sort_order(frame, shear)
        self.p, self.q, self.den = shear.epsilon.numerator, q, frame.denominator
        pts = list(zip(sx, sy, [1] * n, order))
        t1 = time.perf_counter()

        verts = [pts[0]]
        i = 0
        windows = 0
        if n > 7:
            if arrays is not None:
                mask = _collinear_mask(X, Y)
            else:
                mask = _collinear_mask([frame.xs[k] for k in order], [frame.ys[k] for k in order])
            while n - 1 - i >= 7:
                win = pts[i:i + 8]
                degenerate = mask[i] if mask is not None else _has_collinear(win[:7])
                sub, consumed = self.iteration(win, i, degenerate)
                verts.extend(sub[1:])
                i += consumed
                windows += 1
        if i < n - 1:
            tail = pts[i + 1:]
            if self.opts.record_trace:
                self.traces.append(IterationTrace(
                    "FINAL-TAIL", self.to_point(pts[i]),
                    tuple(self.to_point(v) for v in tail), len(tail), len(tail)))
            verts.extend(tail)
        t2 = time.perf_counter()
        # drop consecutive repeats (a constructed bend landing on an input
        # point) while converting back to Points
        to_point, points = self.to_point, ps.points
        first = verts[0]
        out = [points[first[3]] if first[3] >= 0 else to_point(first)]
        out += [points[v[3]] if v[3] >= 0 else to_point(v)
                for u, v in zip(verts, verts[1:])
                if (v[3] != u[3] if v[3] >= 0 and u[3] >= 0 else not _same(u, v))]
        path = CoveringPath._trusted(tuple(out))
        t3 = time.perf_counter()
        return Solution(path, self.traces, self.warnings, shear, ps.duplicates,
                        {"prepare": t1 - t0, "scan": t2 - t1, "output": t3 - t2,
                         "total": t3 - t0}, windows)


def solve(points: "PointSet | Iterable[Point]", opts: Optional[SolveOptions] = None) -> Solution:
    """Plane covering path for ``points`` with at most ceil(6n/7) segments
    (unless a degenerate window forced the monotone fallback; see warnings)."""
    ps = as_point_set(points)
    if not ps.points:
        raise EmptyInput("no points to cover")
    return _Scan(ps, opts or SolveOptions()).run()


def final_tail(state: ScanState) -> list[Point]:
    """Vertices appended by the last iteration: the leftover points in x-order,
    the first one joined to the current rightmost point."""
    if len(state.remaining) > 6:
        raise ValueError("the last iteration sees at most six points")
    return sorted(state.remaining)


# ---------------------------------------------------------------------------
# single-window surface, in the caller's frame (x already strictly increasing)


def _window_tuples(w: Window):
    pts = [w.anchor, *w.pts]
    fr = IntegerFrame.from_points(pts)
    return [(x, y, 1, k) for k, (x, y) in enumerate(zip(fr.xs, fr.ys))], fr.denominator, pts


def _window_point(v, d: int, pts) -> Point:
    if v[3] >= 0:
        return pts[v[3]]
    return Point(Fraction(v[0], v[2] * d), Fraction(v[1], v[2] * d))


_FAMILY = {"C1": "Case1", "C2": "Case2", "C3a": "Case3a", "C3b": "Case3b"}


@dataclass
class WindowClass:
    case: str
    case_id: str
    roles: dict[str, Point]
    reflection_flags: tuple[bool, bool]


def classify_window(w: Window) -> WindowClass:
    """Hull-size case of S = {l, a, b, c, r} plus roles and the mirror used.

    Raises DegenerateInput when a predicate the case analysis needs is tied.
    """
    win, d, pts = _window_tuples(w)
    if _has_collinear(win[:7]):
        raise DegenerateInput("collinear triple in window")
    built = _dispatch(win)
    fam = built.case_id.split(".")[0].split("-")[0]
    conv = lambda v: _window_point(built.frame.to_global(v), d, pts)
    return WindowClass(_FAMILY[fam], built.case_id,
                       {k: conv(v) for k, v in built.roles.items()},
                       (built.frame.fx == -1, built.frame.fy == -1))


def construct_window_path(w: Window) -> tuple[list[Point], IterationTrace, int]:
    """Appended vertices (after the anchor) for one window.

    Collinear triples are tolerated as long as no predicate the case analysis
    evaluates is tied (else DegenerateInput); the result is then re-checked
    exactly and ConstructionFailed raised if it is not a valid subpath.
    """
    win, d, pts = _window_tuples(w)
    built = _dispatch(win)
    path = _global_path(built)
    if _has_collinear(win[:built.consumed + 1]):
        if not validate_subpath(path, win[1:1 + built.consumed]):
            raise ConstructionFailed(f"{built.case_id}: subpath check failed")
    F = built.frame
    conv = lambda v: _window_point(F.to_global(v), d, pts)
    out = [_window_point(v, d, pts) for v in path]
    trace = IterationTrace(built.case_id, out[0], tuple(out[1:]), built.consumed,
                           built.consumed - 1,
                           {k: conv(v) for k, v in built.aux.items() if v is not None},
                           {k: conv(v) for k, v in built.roles.items()},
                           (F.fx == -1, F.fy == -1))
    return out[1:], trace, built.consumed
