"""Independent certification of covering paths.

Only the exact primitives in :mod:`planecover.geometry` (and the shear, to
recover the scan order) are used here; nothing from the planner.
"""
from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence

from .geometry import (Point, Segment, point_on_segment, segments_intersect,
                       segments_properly_cross)
from .preprocess import PointSet, as_point_set, compute_shear


class CrossingMode(enum.Enum):
    STRICT = "strict"
    STANDARD = "standard"


def bound_for(n: int) -> int:
    """ceil(6n/7)."""
    return -(-6 * n // 7)


@dataclass
class VerificationReport:
    covered: bool
    uncovered_indices: list[int]
    proper_crossings: list[tuple[int, int]]
    touchings: list[tuple[int, int]]
    segment_count: int
    bound: int
    within_bound: bool
    mode: CrossingMode = CrossingMode.STRICT
    invariant_ok: Optional[bool] = None

    @property
    def plane(self) -> bool:
        if self.proper_crossings:
            return False
        return self.mode is CrossingMode.STANDARD or not self.touchings

    @property
    def passed(self) -> bool:
        return self.covered and self.plane and self.within_bound

    def as_dict(self) -> dict[str, Any]:
        return {
            "covered": self.covered,
            "uncovered_indices": self.uncovered_indices,
            "proper_crossings": [list(p) for p in self.proper_crossings],
            "touchings": [list(p) for p in self.touchings],
            "segment_count": self.segment_count,
            "bound": self.bound,
            "within_bound": self.within_bound,
            "mode": self.mode.value,
            "invariant_ok": self.invariant_ok,
            "passed": self.passed,
        }


def _vertices(path: Any) -> list[Point]:
    vs = list(getattr(path, "vertices", path))
    return [v for i, v in enumerate(vs) if i == 0 or v != vs[i - 1]]


def _classify(segs: Sequence[Segment], i: int, j: int,
              crossings: list, touchings: list) -> None:
    if segments_properly_cross(segs[i], segs[j]):
        crossings.append((i, j))
    elif j > i + 1 and segments_intersect(segs[i], segs[j]):
        touchings.append((i, j))


def _pairs_pairwise(segs: Sequence[Segment]) -> tuple[list, list]:
    crossings: list = []
    touchings: list = []
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            _classify(segs, i, j, crossings, touchings)
    return crossings, touchings


def _pairs_sweep(segs: Sequence[Segment]) -> tuple[list, list]:
    # segments whose x-extents are disjoint cannot meet
    spans = sorted((min(s.a.x, s.b.x), max(s.a.x, s.b.x), k) for k, s in enumerate(segs))
    crossings: list = []
    touchings: list = []
    for idx, (lo, hi, i) in enumerate(spans):
        for lo2, _, j in spans[idx + 1:]:
            if lo2 > hi:
                break
            a, b = (i, j) if i < j else (j, i)
            _classify(segs, a, b, crossings, touchings)
    crossings.sort()
    touchings.sort()
    return crossings, touchings


def _uncovered(points: Sequence[Point], verts: Sequence[Point],
               segs: Sequence[Segment]) -> list[int]:
    if not segs:
        return [k for k, p in enumerate(points) if not verts or p != verts[0]]
    order = sorted(range(len(points)), key=lambda k: points[k].x)
    xs = [points[k].x for k in order]
    hit = [False] * len(points)
    for s in segs:
        lo, hi = (s.a.x, s.b.x) if s.a.x <= s.b.x else (s.b.x, s.a.x)
        for pos in range(bisect.bisect_left(xs, lo), bisect.bisect_right(xs, hi)):
            k = order[pos]
            if not hit[k] and point_on_segment(points[k], s):
                hit[k] = True
    return [k for k, h in enumerate(hit) if not h]


def verify(points: "PointSet | Iterable[Point]", path: Any,
           mode: CrossingMode = CrossingMode.STRICT, method: str = "sweep") -> VerificationReport:
    """Check coverage, crossings (per ``mode``) and the ceil(6n/7) bound.

    ``method`` is ``"sweep"`` (x-extent pruning) or ``"pairwise"``; both give
    identical reports.
    """
    ps = as_point_set(points)
    pts = list(ps.points)
    verts = _vertices(path)
    segs = [Segment(a, b) for a, b in zip(verts, verts[1:])]
    uncovered = _uncovered(pts, verts, segs)
    if method == "pairwise":
        crossings, touchings = _pairs_pairwise(segs)
    elif method == "sweep":
        crossings, touchings = _pairs_sweep(segs)
    else:
        raise ValueError(f"unknown method {method!r}")
    bound = bound_for(len(pts))
    return VerificationReport(not uncovered, uncovered, crossings, touchings,
                              len(segs), bound, len(segs) <= bound, mode)


@dataclass
class InvariantCheck:
    ok: bool
    index: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_invariant_trace(traces: Sequence[Any], points: "PointSet | Iterable[Point]") -> InvariantCheck:
    """Replay per-iteration traces against the scan invariant.

    After every intermediate iteration the path may use at most floor(6m/7)
    segments for the m points scanned, each appended piece must stay in the
    slab between its anchor and the new rightmost point, and that rightmost
    point must be the piece's only endpoint there (degree one).
    """
    ps = as_point_set(points)
    n = len(ps.points)
    if n == 0:
        return InvariantCheck(False, None, "no points")
    eps = compute_shear(ps).epsilon
    key = lambda p: p.x + eps * p.y
    order = sorted(ps.points, key=key)
    rightmost = order[0]
    m, seg, pos = 1, 0, 1
    for idx, t in enumerate(traces):
        fail = lambda why: InvariantCheck(False, idx, why)
        if t.anchor != rightmost:
            return fail("anchor is not the rightmost scanned point")
        new = order[pos:pos + t.consumed]
        if len(new) != t.consumed or t.consumed < 1:
            return fail("consumed more points than remain")
        app = list(t.appended_vertices)
        if not app or app[-1] != new[-1]:
            return fail("piece does not end at the new rightmost point")
        lo, hi = key(t.anchor), key(new[-1])
        if any(not (lo < key(v) <= hi) for v in app):
            return fail("vertex outside the slab")
        if new[-1] in app[:-1]:
            return fail("new rightmost point has degree above one")
        piece = [Segment(a, b) for a, b in zip([t.anchor] + app, app)]
        if any(not any(point_on_segment(p, s) for s in piece) for p in new):
            return fail("scanned point not covered by its piece")
        seg += len(app)
        m += t.consumed
        pos += t.consumed
        rightmost = new[-1]
        if t.case_id == "FINAL-TAIL":
            if len(app) > t.consumed or seg > bound_for(n):
                return fail("final piece over budget")
        else:
            if len(app) > t.consumed - 1:
                return fail(f"{len(app)} segments for {t.consumed} points")
            if seg > 6 * m // 7:
                return fail(f"{seg} segments exceed floor(6*{m}/7)")
    if m != n:
        return InvariantCheck(False, len(traces), f"scanned {m} of {n} points")
    return InvariantCheck(True)
