import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from planecover.planner import IterationTrace, solve
from planecover.verifier import CrossingMode, bound_for, check_invariant_trace, verify

from conftest import P, points

FOUR_STROKE = [P(2, 2), P(0, 0), P(0, 3), P(3, 0), P(1, 0)]


def test_bound_values():
    assert [bound_for(n) for n in (1, 2, 7, 8, 14, 15)] == [1, 2, 6, 7, 12, 13]


def test_nine_dot_four_stroke(nine_dot):
    rep = verify(nine_dot, FOUR_STROKE)
    assert rep.covered and rep.segment_count == 4
    assert rep.bound == 8 and rep.within_bound
    # the diagonal and the anti-diagonal cross at (3/2, 3/2)
    assert rep.proper_crossings == [(0, 2)]
    assert not rep.plane and not rep.passed


def test_uncovered_reported(nine_dot):
    rep = verify(nine_dot, [P(0, 0), P(2, 0), P(2, 2)])
    assert not rep.covered
    assert rep.uncovered_indices == [3, 4, 6, 7]


def test_single_vertex_path():
    assert verify([P(1, 1)], [P(1, 1)]).passed
    rep = verify([P(1, 1), P(2, 2)], [P(1, 1)])
    assert rep.uncovered_indices == [1]


def test_touching_modes():
    pts = [P(0, 0), P(2, 0), P(1, 1)]
    path = [P(0, 0), P(2, 0), P(1, 1), P(1, 0)]
    strict = verify(pts, path)
    assert strict.touchings == [(0, 2)] and not strict.proper_crossings
    assert not strict.plane
    std = verify(pts, path, CrossingMode.STANDARD)
    assert std.plane and std.passed
    assert std.segment_count == 3 == std.bound


def test_collinear_overlap_is_a_crossing():
    pts = [P(0, 0), P(3, 0)]
    rep = verify(pts, [P(0, 0), P(3, 0), P(3, 1), P(1, 0), P(2, 0)], CrossingMode.STANDARD)
    assert (0, 3) in rep.proper_crossings


def test_method_validation():
    with pytest.raises(ValueError):
        verify([P(0, 0)], [P(0, 0)], method="grid")


paths = st.lists(points(-6, 6, 2), min_size=1, max_size=12)


@given(st.lists(points(-6, 6, 2), min_size=1, max_size=10, unique=True), paths)
def test_sweep_matches_pairwise(pts, path):
    a = verify(pts, path, method="sweep")
    b = verify(pts, path, method="pairwise")
    assert a.as_dict() == b.as_dict()


@given(st.lists(points(-6, 6, 2), min_size=1, max_size=10, unique=True), paths)
def test_strict_implies_standard(pts, path):
    if verify(pts, path, CrossingMode.STRICT).passed:
        assert verify(pts, path, CrossingMode.STANDARD).passed


# --- invariant traces -------------------------------------------------------------------

def monotone_trace(pts, consumed):
    anchor, new = pts[0], pts[1:1 + consumed]
    return IterationTrace("FAKE", anchor, tuple(new), consumed, consumed - 1)


def test_invariant_accepts_solver_traces():
    rng = random.Random(3)
    pts = [P(rng.randint(0, 999), rng.randint(0, 999)) for _ in range(40)]
    sol = solve(pts)
    assert check_invariant_trace(sol.traces, pts)


def test_invariant_one_point():
    assert check_invariant_trace(solve([P(0, 0)]).traces, [P(0, 0)])
    assert check_invariant_trace([], [P(0, 0)])


def test_invariant_rejects_overspending():
    pts = [P(k, (k * k) % 5) for k in range(7)]
    bad = monotone_trace(pts, 6)   # six segments for six new points
    chk = check_invariant_trace([bad], pts)
    assert not chk and chk.index == 0
    assert "6 segments for 6 points" in chk.reason


def test_invariant_rejects_slab_escape():
    pts = [P(k, (k * k) % 5) for k in range(7)]
    t = monotone_trace(pts, 6)
    verts = (P(9, 9),) + t.appended_vertices[2:]
    t = IterationTrace("FAKE", t.anchor, verts, 6, 5)
    chk = check_invariant_trace([t], pts)
    assert not chk and "slab" in chk.reason


def test_invariant_rejects_wrong_anchor_and_short_scan():
    pts = [P(k, (k * k) % 5) for k in range(7)]
    t = IterationTrace("FAKE", P(1, 1), (P(2, 4),), 1, 0)
    assert "anchor" in check_invariant_trace([t], pts).reason
    assert "scanned 1 of 7" in check_invariant_trace([], pts).reason
