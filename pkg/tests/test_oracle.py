import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planecover.errors import EmptyInput, TooLarge
from planecover.oracle import OracleMode, min_link_path
from planecover.planner import solve
from planecover.verifier import CrossingMode, verify

from conftest import P


def covers(points, witness):
    rep = verify(points, witness, CrossingMode.STANDARD)
    return rep.covered


def test_nine_dot_needs_four(nine_dot):
    res = min_link_path(nine_dot)
    assert res.min_segments == 4
    assert res.lower_bound == 3 and res.refuted == [3]
    assert res.complete
    assert covers(nine_dot, res.witness)
    # the classic four-line answer crosses itself
    assert verify(nine_dot, res.witness).proper_crossings


def test_nine_dot_plane_is_not_below_crossing(nine_dot):
    res = min_link_path(nine_dot, "plane")
    assert res.min_segments >= 4
    assert covers(nine_dot, res.witness)
    assert not verify(nine_dot, res.witness, CrossingMode.STANDARD).proper_crossings


def test_tiny_inputs():
    assert min_link_path([P(3, 4)]).min_segments == 0
    assert min_link_path([P(0, 0), P(5, 1)]).min_segments == 1
    line = [P(k, 2 * k) for k in range(6)]
    assert min_link_path(line).min_segments == 1


def test_convex_pentagon():
    pts = [P(0, 0), P(4, 0), P(5, 3), P(2, 5), P(-1, 3)]
    res = min_link_path(pts)
    # two points per segment at most, four segments always suffice
    assert 3 <= res.min_segments <= 4
    assert covers(pts, res.witness)


def test_limits():
    with pytest.raises(TooLarge):
        min_link_path([P(k, k * k) for k in range(10)])
    with pytest.raises(EmptyInput):
        min_link_path([])


small_sets = st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
                      min_size=1, max_size=6, unique=True)


@settings(max_examples=30)
@given(small_sets)
def test_plane_between_crossing_and_planner(raw):
    pts = [P(x, y) for x, y in raw]
    cr = min_link_path(pts, OracleMode.CROSSING)
    pl = min_link_path(pts, OracleMode.PLANE)
    assert covers(pts, cr.witness) and covers(pts, pl.witness)
    assert not verify(pts, pl.witness, CrossingMode.STANDARD).proper_crossings
    assert cr.lower_bound <= cr.min_segments <= pl.min_segments
    assert pl.min_segments <= solve(pts).segment_count
    assert pl.complete == (pl.min_segments == cr.min_segments)
