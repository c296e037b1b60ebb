import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planecover.errors import InvalidSpec
from planecover.generators import GenSpec, Kind, generate
from planecover.geometry import convex_hull_small, cross
from planecover.preprocess import PointSet

from conftest import P

KINDS = [k.value for k in Kind]


def test_grid_nine():
    ps = generate(GenSpec("Grid", 9))
    assert set(ps.points) == {P(x, y) for x in range(3) for y in range(3)}


def test_grid_partial_row():
    ps = generate(GenSpec(Kind.GRID, 5))
    assert list(ps.points) == [P(0, 0), P(1, 0), P(2, 0), P(0, 1), P(1, 1)]


@pytest.mark.parametrize("kind", KINDS)
def test_deterministic_and_distinct(kind):
    a = generate(GenSpec(kind, 300, 7))
    b = generate(GenSpec(kind, 300, 7))
    assert a.points == b.points
    assert len(a.points) == 300 == len(set(a.points))
    assert not a.duplicates


@pytest.mark.parametrize("kind", ["UniformSquare", "ConvexPosition", "Clustered", "CollinearHeavy"])
def test_seeds_differ(kind):
    assert generate(GenSpec(kind, 50, 1)).points != generate(GenSpec(kind, 50, 2)).points


def test_scale_is_the_denominator():
    ps = generate(GenSpec("UniformSquare", 200, 0, 1000))
    assert all(1000 % p.x.denominator == 0 and 1000 % p.y.denominator == 0 for p in ps.points)
    assert all(0 <= p.x <= 1 and 0 <= p.y <= 1 for p in ps.points)


def hull_size(pts):
    # monotone chain, independent of geometry.convex_hull_small
    pts = sorted(set(pts), key=lambda p: (p.x, p.y))
    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out
    return len(half(pts)) + len(half(pts[::-1])) - 2


@settings(max_examples=20)
@given(st.integers(3, 120), st.integers(0, 2**63))
def test_convex_position(n, seed):
    ps = generate(GenSpec("ConvexPosition", n, seed))
    assert hull_size(ps.points) == n


def test_convex_hull_helper_agrees():
    pts = list(generate(GenSpec("ConvexPosition", 7, 4)).points)
    assert len(convex_hull_small(pts)) == 7


def test_collinear_heavy_has_triples():
    ps = generate(GenSpec("CollinearHeavy", 90, 1))
    pts = list(ps.points)
    # planted triples are consecutive in generation order
    assert any(cross(a, b, c) == 0 for a, b, c in zip(pts, pts[1:], pts[2:]))


def test_header_names_everything():
    h = GenSpec("Clustered", 10, 3, 100).header()
    assert h == "kind=Clustered n=10 seed=3 coordinate_scale=100 prng=numpy PCG64"


@pytest.mark.parametrize("bad", [
    dict(kind="Spiral", n=5), dict(kind="Grid", n=0), dict(kind="Grid", n=5, seed=-1),
    dict(kind="Grid", n=5, coordinate_scale=0), dict(kind="Grid", n=2.5),
])
def test_invalid_specs(bad):
    with pytest.raises(InvalidSpec):
        GenSpec(**bad)


def test_kind_parse_is_lenient():
    assert Kind.parse("uniform_square") is Kind.UNIFORM_SQUARE
    assert Kind.parse("collinear-heavy") is Kind.COLLINEAR_HEAVY
    assert isinstance(generate(GenSpec("grid", 4)), PointSet)
