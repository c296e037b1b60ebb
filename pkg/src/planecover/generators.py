"""Seedable point-set generators.

Every kind draws from ``numpy.random.Generator(PCG64(seed))`` and emits exact
rationals ``k / coordinate_scale`` (ConvexPosition uses rational points of the
unit circle instead), so a spec always produces the same bits.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidSpec
from .geometry import Point
from .preprocess import PointSet

PRNG_NAME = "numpy PCG64"


class Kind(enum.Enum):
    UNIFORM_SQUARE = "UniformSquare"
    GRID = "Grid"
    CONVEX_POSITION = "ConvexPosition"
    CLUSTERED = "Clustered"
    COLLINEAR_HEAVY = "CollinearHeavy"

    @classmethod
    def parse(cls, s: str) -> "Kind":
        key = s.replace("-", "").replace("_", "").lower()
        for k in cls:
            if k.value.lower() == key:
                return k
        raise InvalidSpec(f"unknown kind {s!r}")


@dataclass(frozen=True)
class GenSpec:
    kind: Kind
    n: int
    seed: int = 0
    coordinate_scale: int = 10**6

    def __post_init__(self) -> None:
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", Kind.parse(self.kind))
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidSpec("n must be a positive integer")
        if not isinstance(self.coordinate_scale, int) or self.coordinate_scale < 1:
            raise InvalidSpec("coordinate_scale must be a positive integer")
        if not 0 <= self.seed < 1 << 64:
            raise InvalidSpec("seed must fit in 64 unsigned bits")

    def header(self) -> str:
        return (f"kind={self.kind.value} n={self.n} seed={self.seed} "
                f"coordinate_scale={self.coordinate_scale} prng={PRNG_NAME}")


def _rng(spec: GenSpec) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(spec.seed))


def _distinct_lattice(rng, n: int, side: int, extra=()) -> list[tuple[int, int]]:
    """n distinct lattice points of [0, side)^2, ``extra`` ones first."""
    seen: set[tuple[int, int]] = set()
    out: list[tuple[int, int]] = []
    for p in extra:
        if p not in seen:
            seen.add(p)
            out.append(p)
    while len(out) < n:
        need = n - len(out)
        block = rng.integers(0, side, size=(need + need // 8 + 8, 2)).tolist()
        for x, y in block:
            if (x, y) not in seen:
                seen.add((x, y))
                out.append((x, y))
                if len(out) == n:
                    break
    return out


def _scaled(pairs, scale: int) -> list[Point]:
    return [Point(Fraction(x, scale), Fraction(y, scale)) for x, y in pairs]


def _uniform(spec: GenSpec) -> list[Point]:
    s = spec.coordinate_scale
    if spec.n > s * s:
        raise InvalidSpec("n exceeds the number of lattice cells")
    return _scaled(_distinct_lattice(_rng(spec), spec.n, s), s)


def _grid(spec: GenSpec) -> list[Point]:
    side = math.isqrt(spec.n - 1) + 1
    return [Point(k % side, k // side) for k in range(spec.n)]


def _convex(spec: GenSpec) -> list[Point]:
    # rational points of the unit circle: t -> ((1 - t^2), 2t) / (1 + t^2)
    s = spec.coordinate_scale
    span = 4 * s
    if spec.n > 2 * span + 1:
        raise InvalidSpec("n too large for the parameter range")
    rng = _rng(spec)
    seen: set[int] = set()
    ks: list[int] = []
    while len(ks) < spec.n:
        for k in rng.integers(-span, span + 1, size=spec.n - len(ks) + 4).tolist():
            if k not in seen and len(ks) < spec.n:
                seen.add(k)
                ks.append(k)
    flip = -1 if rng.integers(0, 2) else 1
    out = []
    for k in ks:
        t = Fraction(k, s)
        d = 1 + t * t
        out.append(Point(flip * (1 - t * t) / d, 2 * t / d))
    return out


def _clustered(spec: GenSpec) -> list[Point]:
    s = spec.coordinate_scale
    if spec.n > s * s:
        raise InvalidSpec("n exceeds the number of lattice cells")
    rng = _rng(spec)
    k = max(1, spec.n // 40)
    centers = rng.random((k, 2))
    sigma = 0.03
    seen: set[tuple[int, int]] = set()
    out: list[tuple[int, int]] = []
    while len(out) < spec.n:
        c = centers[rng.integers(0, k, size=spec.n)]
        raw = np.clip(c + rng.normal(0.0, sigma, size=c.shape), 0.0, 1.0 - 1.0 / s)
        cells = np.floor(raw * s).astype(np.int64).tolist()
        for x, y in cells:
            if (x, y) not in seen:
                seen.add((x, y))
                out.append((x, y))
                if len(out) == spec.n:
                    break
    return _scaled(out, s)


def _collinear_heavy(spec: GenSpec) -> list[Point]:
    s = spec.coordinate_scale
    side = min(s, max(8, 4 * spec.n))
    if spec.n > side * side:
        raise InvalidSpec("n exceeds the number of lattice cells")
    rng = _rng(spec)
    planted: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for _ in range(spec.n // 3):
        for _attempt in range(50):
            px, py = rng.integers(0, side, size=2).tolist()
            dx, dy = rng.integers(-(side // 4), side // 4 + 1, size=2).tolist()
            tri = [(px + i * dx, py + i * dy) for i in range(3)]
            if (dx, dy) == (0, 0) or any(not (0 <= x < side and 0 <= y < side) for x, y in tri):
                continue
            if any(p in seen for p in tri):
                continue
            seen.update(tri)
            planted.extend(tri)
            break
    return _scaled(_distinct_lattice(rng, spec.n, side, planted), s)


_KINDS = {
    Kind.UNIFORM_SQUARE: _uniform,
    Kind.GRID: _grid,
    Kind.CONVEX_POSITION: _convex,
    Kind.CLUSTERED: _clustered,
    Kind.COLLINEAR_HEAVY: _collinear_heavy,
}


def generate(spec: GenSpec) -> PointSet:
    pts = _KINDS[spec.kind](spec)
    return PointSet(tuple(pts), tuple(range(len(pts))), ())
