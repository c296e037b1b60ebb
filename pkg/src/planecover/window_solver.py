"""Exact bounded search for small covering paths.

Candidate bends are the vertices of the arrangement of lines through pairs of
input points (plus, for windows, the two slab verticals).  A move runs from
the current bend along one of the arrangement lines through it to another
bend on that line and covers every target it passes over; a window path may
also finish with a direct connector to its fixed endpoint.

The same machinery backs the global oracle (free start and end, no slab).
A relaxed search that ignores crossings is memoized and used to prune the
plane search: if a state cannot be completed even with crossings allowed it
cannot be completed without them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .errors import BudgetTooLarge
from .geometry import (Line, Point, Segment, bbox_overlap, cross,
                       line_line_intersection, point_on_segment,
                       segments_intersect)

MAX_BUDGET = 8


@dataclass(frozen=True)
class WindowProblem:
    anchor: Point
    targets: tuple[Point, ...]
    budget: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(sorted(self.targets)))
        if len(set(self.targets)) != len(self.targets):
            raise ValueError("targets must be distinct")
        if any(t.x <= self.anchor.x for t in self.targets):
            raise ValueError("anchor must lie strictly left of every target")

    @property
    def slab(self) -> tuple[Fraction, Fraction]:
        return self.anchor.x, self.targets[-1].x


def _popcount(v: int) -> int:
    return bin(v).count("1")


class Arrangement:
    """Lines through pairs of ``sites`` and the bends where they meet.

    ``targets`` are the sites that must be covered (bit ``i`` of a mask is
    ``targets[i]``); extra sites such as the window anchor only span lines.
    """

    def __init__(self, targets: Sequence[Point], extra_sites: Sequence[Point] = (),
                 verticals: Sequence[Fraction] = (),
                 keep: Optional[Callable[[Point], bool]] = None):
        self.targets = list(targets)
        self.bit = {t: 1 << i for i, t in enumerate(self.targets)}
        sites = self.targets + [s for s in extra_sites if s not in self.bit]
        self.full = (1 << len(self.targets)) - 1

        lines: list[Line] = []
        members: list[tuple[Point, ...]] = []
        seen: set[frozenset] = set()
        for i, p in enumerate(sites):
            for q in sites[i + 1:]:
                on = frozenset(s for s in sites if cross(p, q, s) == 0)
                if on in seen:
                    continue
                seen.add(on)
                lines.append(Line(p, q))
                members.append(tuple(on))
        for x in verticals:
            lines.append(Line(Point(x, 0), Point(x, 1)))
            members.append(tuple(s for s in sites if s.x == x))
        self.lines = lines

        on_line: dict[Point, set[int]] = {}
        for k, ms in enumerate(members):
            for s in ms:
                on_line.setdefault(s, set()).add(k)
        for i in range(len(lines)):
            for j in range(i + 1, len(lines)):
                p = line_line_intersection(lines[i], lines[j])
                if p is None:
                    continue
                s = on_line.setdefault(p, set())
                s.add(i)
                s.add(j)
        if keep is not None:
            on_line = {p: ls for p, ls in on_line.items() if p in self.bit or keep(p) or p in sites}
        self.vertex_lines = on_line
        self.line_vertices: list[list[Point]] = [[] for _ in lines]
        for p, ls in on_line.items():
            for k in ls:
                self.line_vertices[k].append(p)
        for vs in self.line_vertices:
            vs.sort()
        self.max_on_line = max([_popcount(self._mask(ms)) for ms in members] + [1])
        self._moves: dict[Point, list[tuple[Point, int]]] = {}
        self._reach: dict[Point, set[Point]] = {}

    def _mask(self, pts: Iterable[Point]) -> int:
        m = 0
        for p in pts:
            m |= self.bit.get(p, 0)
        return m

    def moves(self, v: Point) -> list[tuple[Point, int]]:
        """Bends reachable from v along one arrangement line, with the mask of
        targets covered on the way (endpoints included)."""
        got = self._moves.get(v)
        if got is not None:
            return got
        out: dict[Point, int] = {}
        for k in sorted(self.vertex_lines.get(v, ())):
            vs = self.line_vertices[k]
            i = vs.index(v)
            acc = self.bit.get(v, 0)
            for j in range(i + 1, len(vs)):
                acc |= self.bit.get(vs[j], 0)
                out[vs[j]] = out.get(vs[j], 0) | acc
            acc = self.bit.get(v, 0)
            for j in range(i - 1, -1, -1):
                acc |= self.bit.get(vs[j], 0)
                out[vs[j]] = out.get(vs[j], 0) | acc
        got = sorted(out.items(), key=lambda it: (-_popcount(it[1]), it[0]))
        self._moves[v] = got
        return got

    def reachable(self, v: Point) -> set[Point]:
        got = self._reach.get(v)
        if got is None:
            got = self._reach[v] = {w for w, _ in self.moves(v)}
        return got

    def cover_mask(self, a: Point, b: Point) -> int:
        s = Segment(a, b)
        return self._mask(t for t in self.targets if point_on_segment(t, s))


def _plane_ok(path: list[Point], w: Point) -> bool:
    """Can segment path[-1] -> w be appended without any crossing or touching?"""
    v = path[-1]
    new = Segment(v, w)
    if len(path) >= 2:
        u = path[-2]
        if cross(u, v, w) == 0:
            # collinear joint: must continue straight on
            if point_on_segment(w, Segment(u, v)) or point_on_segment(u, new):
                return False
    for i in range(len(path) - 2):
        old = Segment(path[i], path[i + 1])
        if bbox_overlap(old, new) and segments_intersect(old, new):
            return False
    return True


class _Searcher:
    def __init__(self, arr: Arrangement, end: Optional[Point], plane: bool,
                 progress: bool):
        self.arr = arr
        self.end = end
        self.plane = plane
        self.progress = progress
        self.memo: dict[tuple[Point, int, int], bool] = {}

    def steps(self, v: Point, mask: int):
        arr, end = self.arr, self.end
        for w, bits in arr.moves(v):
            new = mask | bits
            if self.progress and new == mask:
                continue
            if end is not None and w == end and new != arr.full:
                continue
            yield w, new
        if end is not None and v != end and end not in arr.reachable(v):
            new = mask | arr.cover_mask(v, end)
            if new == arr.full:
                yield end, new

    def done(self, v: Point, mask: int) -> bool:
        if mask != self.arr.full:
            return False
        return self.end is None or v == self.end

    def relaxed(self, v: Point, mask: int, rem: int) -> bool:
        if self.done(v, mask):
            return True
        if rem == 0:
            return False
        if _popcount(self.arr.full & ~mask) > rem * self.arr.max_on_line:
            return False
        key = (v, mask, rem)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        ok = any(self.relaxed(w, new, rem - 1) for w, new in self.steps(v, mask))
        self.memo[key] = ok
        return ok

    def plane_dfs(self, path: list[Point], mask: int, rem: int) -> Optional[list[Point]]:
        v = path[-1]
        if self.done(v, mask):
            return list(path)
        if rem == 0 or not self.relaxed(v, mask, rem):
            return None
        for w, new in self.steps(v, mask):
            if not self.relaxed(w, new, rem - 1):
                continue
            if not _plane_ok(path, w):
                continue
            path.append(w)
            found = self.plane_dfs(path, new, rem - 1)
            path.pop()
            if found is not None:
                return found
        return None

    def relaxed_witness(self, v: Point, mask: int, rem: int) -> list[Point]:
        out = [v]
        while not self.done(v, mask):
            for w, new in self.steps(v, mask):
                if self.relaxed(w, new, rem - 1):
                    v, mask, rem = w, new, rem - 1
                    out.append(v)
                    break
        return out

    def search(self, start: Point, mask: int, budget: int) -> Optional[list[Point]]:
        if self.plane:
            return self.plane_dfs([start], mask, budget)
        if self.relaxed(start, mask, budget):
            return self.relaxed_witness(start, mask, budget)
        return None


def window_arrangement(p: WindowProblem) -> Arrangement:
    lo, hi = p.slab
    return Arrangement(p.targets, (p.anchor,), (lo, hi),
                       keep=lambda q: lo < q.x <= hi)


def solve_window(p: WindowProblem, progress_only: bool = False) -> Optional[list[Point]]:
    """A plane path anchor -> ... -> rightmost target with at most ``budget``
    segments covering every target and staying in the slab, or None if the
    candidate family holds none.

    The search first tries paths whose every segment covers a new target;
    unless ``progress_only`` it then retries allowing pure connectors.
    """
    if p.budget > MAX_BUDGET:
        raise BudgetTooLarge(f"budget {p.budget} > {MAX_BUDGET}")
    if p.budget < 1:
        return None
    arr = window_arrangement(p)
    end = p.targets[-1]
    for progress in ((True,) if progress_only else (True, False)):
        found = _Searcher(arr, end, plane=True, progress=progress).search(p.anchor, 0, p.budget)
        if found is not None:
            return found
    return None
