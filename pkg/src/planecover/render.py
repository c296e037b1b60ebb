"""SVG pictures of point sets, covering paths and per-iteration constructions.

Exact rationals are projected to decimals (12 significant digits) for display
only; nothing here feeds back into geometry.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence
from xml.sax.saxutils import escape

from .geometry import Point

_DIGITS = 12


@dataclass(frozen=True)
class RenderSpec:
    width: int = 800
    height: int = 800
    show_aux: bool = True
    label_roles: bool = False
    margin: int = 24
    point_radius: float = 3.0


def _dec(v: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = _DIGITS
        d = Decimal(v.numerator) / Decimal(v.denominator)
    s = format(d.normalize(), "f")
    return "0" if s in ("-0", "") else s


class _View:
    """Maps world coordinates to pixels, y pointing up."""

    def __init__(self, pts: Sequence[Point], spec: RenderSpec):
        xs = [p.x for p in pts] or [Fraction(0)]
        ys = [p.y for p in pts] or [Fraction(0)]
        self.x0, self.y1 = min(xs), max(ys)
        w = max(xs) - self.x0
        h = self.y1 - min(ys)
        span = max(w, h) or Fraction(1)
        inner = min(spec.width, spec.height) - 2 * spec.margin
        self.k = Fraction(max(inner, 1)) / span
        self.m = spec.margin

    def x(self, v: Fraction) -> str:
        return _dec(self.m + (v - self.x0) * self.k)

    def y(self, v: Fraction) -> str:
        return _dec(self.m + (self.y1 - v) * self.k)


def to_svg(points: Iterable[Point], path: Any = None, traces: Optional[Sequence[Any]] = None,
           spec: RenderSpec = RenderSpec()) -> bytes:
    pts = list(getattr(points, "points", points))
    verts = list(getattr(path, "vertices", path or ()))
    traces = list(traces or ())
    extent = pts + verts
    if spec.show_aux:
        for t in traces:
            extent.extend(t.aux_points.values())
    view = _View(extent, spec)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect width="{spec.width}" height="{spec.height}" fill="white"/>',
    ]
    r = _dec(Fraction(spec.point_radius))
    if spec.show_aux and traces:
        top, bottom = _dec(Fraction(0)), _dec(Fraction(spec.height))
        out.append('<g class="slabs" stroke="#999" stroke-dasharray="4 3" stroke-width="0.8">')
        xs = sorted({t.anchor.x for t in traces} | {t.appended_vertices[-1].x for t in traces if t.appended_vertices})
        for x in xs:
            px = view.x(x)
            out.append(f'<line x1="{px}" y1="{top}" x2="{px}" y2="{bottom}"/>')
        out.append("</g>")
    if len(verts) >= 2:
        coords = " ".join(f"{view.x(v.x)},{view.y(v.y)}" for v in verts)
        out.append(f'<polyline class="path" points="{coords}" fill="none" '
                   f'stroke="#1f5fbf" stroke-width="1.5" stroke-linejoin="round"/>')
    out.append('<g class="points" fill="black">')
    for p in pts:
        out.append(f'<circle cx="{view.x(p.x)}" cy="{view.y(p.y)}" r="{r}"/>')
    out.append("</g>")
    if spec.show_aux and traces:
        out.append('<g class="aux" fill="none" stroke="#c03030" stroke-width="1">')
        for t in traces:
            for name, p in sorted(t.aux_points.items()):
                out.append(f'<circle cx="{view.x(p.x)}" cy="{view.y(p.y)}" r="{r}">'
                           f'<title>{escape(name)}</title></circle>')
        out.append("</g>")
    if spec.label_roles and traces:
        out.append('<g class="labels" font-family="sans-serif" font-size="10" fill="#333">')
        for t in traces:
            for name, p in sorted(t.roles.items()):
                out.append(f'<text x="{view.x(p.x)}" y="{view.y(p.y)}" dx="4" dy="-4">'
                           f'{escape(name)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
