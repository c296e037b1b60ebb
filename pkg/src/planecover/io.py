"""Text interchange: point files and path JSON.

Point file: UTF-8, one ``x y`` pair per line, each coordinate a decimal
literal or ``num/den``; ``#`` starts a comment and blank lines are skipped.
Path JSON carries every rational as a ``"num/den"`` string so nothing is lost.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from .geometry import Point, as_scalar


class FormatError(ValueError):
    pass


def parse_points(text: str) -> list[Point]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two coordinates, got {len(parts)}")
        try:
            out.append(Point(as_scalar(parts[0]), as_scalar(parts[1])))
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    return out


def rational(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def format_points(points: Iterable[Point], header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines.extend(f"{rational(p.x)} {rational(p.y)}" for p in points)
    return "\n".join(lines) + "\n"


def _encode_point(p: Point) -> dict[str, str]:
    return {"x": rational(p.x), "y": rational(p.y)}


def _decode_point(d: Any) -> Point:
    try:
        return Point(Fraction(str(d["x"])), Fraction(str(d["y"])))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad point {d!r}: {exc}") from None


def trace_to_dict(t: Any) -> dict[str, Any]:
    return {
        "case_id": t.case_id,
        "anchor": _encode_point(t.anchor),
        "appended_vertices": [_encode_point(p) for p in t.appended_vertices],
        "consumed": t.consumed,
        "budget": t.budget,
        "aux_points": {k: _encode_point(p) for k, p in t.aux_points.items()},
        "roles": {k: _encode_point(p) for k, p in t.roles.items()},
        "reflection_flags": list(t.reflection_flags),
        "fallback": t.fallback,
    }


def trace_from_dict(d: dict[str, Any]):
    from .planner import IterationTrace
    return IterationTrace(
        d["case_id"], _decode_point(d["anchor"]),
        tuple(_decode_point(p) for p in d["appended_vertices"]),
        int(d["consumed"]), int(d["budget"]),
        {k: _decode_point(p) for k, p in d.get("aux_points", {}).items()},
        {k: _decode_point(p) for k, p in d.get("roles", {}).items()},
        tuple(d.get("reflection_flags", (False, False))),
        bool(d.get("fallback", False)))


def path_to_json(vertices: Sequence[Point], warnings: Sequence[str] = (),
                 points: Optional[Sequence[Point]] = None,
                 traces: Optional[Sequence[Any]] = None) -> str:
    doc: dict[str, Any] = {
        "vertices": [_encode_point(v) for v in vertices],
        "segments": max(0, len(vertices) - 1),
        "warnings": list(warnings),
    }
    if points is not None:
        doc["points"] = [_encode_point(p) for p in points]
    if traces is not None:
        doc["trace"] = [trace_to_dict(t) for t in traces]
    return json.dumps(doc, ensure_ascii=False)


def path_from_json(text: str) -> dict[str, Any]:
    """Decode a path document: ``vertices`` (and ``points`` / ``trace`` when
    present) come back as Points / IterationTraces."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise FormatError("path JSON needs a 'vertices' list")
    out = dict(doc)
    out["vertices"] = [_decode_point(v) for v in doc["vertices"]]
    if "points" in doc:
        out["points"] = [_decode_point(v) for v in doc["points"]]
    if "trace" in doc:
        out["trace"] = [trace_from_dict(t) for t in doc["trace"]]
    return out
