"""planecover command line: gen, solve, verify, render, oracle, bench.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 internal error (including a strict-mode unsolvable degenerate window).
"""
from __future__ import annotations

import argparse
import json
import logging
import statistics
import sys
from typing import Optional, Sequence

from . import io as pio
from .errors import EmptyInput, PlaneCoverError, TooLarge
from .generators import GenSpec, Kind, generate
from .oracle import OracleMode, min_link_path
from .planner import DegeneracyMode, SolveOptions, solve
from .preprocess import PointSet
from .render import RenderSpec, to_svg
from .verifier import CrossingMode, check_invariant_trace, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: Optional[str]) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _write(path: Optional[str], data: "str | bytes") -> None:
    if path in (None, "-"):
        if isinstance(data, bytes):
            sys.stdout.buffer.write(data)
        else:
            sys.stdout.write(data)
        sys.stdout.flush()
        return
    mode = "wb" if isinstance(data, bytes) else "w"
    with open(path, mode, **({} if isinstance(data, bytes) else {"encoding": "utf-8"})) as fh:
        fh.write(data)


def _load_points(text: str) -> PointSet:
    if text.lstrip().startswith("{"):
        doc = pio.path_from_json(text)
        if "points" not in doc:
            raise UsageError("path JSON carries no 'points'; pass a point file")
        pts = doc["points"]
    else:
        pts = pio.parse_points(text)
    if not pts:
        raise UsageError("no points in input")
    return PointSet.from_iterable(pts)


def cmd_gen(a) -> int:
    spec = GenSpec(Kind.parse(a.kind), a.n, a.seed, a.scale)
    ps = generate(spec)
    _write(a.output, pio.format_points(ps.points, [spec.header()]))
    return EXIT_OK


def cmd_solve(a) -> int:
    ps = _load_points(_read(a.input))
    mode = DegeneracyMode.STRICT if a.strict else DegeneracyMode.PERMISSIVE
    sol = solve(ps, SolveOptions(degeneracy_mode=mode, record_trace=a.trace))
    for w in sol.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if a.format == "text":
        lines = [f"# segments {sol.segment_count}"]
        lines += [f"# warning {w}" for w in sol.warnings]
        lines += [f"{pio.rational(v.x)} {pio.rational(v.y)}" for v in sol.path.vertices]
        _write(a.output, "\n".join(lines) + "\n")
    else:
        doc = pio.path_to_json(sol.path.vertices, sol.warnings, ps.points,
                               sol.traces if a.trace else None)
        _write(a.output, doc + "\n")
    return EXIT_OK


def cmd_verify(a) -> int:
    doc = pio.path_from_json(_read(a.path))
    if a.points is not None:
        ps = _load_points(_read(a.points))
    elif "points" in doc:
        ps = PointSet.from_iterable(doc["points"])
    else:
        raise UsageError("no points: pass --points or a path JSON with a 'points' field")
    if not ps.points:
        raise UsageError("no points in input")
    mode = CrossingMode.STANDARD if a.standard else CrossingMode.STRICT
    rep = verify(ps, doc["vertices"], mode)
    if "trace" in doc:
        rep.invariant_ok = check_invariant_trace(doc["trace"], ps).ok
    _write(a.output, json.dumps(rep.as_dict()) + "\n")
    ok = rep.passed and rep.invariant_ok is not False
    return EXIT_OK if ok else EXIT_FAIL


def cmd_render(a) -> int:
    text = _read(a.input)
    traces = None
    if text.lstrip().startswith("{"):
        doc = pio.path_from_json(text)
        pts = doc.get("points") or doc["vertices"]
        verts = doc["vertices"]
        traces = doc.get("trace")
    else:
        pts = pio.parse_points(text)
        verts = []
    spec = RenderSpec(a.width, a.height, show_aux=not a.no_aux, label_roles=a.labels)
    _write(a.output, to_svg(pts, verts, traces, spec))
    return EXIT_OK


def cmd_oracle(a) -> int:
    ps = _load_points(_read(a.input))
    try:
        res = min_link_path(ps, OracleMode(a.mode))
    except TooLarge as exc:
        raise UsageError(str(exc)) from None
    _write(a.output, json.dumps(res.as_dict()) + "\n")
    return EXIT_OK


def cmd_bench(a) -> int:
    try:
        sizes = [int(s) for s in a.sizes.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"bad --sizes {a.sizes!r}") from None
    if not sizes or min(sizes) < 1 or a.reps < 1:
        raise UsageError("sizes and repetitions must be positive")
    kind = Kind.parse(a.kind)
    rows = []
    print(f"{'n':>9} {'sort_s':>8} {'scan_s':>8} {'total_s':>8} {'seg/n':>7}")
    for n in sizes:
        ps = generate(GenSpec(kind, n, a.seed, a.scale))
        runs = []
        for _ in range(a.reps):
            sol = solve(ps, SolveOptions(record_trace=False))
            t = sol.timings
            runs.append((t["prepare"], t["scan"] + t["output"], t["total"]))
        sort_s, scan_s, total_s = (statistics.median(r[i] for r in runs) for i in range(3))
        ratio = sol.segment_count / n
        rows.append({"n": n, "sort_s": sort_s, "scan_s": scan_s, "total_s": total_s,
                     "segments_per_n": ratio, "warnings": len(sol.warnings)})
        print(f"{n:>9} {sort_s:>8.3f} {scan_s:>8.3f} {total_s:>8.3f} {ratio:>7.4f}", flush=True)
    if a.json:
        _write(a.json, json.dumps(rows, indent=1) + "\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="planecover", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a point file")
    g.add_argument("--kind", default="UniformSquare",
                   help="UniformSquare, Grid, ConvexPosition, Clustered or CollinearHeavy")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--scale", type=int, default=10**6, help="coordinate denominator")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="point file -> covering path JSON")
    s.add_argument("input", nargs="?")
    s.add_argument("--strict", action="store_true",
                   help="fail (exit 3) instead of falling back on an unsolvable degenerate window")
    s.add_argument("--trace", action="store_true", help="include per-iteration traces")
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a path JSON against its points")
    v.add_argument("path", nargs="?")
    v.add_argument("--points", help="point file (default: the JSON's own 'points')")
    v.add_argument("--standard", action="store_true",
                   help="only proper crossings fail; touchings are reported")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="path JSON or point file -> SVG")
    r.add_argument("input", nargs="?")
    r.add_argument("-o", "--output")
    r.add_argument("--width", type=int, default=800)
    r.add_argument("--height", type=int, default=800)
    r.add_argument("--no-aux", action="store_true")
    r.add_argument("--labels", action="store_true")
    r.set_defaults(func=cmd_render)

    o = sub.add_parser("oracle", help="minimum-link covering path for n <= 9")
    o.add_argument("input", nargs="?")
    o.add_argument("--mode", choices=("crossing", "plane"), default="crossing")
    o.add_argument("-o", "--output")
    o.set_defaults(func=cmd_oracle)

    b = sub.add_parser("bench", help="timing table over sizes")
    b.add_argument("--sizes", default="10000,100000,1000000")
    b.add_argument("--reps", type=int, default=1)
    b.add_argument("--kind", default="UniformSquare")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--scale", type=int, default=10**6)
    b.add_argument("--json", help="also write the table as JSON here")
    b.set_defaults(func=cmd_bench)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return a.func(a)
    except (UsageError, EmptyInput, pio.FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PlaneCoverError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
