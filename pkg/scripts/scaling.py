"""Time solve (shear + sort + scan) over doubling sizes and report the ratios."""
import argparse
import statistics
import time

from planecover.generators import GenSpec, generate
from planecover.planner import SolveOptions, solve


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--start", type=int, default=125_000)
    ap.add_argument("--steps", type=int, default=5)
    ap.add_argument("--reps", type=int, default=1)
    ap.add_argument("--kind", default="UniformSquare")
    a = ap.parse_args()
    prev = None
    print(f"{'n':>9} {'prepare':>8} {'scan':>8} {'output':>8} {'total':>8} {'ratio':>6} {'seg/n':>7}")
    for step in range(a.steps):
        n = a.start << step
        ps = generate(GenSpec(a.kind, n, 0))
        runs = []
        for _ in range(a.reps):
            t0 = time.perf_counter()
            sol = solve(ps, SolveOptions(record_trace=False))
            runs.append((time.perf_counter() - t0, sol.timings))
        wall = statistics.median(r[0] for r in runs)
        t = runs[0][1]
        ratio = f"{wall / prev:6.2f}" if prev else f"{'':>6}"
        print(f"{n:>9} {t['prepare']:>8.2f} {t['scan']:>8.2f} {t['output']:>8.2f} "
              f"{wall:>8.2f} {ratio} {sol.segment_count / n:>7.4f}", flush=True)
        prev = wall


if __name__ == "__main__":
    main()
