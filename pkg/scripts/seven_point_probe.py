"""Probe the seven-point branch: can six points be finished in the slab?

Collects windows whose construction is the r''-branch (case id C3b-d by
default), then asks the exact window search for a path that starts at l',
ends at r', covers l..r' and stays between l' and r' using five segments.
Reports how often such a path exists and prints the first few witnesses.
"""
import argparse
import random

from planecover.errors import PlaneCoverError
from planecover.geometry import Point
from planecover.planner import Window, construct_window_path
from planecover.verifier import verify
from planecover.window_solver import WindowProblem, solve_window


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--case", default="C3b-d", choices=("C3b-d", "C3b-e", "C3b-f"))
    ap.add_argument("--windows", type=int, default=200, help="windows of the case to probe")
    ap.add_argument("--span", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--show", type=int, default=3)
    a = ap.parse_args()
    rng = random.Random(a.seed)
    probed = found = tries = 0
    while probed < a.windows:
        tries += 1
        ys = [rng.randint(-a.span, a.span) for _ in range(8)]
        pts = [Point(x, y) for x, y in zip(range(8), ys)]
        try:
            _, trace, _ = construct_window_path(Window(pts[0], tuple(pts[1:])))
        except PlaneCoverError:
            continue
        if trace.case_id != a.case:
            continue
        probed += 1
        prob = WindowProblem(pts[0], tuple(pts[1:7]), 5)
        path = solve_window(prob, progress_only=True) or solve_window(prob)
        if path is None:
            continue
        assert verify(pts[:7], path).passed
        found += 1
        if found <= a.show:
            print("window:", [(int(p.x), int(p.y)) for p in pts[:7]])
            print("  five-segment path:", [(str(v.x), str(v.y)) for v in path])
    print(f"{a.case}: {probed} windows ({tries} random draws), "
          f"{found} admit a 5-segment in-slab path ending at r', {probed - found} do not "
          f"(within the pair-line candidate family)")


if __name__ == "__main__":
    main()
