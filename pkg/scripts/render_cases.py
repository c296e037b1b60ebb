"""Write one SVG per construction case, built from the frozen test fixtures."""
import argparse
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from fixtures import CASE_WINDOWS  # noqa: E402
from planecover.geometry import Point  # noqa: E402
from planecover.planner import solve  # noqa: E402
from planecover.render import RenderSpec, to_svg  # noqa: E402


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="case_svgs")
    a = ap.parse_args()
    out = Path(a.out)
    out.mkdir(parents=True, exist_ok=True)
    spec = RenderSpec(width=480, height=480, label_roles=True)
    for cid, raw in sorted(CASE_WINDOWS.items()):
        pts = [Point(x, Fraction(y)) for x, y in raw]
        sol = solve(pts)
        name = cid.replace("′", "p").replace("″", "pp")
        (out / f"{name}.svg").write_bytes(to_svg(pts, sol.path, sol.traces[:1], spec))
        print(f"{cid:<12} {sol.segment_count} segments -> {out / name}.svg")


if __name__ == "__main__":
    main()
