"""Tabulate how often each construction case fires on generated corpora."""
import argparse
import collections
import random

from planecover.generators import GenSpec, Kind, generate
from planecover.planner import CASE_IDS, solve


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=300, help="instances per kind")
    ap.add_argument("--max-n", type=int, default=200)
    ap.add_argument("--seed", type=int, default=1)
    a = ap.parse_args()
    rng = random.Random(a.seed)
    table = {k: collections.Counter() for k in Kind}
    for kind in Kind:
        for _ in range(a.instances):
            spec = GenSpec(kind, rng.randint(1, a.max_n), rng.randrange(2**32))
            table[kind].update(t.case_id for t in solve(generate(spec)).traces)
    kinds = list(Kind)
    print(f"{'case':<14}" + "".join(f"{k.value:>16}" for k in kinds) + f"{'total':>10}")
    for cid in CASE_IDS:
        row = [table[k][cid] for k in kinds]
        print(f"{cid:<14}" + "".join(f"{v:>16}" for v in row) + f"{sum(row):>10}")
    missing = [c for c in CASE_IDS if not any(table[k][c] for k in kinds)]
    print("unreached:", ", ".join(missing) if missing else "none")


if __name__ == "__main__":
    main()
