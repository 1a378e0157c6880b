"""Which construction steps fire, and how often, on the seeded stress corpus.

Usage:
    python3 scripts/branch_coverage.py [--iters N] [--seed S] [--nmin A] [--nmax B] [--jobs J]

Prints one row per graph family with the number of re-insertion steps of each
kind, followed by the overall totals. Resolution sub-paths (which color the
single-edge step settled on, whether the three-candidate step had to recolor
the pivot) are listed separately because some of them are rare.
"""

from __future__ import annotations

import argparse
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor

from avdtc.cli import _stress_one
from avdtc.generators import FAMILIES

MAIN = ("subcubic", "small-pivot", "caseA-eq", "caseA-neq", "caseB", "claim1", "claim2", "star", "repair")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--iters", type=int, default=300)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--nmin", type=int, default=7)
    ap.add_argument("--nmax", type=int, default=300)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    jobs = [(args.seed, i, args.nmin, args.nmax, FAMILIES[i % len(FAMILIES)]) for i in range(args.iters)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_stress_one, jobs, chunksize=4))
    else:
        results = [_stress_one(j) for j in jobs]

    per_family: dict[str, Counter] = defaultdict(Counter)
    failed = 0
    for r in results:
        per_family[r["family"]].update(r["branches"])
        failed += not r["ok"]
    total = sum(per_family.values(), Counter())

    width = max(len(b) for b in MAIN)
    print(f"{'family':<20}" + "".join(f"{b:>{width + 1}}" for b in MAIN))
    for fam in FAMILIES:
        print(f"{fam:<20}" + "".join(f"{per_family[fam][b]:>{width + 1}}" for b in MAIN))
    print(f"{'total':<20}" + "".join(f"{total[b]:>{width + 1}}" for b in MAIN))
    print()
    print("resolutions:")
    for key in sorted(k for k in total if "/" in k):
        print(f"  {key:<28} {total[key]}")
    never = [b for b in MAIN if not total[b]]
    print(f"\ninstances={len(results)} failed={failed} never_fired={never or 'none'}")


if __name__ == "__main__":
    main()
