"""Wall-clock time of the full pipeline against graph size.

Usage:
    python3 scripts/scaling.py [--sizes 100,1000,10000,100000] [--reps R] [--seed S]

Each size is run on ``reps`` seeded random 3-degenerate graphs with a random
support; every output is verified, and the median time per instance, the
number of colors used and the repair-step count are printed.
"""

from __future__ import annotations

import argparse
import statistics
import time

from avdtc.coloring import is_avd_total, satisfies_support
from avdtc.generators import GenSpec, generate, instance_seed, random_support
from avdtc.solver import solve


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="100,1000,10000,100000")
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'n':>8} {'m':>9} {'delta':>6} {'colors':>7} {'repairs':>8} {'median_s':>9} {'ok':>3}")
    for n in (int(s) for s in args.sizes.split(",")):
        times, ok = [], True
        for rep in range(args.reps):
            seed = instance_seed(args.seed, n * 1000 + rep)
            g = generate(GenSpec("random3d", n, seed))
            sup = random_support(g, seed, n // 4)
            trace: list = []
            t = time.perf_counter()
            col = solve(g, sup, force_k5=g.max_degree < 5, trace=trace)
            times.append(time.perf_counter() - t)
            ok &= is_avd_total(g, col) and satisfies_support(g, sup, col)
            repairs = sum(r["phase"] == "repair" for r in trace)
        print(f"{n:>8} {g.m:>9} {g.max_degree:>6} {col.max_color():>7} {repairs:>8} "
              f"{statistics.median(times):>9.3f} {'yes' if ok else 'NO':>3}")


if __name__ == "__main__":
    main()
