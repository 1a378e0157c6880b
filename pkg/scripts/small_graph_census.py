"""Exact AVD total chromatic numbers of every labeled graph on at most 5 vertices.

Usage:
    python3 scripts/small_graph_census.py [--max-n N] [--cycles MAX_LEN]

For each n, tabulates (minimum colors) - (maximum degree) over all labeled
graphs, separately for 3-degenerate graphs and the rest, and reports how
many graphs with two adjacent maximum-degree vertices there are. Then prints
the exact values for cycles C3..C<MAX_LEN>, together with a witness for each.
"""

from __future__ import annotations

import argparse
from collections import Counter

from avdtc import io
from avdtc.generators import GenSpec, generate
from avdtc.graph import degeneracy
from avdtc.oracle import enumerate_small_graphs, exact_min_avd


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--cycles", type=int, default=9)
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        gaps: dict[bool, Counter] = {True: Counter(), False: Counter()}
        adjacent_max = 0
        for g in enumerate_small_graphs(n):
            d = g.max_degree
            res = exact_min_avd(g, min(d + 4, 12))
            gap = res.min_colors - d if res.min_colors is not None else None
            gaps[degeneracy(g)[0] <= 3][gap] += 1
            adjacent_max += any(g.degree(a) == g.degree(b) == d for a, b in g.edges)
        for label, key in (("3-degenerate", True), ("other", False)):
            if gaps[key]:
                dist = " ".join(f"+{k}:{v}" for k, v in sorted(gaps[key].items()))
                print(f"n={n} {label:<13} {dist}")
        print(f"n={n} with adjacent maximum-degree vertices: {adjacent_max}")

    print()
    for length in range(3, args.cycles + 1):
        g = generate(GenSpec("cycle", length))
        res = exact_min_avd(g, 6)
        print(f"C{length}: min_colors={res.min_colors} nodes={res.nodes_explored}")
        print("  " + io.format_coloring(res.witness).strip().replace("\n", "; "))


if __name__ == "__main__":
    main()
