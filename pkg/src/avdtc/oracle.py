"""Exhaustive ground truth for small graphs.

Nothing here uses the predicates of :mod:`avdtc.coloring`, so the two can be
cross-checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .coloring import PartialColoring
from .errors import TooLarge
from .graph import Graph, build_graph

MAX_ELEMENTS = 40
MAX_LIMIT = 12
MAX_ENUM_N = 5


@dataclass
class OracleResult:
    min_colors: int | None  # None: more than ``limit`` colors needed
    witness: PartialColoring | None
    nodes_explored: int


def check_coloring(g: Graph, col: PartialColoring) -> bool:
    """True iff ``col`` is a complete AVD total coloring of ``g`` within its universe."""
    vc, ec = col.vertex_colors, col.edge_colors
    if set(vc) != set(range(g.n)) or set(ec) != set(g.edges):
        return False
    if any(not 1 <= c <= col.universe_size for c in list(vc.values()) + list(ec.values())):
        return False
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for (a, b), c in ec.items():
        if c == vc[a] or c == vc[b] or vc[a] == vc[b]:
            return False
        incident[a].append(c)
        incident[b].append(c)
    for u in range(g.n):
        if len(set(incident[u])) != len(incident[u]):
            return False
    seen = [frozenset(incident[u] + [vc[u]]) for u in range(g.n)]
    return all(seen[a] != seen[b] for a, b in g.edges)


def exact_min_avd(g: Graph, limit: int) -> OracleResult:
    """Fewest colors admitting an AVD total coloring, by plain backtracking.

    Vertices are assigned first, then edges, each in id order. A new color may
    only be one more than the largest color used so far, which removes the
    color-permutation symmetry.
    """
    if g.n + g.m > MAX_ELEMENTS:
        raise TooLarge(f"{g.n} vertices + {g.m} edges exceeds {MAX_ELEMENTS}")
    if limit > MAX_LIMIT:
        raise TooLarge(f"limit {limit} exceeds {MAX_LIMIT}")
    if g.n == 0:
        return OracleResult(0, PartialColoring(0), 0)

    n, edges = g.n, list(g.edges)
    adj = g.adj
    vcol = [0] * n
    ecol = [0] * len(edges)
    at: list[list[int]] = [[] for _ in range(n)]  # edge indices at each vertex
    for i, (a, b) in enumerate(edges):
        at[a].append(i)
        at[b].append(i)
    # an endpoint's palette is final once its last edge (by index) is colored
    last_edge = [max(at[u]) if at[u] else -1 for u in range(n)]
    closing = [[u for u in e if last_edge[u] == i] for i, e in enumerate(edges)]
    total = n + len(edges)
    nodes = 0

    def pal(u: int) -> frozenset[int]:
        return frozenset([vcol[u]] + [ecol[i] for i in at[u]])

    def done(u: int, upto: int) -> bool:
        # palette of u fully assigned when step ``upto`` is being placed
        return last_edge[u] < upto - n if at[u] else u < upto

    def place(pos: int, used: int, c: int) -> bool:
        nonlocal nodes
        if pos == total:
            return True
        top = min(c, used + 1)
        if pos < n:
            u = pos
            for color in range(1, top + 1):
                nodes += 1
                if any(w < u and vcol[w] == color for w in adj[u]):
                    continue
                vcol[u] = color
                if place(pos + 1, max(used, color), c):
                    return True
            vcol[u] = 0
            return False
        i = pos - n
        a, b = edges[i]
        for color in range(1, top + 1):
            nodes += 1
            if color == vcol[a] or color == vcol[b]:
                continue
            if any(ecol[j] == color for j in at[a] if j < i) or any(ecol[j] == color for j in at[b] if j < i):
                continue
            ecol[i] = color
            ok = True
            for x in closing[i]:
                px = pal(x)
                for w in adj[x]:
                    if done(w, pos + 1) and pal(w) == px:
                        ok = False
                        break
                if not ok:
                    break
            if ok and place(pos + 1, max(used, color), c):
                return True
        ecol[i] = 0
        return False

    for c in range(1, limit + 1):
        if place(0, 0, c):
            wit = PartialColoring(
                c,
                {u: vcol[u] for u in range(n)},
                {e: ecol[i] for i, e in enumerate(edges)},
            )
            return OracleResult(c, wit, nodes)
    return OracleResult(None, None, nodes)


def all_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def enumerate_small_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n <= 5`` vertices, by edge-subset bitmask."""
    if n > MAX_ENUM_N:
        raise TooLarge(f"enumeration limited to n <= {MAX_ENUM_N}")
    pairs = all_pairs(n)
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [p for j, p in enumerate(pairs) if mask >> j & 1])
