"""Simple undirected graphs, degeneracy peeling, pivots and supports.

Vertices are dense ids ``0..n-1``. Edges are stored as ``(u, v)`` with
``u < v``. All tie-breaking is by smallest vertex id.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DegreeNotTwo,
    DuplicateEdge,
    NoPivot,
    PairAdjacent,
    PairsOverlap,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int]

# degree threshold separating "low" from "high" vertices
LOW = 3


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_set

    @property
    def edge_set(self) -> frozenset[Edge]:
        # cached on first use; the dataclass is frozen so go through object.__setattr__
        try:
            return self.__dict__["_edge_set"]
        except KeyError:
            s = frozenset(self.edges)
            object.__setattr__(self, "_edge_set", s)
            return s

    def edge_list(self) -> list[Edge]:
        return list(self.edges)

    def remove_edges(self, removed: Iterable[Edge]) -> Graph:
        drop = {edge_key(*e) for e in removed}
        return build_graph(self.n, [e for e in self.edges if e not in drop])


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph on ``n`` vertices, rejecting loops and repeats."""
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    seen: set[Edge] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        e = edge_key(u, v)
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {e}")
        seen.add(e)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(
        n=n,
        edges=tuple(sorted(seen)),
        adj=tuple(tuple(sorted(a)) for a in adj),
    )


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Repeatedly delete a minimum-degree vertex (smallest id on ties).

    Returns the largest residual degree seen at deletion time together with the
    deletion order.
    """
    deg = [len(a) for a in g.adj]
    heap = [(d, u) for u, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order: list[int] = []
    d_max = 0
    while heap:
        d, u = heapq.heappop(heap)
        if removed[u] or d != deg[u]:
            continue
        removed[u] = True
        order.append(u)
        d_max = max(d_max, d)
        for w in g.adj[u]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return d_max, order


@dataclass(frozen=True)
class DegreePartition:
    """Split of V(G) into degree <= 3 and degree > 3 vertices."""

    low: frozenset[int]
    high: frozenset[int]
    high_neighbors: tuple[int, ...]
    low_neighbors: tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, s: int = LOW) -> DegreePartition:
        high = frozenset(u for u in range(g.n) if g.degree(u) > s)
        low = frozenset(range(g.n)) - high
        hn = tuple(sum(1 for w in g.adj[u] if w in high) for u in range(g.n))
        ln = tuple(g.degree(u) - hn[u] for u in range(g.n))
        return cls(low=low, high=high, high_neighbors=hn, low_neighbors=ln)


def pivot_in(adj: Sequence[Iterable[int]], candidates: Iterable[int] | None = None) -> int | None:
    """Pivot search over an arbitrary adjacency structure.

    ``candidates`` may restrict the scan to a superset of the high vertices.
    Returns None when no vertex has degree > 3; raises NoPivot when high
    vertices exist but none has at most 3 high neighbours.
    """
    if candidates is None:
        candidates = range(len(adj))
    high = [u for u in candidates if len(adj[u]) > LOW]
    if not high:
        return None
    best, best_r = -1, None
    for u in sorted(high):
        r = 0
        for w in adj[u]:
            if len(adj[w]) > LOW:
                r += 1
        if best_r is None or r < best_r:
            best, best_r = u, r
    if best_r > LOW:
        raise NoPivot("no 3-pivot of degree > 3; graph is not 3-degenerate")
    return best


class PivotQueue:
    """Incremental ``pivot_in`` for a graph that only loses edges.

    Keeps the number of high neighbours of every high vertex and a lazy heap
    of ``(count, vertex)``; stale entries are skipped on pop. Call
    :meth:`edge_removed` after every edge deletion from ``adj``.
    """

    def __init__(self, adj: Sequence[Sequence[int] | set[int]]):
        self.adj = adj
        self.high = {u for u in range(len(adj)) if len(adj[u]) > LOW}
        self.count = {u: sum(1 for w in adj[u] if w in self.high) for u in self.high}
        self.heap = [(c, u) for u, c in self.count.items()]
        heapq.heapify(self.heap)

    def _bump(self, x: int) -> None:
        self.count[x] -= 1
        heapq.heappush(self.heap, (self.count[x], x))

    def edge_removed(self, a: int, b: int) -> None:
        if a in self.high and b in self.high:
            self._bump(a)
            self._bump(b)
        for x in (a, b):
            if x in self.high and len(self.adj[x]) <= LOW:
                self.high.discard(x)
                del self.count[x]
                for w in self.adj[x]:
                    if w in self.high:
                        self._bump(w)

    def pop(self) -> int | None:
        """Current pivot (left in the queue), None when no vertex is high."""
        heap = self.heap
        while heap:
            c, u = heap[0]
            if u in self.high and self.count[u] == c:
                if c > LOW:
                    raise NoPivot("no 3-pivot of degree > 3; graph is not 3-degenerate")
                return u
            heapq.heappop(heap)
        return None


def find_pivot(g: Graph) -> int:
    """Smallest-id high vertex with the fewest (at most 3) high neighbours."""
    u = pivot_in(g.adj)
    if u is None:
        raise NoPivot(f"maximum degree {g.max_degree} <= {LOW}")
    return u


@dataclass(frozen=True)
class Support:
    """Disjoint pairs of nonadjacent degree-2 vertices."""

    pairs: tuple[Edge, ...] = ()

    @classmethod
    def of(cls, pairs: Iterable[Sequence[int]]) -> Support:
        return cls(tuple(sorted(edge_key(int(p[0]), int(p[1])) for p in pairs)))

    def partners(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for a, b in self.pairs:
            out[a] = b
            out[b] = a
        return out

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def validate_support(g: Graph, s: Support) -> None:
    used: set[int] = set()
    for a, b in s.pairs:
        for x in (a, b):
            if not 0 <= x < g.n:
                raise VertexOutOfRange(f"support vertex {x} outside 0..{g.n - 1}")
        if a == b:
            raise PairsOverlap(f"pair ({a}, {b}) repeats a vertex")
        for x in (a, b):
            if g.degree(x) != 2:
                raise DegreeNotTwo(f"support vertex {x} has degree {g.degree(x)}")
        if g.has_edge(a, b):
            raise PairAdjacent(f"support pair ({a}, {b}) is an edge")
        if a in used or b in used:
            raise PairsOverlap(f"support pair ({a}, {b}) shares a vertex with another pair")
        used.update((a, b))
