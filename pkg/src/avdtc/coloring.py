"""Partial total colorings and the validity predicates over them.

Color sets are plain ``frozenset[int]`` over the universe ``1..universe_size``.
A palette of ``u`` is its own color (when present) plus the colors on its
incident edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import UncoloredEdge
from .graph import LOW, Edge, Graph, Support, edge_key

ColorSet = frozenset


def universe(size: int) -> frozenset[int]:
    return frozenset(range(1, size + 1))


def complement(colors: Iterable[int], size: int) -> frozenset[int]:
    return universe(size).difference(colors)


@dataclass
class PartialColoring:
    universe_size: int
    vertex_colors: dict[int, int] = field(default_factory=dict)
    edge_colors: dict[Edge, int] = field(default_factory=dict)

    def copy(self) -> PartialColoring:
        return PartialColoring(self.universe_size, dict(self.vertex_colors), dict(self.edge_colors))

    def vertex(self, u: int) -> int | None:
        return self.vertex_colors.get(u)

    def edge(self, u: int, v: int) -> int | None:
        return self.edge_colors.get(edge_key(u, v))

    def set_vertex(self, u: int, c: int) -> None:
        self.vertex_colors[u] = c

    def uncolor_vertex(self, u: int) -> None:
        self.vertex_colors.pop(u, None)

    def set_edge(self, u: int, v: int, c: int) -> None:
        self.edge_colors[edge_key(u, v)] = c

    def colors_used(self) -> frozenset[int]:
        return frozenset(self.vertex_colors.values()) | frozenset(self.edge_colors.values())

    def max_color(self) -> int:
        return max(self.colors_used(), default=0)


def edge_colors_at(g: Graph, col: PartialColoring, u: int) -> frozenset[int]:
    out = set()
    for w in g.adj[u]:
        c = col.edge_colors.get(edge_key(u, w))
        if c is None:
            raise UncoloredEdge(f"edge {edge_key(u, w)} is uncolored")
        out.add(c)
    return frozenset(out)


def palette_of(g: Graph, col: PartialColoring, u: int) -> frozenset[int]:
    p = edge_colors_at(g, col, u)
    c = col.vertex_colors.get(u)
    return p | {c} if c is not None else p


def copalette_of(g: Graph, col: PartialColoring, u: int) -> frozenset[int]:
    return complement(palette_of(g, col, u), col.universe_size)


@dataclass(frozen=True)
class Violation:
    kind: str
    witnesses: tuple

    def __str__(self) -> str:
        return f"{self.kind}{self.witnesses}"


def _violations(g: Graph, col: PartialColoring, full: bool) -> list[Violation]:
    out: list[Violation] = []
    k = col.universe_size
    for u, c in col.vertex_colors.items():
        if not 0 <= u < g.n:
            out.append(Violation("UnknownVertex", (u,)))
        elif not 1 <= c <= k:
            out.append(Violation("ColorOutOfRange", (u, c)))
    for e, c in col.edge_colors.items():
        if e not in g.edge_set:
            out.append(Violation("UnknownEdge", e))
        elif not 1 <= c <= k:
            out.append(Violation("ColorOutOfRange", (e, c)))

    for e in g.edges:
        if e not in col.edge_colors:
            out.append(Violation("UncoloredEdge", e))
    for u in range(g.n):
        if u not in col.vertex_colors:
            if full:
                out.append(Violation("UncoloredVertex", (u,)))
            elif g.degree(u) > LOW:
                out.append(Violation("UncoloredHighVertex", (u,)))

    vc, ec = col.vertex_colors, col.edge_colors
    for u in range(g.n):
        seen: dict[int, int] = {}
        cu = vc.get(u)
        for w in g.adj[u]:
            c = ec.get(edge_key(u, w))
            if c is None:
                continue
            if c in seen:
                out.append(Violation("EdgeProperness", (u, seen[c], w, c)))
            seen[c] = w
            if cu is not None and c == cu:
                out.append(Violation("IncidenceProperness", (u, w, c)))

    for u, v in g.edges:
        cu, cv = vc.get(u), vc.get(v)
        if cu is not None and cu == cv:
            out.append(Violation("VertexProperness", (u, v, cu)))
        if full or (g.degree(u) > LOW and g.degree(v) > LOW):
            if _palette_loose(g, col, u) == _palette_loose(g, col, v):
                out.append(Violation("PaletteClash", (u, v)))
    return out


def _palette_loose(g: Graph, col: PartialColoring, u: int) -> frozenset[int]:
    p = {col.edge_colors.get(edge_key(u, w)) for w in g.adj[u]}
    p.add(col.vertex_colors.get(u))
    p.discard(None)
    return frozenset(p)


def partial_avd_violations(g: Graph, col: PartialColoring) -> list[Violation]:
    return _violations(g, col, full=False)


def avd_total_violations(g: Graph, col: PartialColoring) -> list[Violation]:
    return _violations(g, col, full=True)


def is_partial_avd(g: Graph, col: PartialColoring) -> bool:
    """All edges and all degree > 3 vertices colored, proper wherever colored,
    and adjacent degree > 3 vertices have different palettes."""
    return not partial_avd_violations(g, col)


def is_avd_total(g: Graph, col: PartialColoring) -> bool:
    return not avd_total_violations(g, col)


def support_violations(g: Graph, sup: Support, col: PartialColoring) -> list[Violation]:
    out = []
    for a, b in sup.pairs:
        if edge_colors_at(g, col, a) == edge_colors_at(g, col, b):
            out.append(Violation("SupportClash", (a, b)))
    return out


def satisfies_support(g: Graph, sup: Support, col: PartialColoring) -> bool:
    """Each support pair sees different sets of incident edge colors."""
    return not support_violations(g, sup, col)


def violating_edges(g: Graph, col: PartialColoring) -> list[Edge]:
    """Edges whose endpoints have equal palettes, in lexicographic order."""
    return [(u, v) for u, v in g.edges if _palette_loose(g, col, u) == _palette_loose(g, col, v)]
