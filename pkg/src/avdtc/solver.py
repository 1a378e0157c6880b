"""AVD total coloring of 3-degenerate graphs with at most Delta + 3 colors.

The construction peels edges at pivots (high-degree vertices with at most
three high-degree neighbours) until the remaining graph is subcubic, colors the
edges of that subcubic core, and then re-inserts the peeled edges in reverse
order while keeping the coloring a *partial* AVD total coloring: every edge and
every degree > 3 vertex colored, proper wherever colored, and palettes
distinct across edges whose endpoints both have degree > 3. A final repair pass
colors the remaining vertices and removes palette clashes between low-degree
neighbours without touching any edge color.

Every free choice is resolved to the smallest vertex id or smallest color.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, islice
from typing import Iterable, Iterator, Sequence

from .coloring import (
    PartialColoring,
    is_partial_avd,
    palette_of,
    partial_avd_violations,
    satisfies_support,
    support_violations,
    universe,
)
from .errors import (
    DeltaExceedsK,
    DeltaTooSmall,
    InternalInvariantBroken,
    NotThreeDegenerate,
    PreconditionViolated,
)
from .graph import LOW, Edge, Graph, PivotQueue, Support, build_graph, degeneracy, edge_key, validate_support

TRACE_VERSION = 1

Adjacency = Sequence[Iterable[int]]


@dataclass
class SolverConfig:
    k: int
    trace: bool = False
    check: bool = False

    def __post_init__(self) -> None:
        if self.k < 5:
            raise PreconditionViolated(f"k must be >= 5, got {self.k}")


@dataclass(frozen=True)
class ExtensionCandidate:
    """Colors for the two removed pivot edges.

    ``eq_class`` is the color set placed on them (candidates with equal sets are
    equivalent); ``y_class`` is what the pivot's co-palette becomes.
    """

    edges: tuple[Edge, Edge]
    colors: tuple[int, int]
    eq_class: frozenset[int]
    y_class: frozenset[int]

    @classmethod
    def make(cls, edges: tuple[Edge, Edge], colors: tuple[int, int], X: frozenset[int]) -> ExtensionCandidate:
        eq = frozenset(colors)
        return cls(edges, colors, eq, X - eq)


@dataclass
class PivotStep:
    """One re-insertion step, as written to the trace."""

    branch: str
    u: int | None = None
    removed: list[Edge] = field(default_factory=list)
    v_primed: list[int] = field(default_factory=list)
    X: list[int] | None = None
    Y: list[int] | None = None
    X1: list[int] | None = None
    X2: list[int] | None = None
    # how the support of the smaller graph differs from the current one
    support_dropped: list[Edge] = field(default_factory=list)
    support_added: list[Edge] = field(default_factory=list)
    star: bool = False
    selection: str | None = None
    resolution: str | None = None
    edges: int | None = None

    def to_record(self) -> dict:
        rec = {"v": TRACE_VERSION, "phase": "extend", "branch": self.branch}
        for name in ("u", "removed", "v_primed", "X", "Y", "X1", "X2", "support_dropped", "support_added",
                     "star", "selection", "resolution", "edges"):
            val = getattr(self, name)
            if val is None or val == [] or val is False:
                continue
            if isinstance(val, list):
                val = [list(x) if isinstance(x, tuple) else x for x in val]
            rec[name] = val
        return rec


def zeta(a: Iterable[int], b: Iterable[int]) -> set[frozenset[int]]:
    """All two-element sets taking one element from ``a`` and one from ``b``."""
    b = list(b)
    return {frozenset((x, y)) for x in a for y in b if x != y}


# helpers over a plain adjacency structure (tuples for Graph, sets while peeling)


def _ecolors(adj: Adjacency, col: PartialColoring, x: int) -> set[int]:
    ec = col.edge_colors
    return {ec[edge_key(x, y)] for y in adj[x]}


def _palette(adj: Adjacency, col: PartialColoring, x: int) -> frozenset[int]:
    p = _ecolors(adj, col, x)
    c = col.vertex_colors.get(x)
    if c is not None:
        p.add(c)
    return frozenset(p)


def _smallest(U: frozenset[int], forbidden: Iterable[int], what: str) -> int:
    free = U.difference(forbidden)
    if not free:
        raise InternalInvariantBroken(f"no free color for {what}")
    return min(free)


def _high_neighbors(adj: Adjacency, u: int) -> list[int]:
    return sorted(x for x in adj[u] if len(adj[x]) > LOW)


def _drop_pairs(partner: dict[int, int], vertices: Iterable[int]) -> list[Edge]:
    dropped = []
    for x in vertices:
        p = partner.pop(x, None)
        if p is not None:
            del partner[p]
            dropped.append(edge_key(x, p))
    return dropped


def _restore_pairs(partner: dict[int, int], pairs: Iterable[Edge]) -> None:
    for a, b in pairs:
        partner[a] = b
        partner[b] = a


def _primed(adj: Adjacency, partner: dict[int, int], v: int) -> int:
    if len(adj[v]) == 2 and v in partner:
        return partner[v]
    return v


# --- subcubic core ---------------------------------------------------------


def _subcubic_core(adj: list[set[int]], partner: dict[int, int], col: PartialColoring) -> int:
    """Edge-color a subcubic work graph in place; returns the number of edges."""
    U = universe(col.universe_size)
    edges = sorted((u, w) for u in range(len(adj)) for w in adj[u] if u < w)
    stack = []
    for v1, v2 in reversed(edges):
        w1, w2 = _primed(adj, partner, v1), _primed(adj, partner, v2)
        dropped = _drop_pairs(partner, (v1, v2))
        adj[v1].discard(v2)
        adj[v2].discard(v1)
        stack.append((v1, v2, w1, w2, dropped))
    for v1, v2, w1, w2, dropped in reversed(stack):
        forbidden: set[int] = set()
        for x in {v1, v2, w1, w2}:
            forbidden |= _ecolors(adj, col, x)
        c = _smallest(U, forbidden, f"edge {(v1, v2)}")
        adj[v1].add(v2)
        adj[v2].add(v1)
        col.set_edge(v1, v2, c)
        _restore_pairs(partner, dropped)
    return len(edges)


def color_subcubic(g: Graph, sup: Support, c_size: int) -> PartialColoring:
    """Color every edge of a graph with maximum degree <= 3, no vertices.

    The result is a partial AVD total coloring over ``1..c_size`` satisfying
    ``sup``.
    """
    if g.max_degree > LOW:
        raise PreconditionViolated(f"maximum degree {g.max_degree} > {LOW}")
    if c_size < 7:
        raise PreconditionViolated(f"need at least 7 colors, got {c_size}")
    validate_support(g, sup)
    col = PartialColoring(c_size)
    _subcubic_core([set(a) for a in g.adj], sup.partners(), col)
    return col


# --- pivot with a single low neighbour -------------------------------------


def _small_pivot_core(adj: Adjacency, col: PartialColoring, u: int, v: int, vp: int, step: PivotStep) -> None:
    """Extend ``col`` from G - uv (the current ``adj``) to G by coloring uv."""
    U = universe(col.universe_size)
    high = _high_neighbors(adj, u)
    if len(adj[u]) != 3 or len(high) != 3:
        raise InternalInvariantBroken(f"small pivot {u}: expected 3 high neighbours in G - uv, got {high}")

    # everything colored in the inner coloring apart from u is of degree > 3
    col.uncolor_vertex(u)
    forbidden = _ecolors(adj, col, u) | {col.vertex_colors[x] for x in high}
    col.set_vertex(u, _smallest(U, forbidden, f"pivot {u}"))

    ev = _ecolors(adj, col, v)
    if vp == v:
        Y = ev
    else:
        ew = _ecolors(adj, col, vp)
        Y = ew if ev <= ew else ev
    X = U - _palette(adj, col, u)
    step.X, step.Y = sorted(X), sorted(Y)
    if len(Y) > 2 or len(X) < 4:
        raise InternalInvariantBroken(f"small pivot {u}: |X|={len(X)}, |Y|={len(Y)}")
    c1, c2 = sorted(X - Y)[:2]

    pal_u = _palette(adj, col, u)
    pal_x = {x: _palette(adj, col, x) for x in high}
    witnesses = []
    for label, ci in (("c1", c1), ("c2", c2)):
        clash = [x for x in high if pal_x[x] == pal_u | {ci}]
        if not clash:
            col.set_edge(u, v, ci)
            step.resolution = label
            return
        witnesses.append(clash[0])
    x1, x2 = witnesses
    if x1 == x2:
        raise InternalInvariantBroken(f"small pivot {u}: both extensions clash with {x1}")

    common = (U - pal_x[x1]) & (U - pal_x[x2])
    if common != X - {c1, c2}:
        raise InternalInvariantBroken(f"small pivot {u}: co-palette intersection mismatch")
    c3, c4 = sorted(common)[:2]
    (x3,) = [x for x in high if x not in (x1, x2)]
    col.set_edge(u, v, c1)
    free = [c for c in (c3, c4) if c not in pal_x[x3]]
    if free:
        col.set_vertex(u, free[0])
        step.resolution = "recolor-free"
    else:
        col.set_vertex(u, c3 if c3 != col.vertex_colors[x3] else c4)
        step.resolution = "recolor-x3"


def extend_small_pivot(
    g: Graph, sup: Support, u: int, v: int, inner: PartialColoring, c_size: int
) -> PartialColoring:
    """Put back edge ``uv`` at a degree-4 pivot whose only low neighbour is ``v``.

    ``inner`` must be a partial AVD total coloring of ``g - uv`` satisfying
    ``sup`` minus the pair holding ``v``.
    """
    if c_size < 8 or inner.universe_size != c_size:
        raise PreconditionViolated("need a universe of at least 8 colors matching inner")
    if not g.has_edge(u, v) or g.degree(u) != 4:
        raise PreconditionViolated(f"vertex {u} must have degree 4 and neighbour {v}")
    low = [x for x in g.adj[u] if g.degree(x) <= LOW]
    if low != [v]:
        raise PreconditionViolated(f"low neighbours of {u} are {low}, expected [{v}]")
    validate_support(g, sup)
    partner = sup.partners()
    vp = partner[v] if g.degree(v) == 2 and v in partner else v
    inner_g = g.remove_edges([(u, v)])
    inner_sup = Support.of(p for p in sup.pairs if v not in p)
    if not is_partial_avd(inner_g, inner) or not satisfies_support(inner_g, inner_sup, inner):
        raise PreconditionViolated("inner coloring is not a partial AVD total coloring of G - uv")
    out = inner.copy()
    for x in [x for x in out.vertex_colors if inner_g.degree(x) <= LOW]:
        out.uncolor_vertex(x)
    _small_pivot_core(inner_g.adj, out, u, v, vp, PivotStep("small-pivot", u=u))
    return out


# --- pivot with two low neighbours -----------------------------------------


def _first_distinguished(cands: Sequence[ExtensionCandidate], copalettes: Iterable[frozenset[int]]):
    taken = set(copalettes)
    for cand in cands:
        if cand.y_class not in taken:
            return cand
    return None


def _high_copalettes(g: Graph, inner: PartialColoring, u: int) -> list[frozenset[int]]:
    U = universe(inner.universe_size)
    return [U - palette_of(g, inner, x) for x in g.adj[u] if g.degree(x) > LOW]


def select_claim1(
    g: Graph, u: int, candidates: Sequence[ExtensionCandidate], inner: PartialColoring
) -> ExtensionCandidate | None:
    """First candidate whose resulting co-palette at ``u`` matches no high neighbour's.

    Only answers when there are at least four candidates; with three or fewer
    it returns None by contract.
    """
    if len(candidates) < 4:
        return None
    return _first_distinguished(candidates, _high_copalettes(g, inner, u))


def _claim2_color(X: frozenset[int], failing: Sequence[ExtensionCandidate]) -> int:
    if len(failing) != 3 or len({c.eq_class for c in failing}) != 3:
        raise PreconditionViolated("claim-2 repair needs three pairwise non-equivalent candidates")
    used = frozenset().union(*(c.eq_class for c in failing))
    if len(used) >= len(X):
        raise PreconditionViolated(f"candidates cover {len(used)} colors, need fewer than |X|={len(X)}")
    return min(X - used)


def claim2_repair(
    g: Graph, u: int, failing: Sequence[ExtensionCandidate], X: frozenset[int], inner: PartialColoring
) -> PartialColoring:
    """Use the first candidate's edge colors and recolor ``u`` with a color of
    ``X`` that none of the three candidates placed on the pivot edges."""
    c = _claim2_color(X, failing)
    copalettes = _high_copalettes(g, inner, u)
    if _first_distinguished(failing, copalettes) is not None:
        raise PreconditionViolated("a candidate is already AVD; nothing to repair")
    out = inner.copy()
    for (a, b), color in zip(failing[0].edges, failing[0].colors):
        out.set_edge(a, b, color)
    out.set_vertex(u, c)
    return out


@dataclass
class _PairRecord:
    u: int
    v1: int
    v2: int
    w1: int
    w2: int
    case_a: bool
    dropped: list[Edge]
    added: Edge | None


def _pair_pivot_core(adj: Adjacency, col: PartialColoring, rec: _PairRecord, step: PivotStep) -> None:
    """Extend ``col`` from G - {uv1, uv2} (the current ``adj``) to G."""
    U = universe(col.universe_size)
    u, v1, v2, w1, w2 = rec.u, rec.v1, rec.v2, rec.w1, rec.w2
    high = _high_neighbors(adj, u)
    if len(high) > LOW:
        raise InternalInvariantBroken(f"pivot {u} has {len(high)} high neighbours")

    if len(adj[u]) <= LOW:
        col.uncolor_vertex(u)
        forbidden = _ecolors(adj, col, u) | {col.vertex_colors[x] for x in high}
        col.set_vertex(u, _smallest(U, forbidden, f"pivot {u}"))
    X = U - _palette(adj, col, u)
    if len(X) < 4:
        raise InternalInvariantBroken(f"pivot {u}: |X|={len(X)} < 4")

    if len(X) == 4 and len(adj[w1]) == 2 and len(adj[w2]) == 2 and w2 in adj[w1]:
        if col.edge(w1, w2) in X:
            forbidden = X | _ecolors(adj, col, w1) | _ecolors(adj, col, w2)
            col.set_edge(w1, w2, _smallest(U, forbidden, f"edge {(w1, w2)}"))
            step.star = True
    step.X = sorted(X)

    edges = (edge_key(u, v1), edge_key(u, v2))
    if rec.case_a:
        if len(adj[v1]) != 1 or len(adj[v2]) != 1:
            raise InternalInvariantBroken(f"support pair {(v1, v2)} not pendant in G'")
        (c1,) = _ecolors(adj, col, v1)
        (c2,) = _ecolors(adj, col, v2)
        if c1 == c2:
            step.branch = "caseA-eq"
            pairs = combinations(sorted(X - {c1}), 2)
        else:
            step.branch = "caseA-neq"
            A1, A2 = X - {c1}, X - {c2}
            pairs = _realize_neq(A1, A2, c1, c2)
    else:
        step.branch = "caseB"
        X1 = _restricted(adj, col, X, v1, w1)
        X2 = _restricted(adj, col, X, v2, w2)
        step.X1, step.X2 = sorted(X1), sorted(X2)
        if len(X1) < 2 or len(X2) < 2 or len(X1 | X2) < 3:
            raise InternalInvariantBroken(f"pivot {u}: |X1|={len(X1)}, |X2|={len(X2)}, |X1 u X2|={len(X1 | X2)}")
        pairs = ((lo, hi) if lo in X1 and hi in X2 else (hi, lo) for lo, hi in _zeta_ordered(X1, X2))

    # at most three candidates can clash (one per high neighbour), so the
    # selection below never looks past the first four
    cands = [ExtensionCandidate.make(edges, ab, X) for ab in islice(pairs, 4)]
    copalettes = [U - _palette(adj, col, x) for x in high]
    chosen = _first_distinguished(cands, copalettes)
    if len(cands) >= 4:
        step.selection = "claim1"
        if chosen is None:
            raise InternalInvariantBroken(f"pivot {u}: no distinguished candidate among {len(cands)}")
    elif len(cands) == 3:
        step.selection = "claim2"
        if chosen is None:
            chosen = cands[0]
            col.set_vertex(u, _claim2_color(X, cands))
            step.resolution = "recolor"
        else:
            step.resolution = "direct"
    else:
        raise InternalInvariantBroken(f"pivot {u}: only {len(cands)} non-equivalent extensions")
    for (a, b), c in zip(chosen.edges, chosen.colors):
        col.set_edge(a, b, c)


def _zeta_ordered(a: frozenset[int], b: frozenset[int]) -> Iterator[tuple[int, int]]:
    """The classes of ``zeta(a, b)`` as ``(lo, hi)`` pairs in lexicographic order, lazily."""
    both = sorted(a | b)
    for i, lo in enumerate(both):
        for hi in both[i + 1:]:
            if (lo in a and hi in b) or (lo in b and hi in a):
                yield lo, hi


def _realize_neq(A1: frozenset[int], A2: frozenset[int], c1: int, c2: int) -> Iterator[tuple[int, int]]:
    """One orientation per class of ``zeta(A1, A2)``, never ``(c2, c1)``.

    That orientation would give both support vertices the edge colors
    {c1, c2}; the class {c1, c2} has no other orientation and is skipped.
    """
    for lo, hi in _zeta_ordered(A1, A2):
        for a, b in ((lo, hi), (hi, lo)):
            if a in A1 and b in A2 and (a, b) != (c2, c1):
                yield a, b
                break


def _restricted(adj: Adjacency, col: PartialColoring, X: frozenset[int], v: int, w: int) -> frozenset[int]:
    ev = _ecolors(adj, col, v)
    if v != w:
        ew = _ecolors(adj, col, w)
        if ev <= ew:
            return X - ew
    return X - ev


# --- main pipeline ---------------------------------------------------------


def _check_level(adj: list[set[int]], partner: dict[int, int], col: PartialColoring, where: str, trace) -> None:
    g = build_graph(len(adj), [(u, w) for u in range(len(adj)) for w in adj[u] if u < w])
    sup = Support.of((a, b) for a, b in partner.items() if a < b)
    bad = partial_avd_violations(g, col) + support_violations(g, sup, col)
    if bad:
        raise InternalInvariantBroken(f"{where}: {', '.join(map(str, bad[:5]))}", trace)


def color_main(
    g: Graph, sup: Support, k: int, trace: list | None = None, check: bool = False
) -> PartialColoring:
    """Partial AVD total coloring of a 3-degenerate graph over colors ``1..k+3``.

    ``trace``, when given, receives one record per re-insertion step.
    ``check`` re-verifies the partial coloring of every intermediate graph.
    """
    SolverConfig(k)
    validate_support(g, sup)
    if g.max_degree > k:
        raise DeltaExceedsK(f"maximum degree {g.max_degree} exceeds k={k}")
    if degeneracy(g)[0] > LOW:
        raise NotThreeDegenerate("graph is not 3-degenerate")

    adj = [set(a) for a in g.adj]
    partner = sup.partners()
    pivots = PivotQueue(adj)
    records: list = []
    while True:
        u = pivots.pop()
        if u is None:
            break
        low = sorted(x for x in adj[u] if len(adj[x]) <= LOW)
        if len(low) == 1:
            v = low[0]
            vp = _primed(adj, partner, v)
            dropped = _drop_pairs(partner, (v,))
            adj[u].discard(v)
            adj[v].discard(u)
            pivots.edge_removed(u, v)
            records.append((u, v, vp, dropped))
        else:
            v1, v2 = low[0], low[1]
            w1, w2 = _primed(adj, partner, v1), _primed(adj, partner, v2)
            case_a = partner.get(v1) == v2
            dropped = _drop_pairs(partner, (v1, v2))
            for v in (v1, v2):
                adj[u].discard(v)
                adj[v].discard(u)
                pivots.edge_removed(u, v)
            added = None
            if len(adj[w1]) == 2 and len(adj[w2]) == 2 and w2 not in adj[w1]:
                added = edge_key(w1, w2)
                _restore_pairs(partner, [added])
            records.append(_PairRecord(u, v1, v2, w1, w2, case_a, dropped, added))

    col = PartialColoring(k + 3)
    m_base = _subcubic_core(adj, partner, col)
    if trace is not None:
        trace.append(PivotStep("subcubic", edges=m_base).to_record())
    if check:
        _check_level(adj, partner, col, "subcubic core", trace)

    for rec in reversed(records):
        if isinstance(rec, _PairRecord):
            step = PivotStep(
                "pair", u=rec.u, removed=[edge_key(rec.u, rec.v1), edge_key(rec.u, rec.v2)],
                v_primed=[rec.w1, rec.w2], support_dropped=list(rec.dropped),
                support_added=[rec.added] if rec.added else [],
            )
            _pair_pivot_core(adj, col, rec, step)
            for v in (rec.v1, rec.v2):
                adj[rec.u].add(v)
                adj[v].add(rec.u)
            if rec.added is not None:
                _drop_pairs(partner, rec.added[:1])
            _restore_pairs(partner, rec.dropped)
        else:
            u, v, vp, dropped = rec
            step = PivotStep(
                "small-pivot", u=u, removed=[edge_key(u, v)], v_primed=[vp],
                support_dropped=list(dropped),
            )
            _small_pivot_core(adj, col, u, v, vp, step)
            adj[u].add(v)
            adj[v].add(u)
            _restore_pairs(partner, dropped)
        if trace is not None:
            trace.append(step.to_record())
        if check:
            _check_level(adj, partner, col, f"after {step.branch} at {step.u}", trace)
    return col


def complete_and_repair(
    g: Graph, sup: Support, col: PartialColoring, trace: list | None = None
) -> PartialColoring:
    """Turn a partial AVD total coloring into a full one by recoloring vertices only."""
    if col.universe_size < 7:
        raise PreconditionViolated(f"need at least 7 colors, got {col.universe_size}")
    bad = partial_avd_violations(g, col) + support_violations(g, sup, col)
    if bad:
        raise PreconditionViolated(f"not a partial AVD total coloring satisfying the support: {bad[:5]}")
    U = universe(col.universe_size)
    out = col.copy()
    vc = out.vertex_colors

    for u in range(g.n):
        if u not in vc:
            forbidden = _ecolors(g.adj, out, u) | {vc[w] for w in g.adj[u] if w in vc}
            out.set_vertex(u, _smallest(U, forbidden, f"vertex {u}"))

    pal = [_palette(g.adj, out, u) for u in range(g.n)]
    violating = {(a, b) for a, b in g.edges if pal[a] == pal[b]}
    while violating:
        before = len(violating)
        a, b = min(violating)
        u, X = a, pal[a]
        bad_colors: set[int] = set()
        for w in g.adj[u]:
            bad_colors.add(vc[w])
            rest = pal[w] - X
            if len(rest) == 1:
                bad_colors |= rest
        c = _smallest(U, X | bad_colors, f"repair of vertex {u}")
        old = vc[u]
        vc[u] = c
        pal[u] = _palette(g.adj, out, u)
        for w in g.adj[u]:
            e = edge_key(u, w)
            if pal[u] == pal[w]:
                violating.add(e)
            else:
                violating.discard(e)
        if len(violating) >= before:
            raise InternalInvariantBroken(f"repair at {u} did not reduce violating edges", trace)
        if trace is not None:
            trace.append({
                "v": TRACE_VERSION, "phase": "repair", "edge": [a, b], "u": u, "from": old, "color": c,
                "violating_before": before, "violating_after": len(violating),
            })
    return out


def solve(
    g: Graph,
    sup: Support | None = None,
    force_k5: bool = False,
    trace: list | None = None,
    check: bool = False,
) -> PartialColoring:
    """AVD total coloring over ``1..Delta+3`` satisfying ``sup``.

    Graphs with maximum degree below 5 are refused unless ``force_k5`` is set,
    in which case the palette is ``1..8`` regardless of the degree.
    """
    sup = sup if sup is not None else Support()
    validate_support(g, sup)
    if degeneracy(g)[0] > LOW:
        raise NotThreeDegenerate("graph is not 3-degenerate")
    delta = g.max_degree
    if delta < 5:
        if not force_k5:
            raise DeltaTooSmall(f"maximum degree {delta} < 5; use force_k5 for an 8-color coloring")
        k = 5
    else:
        k = delta
    col = color_main(g, sup, k, trace=trace, check=check)
    return complete_and_repair(g, sup, col, trace=trace)
