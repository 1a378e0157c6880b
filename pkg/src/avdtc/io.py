"""Text formats: DIMACS-like graphs, support files and coloring files.

All formats are line based and 1-indexed on disk; ``c`` lines are comments.
"""

from __future__ import annotations

from pathlib import Path

from .coloring import PartialColoring
from .errors import GraphError, ParseError
from .graph import Graph, Support, build_graph


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def _ints(lineno: int, fields: list[str], count: int, what: str) -> list[int]:
    if len(fields) != count:
        raise ParseError(lineno, f"expected {count} fields for {what}, got {len(fields)}")
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(lineno, f"non-integer field in {what}") from None


def parse_graph(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, f in _lines(text):
        if f[0] == "p":
            if n is not None:
                raise ParseError(lineno, "second problem line")
            if len(f) != 4 or f[1] != "edge":
                raise ParseError(lineno, "expected 'p edge <n> <m>'")
            n, m = _ints(lineno, f[2:], 2, "problem line")
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative count")
        elif f[0] == "e":
            if n is None:
                raise ParseError(lineno, "edge before problem line")
            u, v = _ints(lineno, f[1:], 2, "edge")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(lineno, f"vertex outside 1..{n}")
            if u == v:
                raise ParseError(lineno, f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(lineno, f"duplicate edge {u} {v}")
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(lineno, f"unknown line type {f[0]!r}")
    if n is None:
        raise ParseError(0, "missing problem line")
    if len(edges) != m:
        raise ParseError(0, f"header announces {m} edges, found {len(edges)}")
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(0, str(exc)) from None


def format_graph(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}"]
    out += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def parse_support(text: str) -> Support:
    pairs = []
    for lineno, f in _lines(text):
        if f[0] != "s":
            raise ParseError(lineno, f"unknown line type {f[0]!r}")
        u, v = _ints(lineno, f[1:], 2, "support pair")
        if u < 1 or v < 1:
            raise ParseError(lineno, "vertices are 1-indexed")
        pairs.append((u - 1, v - 1))
    return Support.of(pairs)


def format_support(s: Support) -> str:
    return "".join(f"s {a + 1} {b + 1}\n" for a, b in s.pairs)


def parse_coloring(text: str) -> PartialColoring:
    col = None
    for lineno, f in _lines(text):
        tag = f[0]
        if tag == "k":
            if col is not None:
                raise ParseError(lineno, "second universe line")
            (k,) = _ints(lineno, f[1:], 1, "universe line")
            if k < 1:
                raise ParseError(lineno, "universe size must be positive")
            col = PartialColoring(k)
            continue
        if col is None:
            raise ParseError(lineno, "coloring line before 'k <universe_size>'")
        if tag == "v":
            u, c = _ints(lineno, f[1:], 2, "vertex color")
            if u < 1:
                raise ParseError(lineno, "vertices are 1-indexed")
            if u - 1 in col.vertex_colors:
                raise ParseError(lineno, f"vertex {u} colored twice")
            _check_color(lineno, c, col.universe_size)
            col.set_vertex(u - 1, c)
        elif tag == "E":
            u, v, c = _ints(lineno, f[1:], 3, "edge color")
            if u < 1 or v < 1 or u == v:
                raise ParseError(lineno, "bad edge endpoints")
            if col.edge(u - 1, v - 1) is not None:
                raise ParseError(lineno, f"edge {u} {v} colored twice")
            _check_color(lineno, c, col.universe_size)
            col.set_edge(u - 1, v - 1, c)
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if col is None:
        raise ParseError(0, "missing 'k <universe_size>' line")
    return col


def _check_color(lineno: int, c: int, k: int) -> None:
    if c == 0:
        raise ParseError(lineno, "color 0 is reserved")
    if not 1 <= c <= k:
        raise ParseError(lineno, f"color {c} outside 1..{k}")


def format_coloring(col: PartialColoring) -> str:
    out = [f"k {col.universe_size}"]
    out += [f"v {u + 1} {c}" for u, c in sorted(col.vertex_colors.items())]
    out += [f"E {u + 1} {v + 1} {c}" for (u, v), c in sorted(col.edge_colors.items())]
    return "\n".join(out) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def read_support(path: str | Path) -> Support:
    return parse_support(Path(path).read_text())


def read_coloring(path: str | Path) -> PartialColoring:
    return parse_coloring(Path(path).read_text())
