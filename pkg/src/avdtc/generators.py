"""Seeded graph families and random supports."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadSpec
from .graph import Graph, Support, build_graph

KINDS = (
    "random3d",
    "random-subcubic",
    "path",
    "cycle",
    "star",
    "complete",
    "petersen",
    "wheel",
    "small-pivot-gadget",
)


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int = 0
    seed: int = 0
    back_degree: int = 3
    max_degree: int = 0  # random3d only; 0 means uncapped


def instance_seed(master: int, index: int) -> int:
    """64-bit seed for the ``index``-th instance under a master seed."""
    return random.Random(master * 1_000_003 + index).getrandbits(64)


def _random3d(n: int, rng: random.Random, back_degree: int, cap: int = 0) -> list[tuple[int, int]]:
    edges = []
    deg = [0] * n
    for i in range(1, n):
        k = min(i, rng.randint(0, back_degree))
        pool = range(i) if not cap else [j for j in range(i) if deg[j] < cap]
        for j in rng.sample(pool, min(k, len(pool))):
            edges.append((j, i))
            deg[j] += 1
            deg[i] += 1
    return edges


def _random_subcubic(n: int, rng: random.Random) -> list[tuple[int, int]]:
    deg = [0] * n
    present = set()
    target = rng.randint(0, (3 * n) // 2)
    attempts = 0
    while len(present) < target and attempts < 20 * target + 20:
        attempts += 1
        u, v = rng.randrange(n), rng.randrange(n)
        e = (min(u, v), max(u, v))
        if u == v or e in present or deg[u] == 3 or deg[v] == 3:
            continue
        present.add(e)
        deg[u] += 1
        deg[v] += 1
    return sorted(present)


def _small_pivot_gadget(n: int, rng: random.Random) -> list[tuple[int, int]]:
    # core on m vertices: K4 plus vertices joined to 3 earlier core vertices, so
    # every core vertex has >= 3 core neighbours; one pendant per core vertex
    m = n // 2
    edges = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    for i in range(4, m):
        edges.extend((j, i) for j in rng.sample(range(i), 3))
    edges.extend((i, m + i) for i in range(m))
    return edges


def generate(spec: GenSpec) -> Graph:
    kind, n = spec.kind, spec.n
    if kind not in KINDS:
        raise BadSpec(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if n < 0:
        raise BadSpec("n must be non-negative")
    rng = random.Random(spec.seed)
    if kind == "random3d":
        if not 0 <= spec.back_degree <= 3:
            raise BadSpec("back_degree must lie in 0..3")
        if spec.max_degree and spec.max_degree < spec.back_degree:
            raise BadSpec("max_degree cap below back_degree")
        return build_graph(n, _random3d(n, rng, spec.back_degree, spec.max_degree))
    if kind == "random-subcubic":
        return build_graph(n, _random_subcubic(n, rng))
    if kind == "path":
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise BadSpec("cycle needs n >= 3")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "star":
        if n < 1:
            raise BadSpec("star needs n >= 1")
        return build_graph(n, [(0, i) for i in range(1, n)])
    if kind == "complete":
        return build_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])
    if kind == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return build_graph(10, outer + spokes + inner)
    if kind == "wheel":
        if n < 4:
            raise BadSpec("wheel needs n >= 4")
        rim = n - 1
        return build_graph(n, [(0, i) for i in range(1, n)] + [(i, i % rim + 1) for i in range(1, n)])
    if n < 8 or n % 2:
        raise BadSpec("small-pivot-gadget needs an even n >= 8")
    return build_graph(n, _small_pivot_gadget(n, rng))


def random_support(g: Graph, seed: int, max_pairs: int) -> Support:
    """Greedy seeded matching on nonadjacent degree-2 vertices."""
    rng = random.Random(seed)
    cands = [u for u in range(g.n) if g.degree(u) == 2]
    rng.shuffle(cands)
    used: set[int] = set()
    pairs = []
    for i, a in enumerate(cands):
        if len(pairs) >= max_pairs:
            break
        if a in used:
            continue
        for b in cands[i + 1:]:
            if b not in used and not g.has_edge(a, b):
                pairs.append((a, b))
                used.update((a, b))
                break
    return Support.of(pairs)


FAMILIES = ("random3d", "capped", "small-pivot-gadget")


def corpus_graph(
    master: int, index: int, nmin: int = 7, nmax: int = 300, family: str = "random3d", min_delta: int = 5
) -> tuple[Graph, Support, int]:
    """Seeded 3-degenerate instance with maximum degree >= ``min_delta``, plus a support.

    ``family`` is ``random3d`` (uncapped), ``capped`` (random3d with degrees
    capped at ``min_delta``, so most pivots have maximum degree) or
    ``small-pivot-gadget``. Seeds are re-drawn until the degree bound holds;
    the returned seed is the accepted one.
    """
    if family not in FAMILIES:
        raise BadSpec(f"unknown family {family!r}")
    seed = instance_seed(master, index)
    rng = random.Random(seed)
    n = rng.randint(nmin, nmax)
    if family == "random3d":
        spec = GenSpec("random3d", n)
    elif family == "capped":
        spec = GenSpec("random3d", n, max_degree=min_delta)
    else:
        spec = GenSpec("small-pivot-gadget", max(10, n + n % 2))
    for _ in range(10_000):
        g = generate(GenSpec(spec.kind, spec.n, seed, spec.back_degree, spec.max_degree))
        if g.max_degree >= min_delta:
            break
        seed = rng.getrandbits(64)
    else:
        raise BadSpec(f"no graph with maximum degree >= {min_delta} for n={n}")
    sup = random_support(g, seed, max_pairs=max(1, g.n // 4))
    return g, sup, seed
