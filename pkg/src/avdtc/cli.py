"""Command line entry point.

Exit codes: 0 success / valid, 1 invalid coloring or failed property,
2 bad input or unmet precondition, 3 internal invariant broken.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import io
from .coloring import avd_total_violations, satisfies_support
from .errors import AvdError, InternalInvariantBroken
from .generators import FAMILIES, KINDS, GenSpec, corpus_graph, generate, random_support
from .graph import Support, degeneracy, validate_support
from .oracle import MAX_LIMIT, check_coloring, exact_min_avd
from .solver import solve

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)


def _dump_trace(trace: list) -> None:
    for rec in trace:
        sys.stderr.write(json.dumps(rec, sort_keys=True) + "\n")


def _tracing(args) -> bool:
    return bool(getattr(args, "trace", False)) or os.environ.get("AVDTC_TRACE") == "1"


def cmd_color(args) -> int:
    g = io.read_graph(args.input)
    sup = io.read_support(args.support) if args.support else Support()
    trace: list | None = [] if _tracing(args) else None
    try:
        col = solve(g, sup, force_k5=args.force_k5, trace=trace)
    finally:
        if trace:
            _dump_trace(trace)
    _emit(io.format_coloring(col), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = io.read_graph(args.input)
    col = io.read_coloring(args.coloring)
    sup = io.read_support(args.support) if args.support else Support()
    validate_support(g, sup)
    problems = [str(v) for v in avd_total_violations(g, col)]
    independent = check_coloring(g, col)
    if independent != (not problems):
        sys.stderr.write(f"verifier disagreement: predicate={not problems} oracle={independent}\n")
        return EXIT_INTERNAL
    if not problems and not satisfies_support(g, sup, col):
        problems.append("SupportClash")
    if args.max_colors is not None and col.max_color() > args.max_colors:
        problems.append(f"MaxColorExceeded({col.max_color()} > {args.max_colors})")
    if problems:
        print("invalid")
        for p in problems:
            print(f"  {p}")
        return EXIT_INVALID
    print(f"valid colors={col.max_color()} delta={g.max_degree}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = io.read_graph(args.input)
    res = exact_min_avd(g, args.limit)
    if res.min_colors is None:
        print(f"min_colors exceeds {args.limit}")
    else:
        print(f"min_colors {res.min_colors}")
    print(f"nodes_explored {res.nodes_explored}")
    if res.witness is not None and args.output:
        _emit(io.format_coloring(res.witness), args.output)
    return EXIT_OK


def cmd_gen(args) -> int:
    g = generate(GenSpec(args.kind, args.n, args.seed, args.back_degree, args.max_degree))
    _emit(io.format_graph(g), args.output)
    if args.support_out:
        sup = random_support(g, args.seed, args.max_pairs)
        Path(args.support_out).write_text(io.format_support(sup), encoding="ascii")
    return EXIT_OK


def cmd_degeneracy(args) -> int:
    g = io.read_graph(args.input)
    d, order = degeneracy(g)
    print(f"degeneracy {d}")
    print("order " + " ".join(str(u + 1) for u in order))
    return EXIT_OK


def _stress_one(job: tuple[int, int, int, int, str]) -> dict:
    master, index, nmin, nmax, family = job
    g, sup, seed = corpus_graph(master, index, nmin, nmax, family=family)
    trace: list = []
    out = {"index": index, "family": family, "seed": seed, "n": g.n, "m": g.m,
           "delta": g.max_degree, "pairs": len(sup)}
    try:
        col = solve(g, sup, trace=trace)
    except AvdError as exc:
        out.update(ok=False, error=f"{type(exc).__name__}: {exc}", branches={})
    else:
        ok = (check_coloring(g, col) and not avd_total_violations(g, col)
              and satisfies_support(g, sup, col) and col.max_color() <= g.max_degree + 3)
        out.update(ok=ok, colors=col.max_color(), error=None if ok else "verification failed")
    branches = Counter()
    for rec in trace:
        if rec["phase"] == "extend":
            branches[rec["branch"]] += 1
            for key in ("selection", "resolution"):
                if rec.get(key):
                    branches[f"{rec['branch']}/{rec[key]}" if key == "resolution" else rec[key]] += 1
            if rec.get("star"):
                branches["star"] += 1
        else:
            branches["repair"] += 1
    out["branches"] = dict(sorted(branches.items()))
    if not out["ok"]:
        out["graph"], out["support"] = io.format_graph(g), io.format_support(sup)
    return out


def cmd_stress(args) -> int:
    families = FAMILIES if args.family == "mixed" else (args.family,)
    jobs = [(args.seed, i, args.nmin, args.nmax, families[i % len(families)]) for i in range(args.iters)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_stress_one, jobs, chunksize=4))
    else:
        results = [_stress_one(j) for j in jobs]
    tally: Counter = Counter()
    failed = 0
    for r in results:
        tally.update(r["branches"])
        status = "ok" if r["ok"] else "FAIL"
        print(f"{r['index']} {status} family={r['family']} seed={r['seed']} n={r['n']} m={r['m']} "
              f"delta={r['delta']} pairs={r['pairs']} colors={r.get('colors', '-')}")
        if not r["ok"]:
            failed += 1
            fdir = Path(args.failures)
            fdir.mkdir(parents=True, exist_ok=True)
            stem = fdir / f"{args.seed}-{r['index']}"
            Path(f"{stem}.col").write_text(r["graph"], encoding="ascii")
            Path(f"{stem}.sup").write_text(r["support"], encoding="ascii")
            Path(f"{stem}.txt").write_text(f"seed {r['seed']}\n{r['error']}\n", encoding="ascii")
    print(f"tally instances={len(results)} passed={len(results) - failed} failed={failed}")
    print("branches " + " ".join(f"{k}={v}" for k, v in sorted(tally.items())))
    return EXIT_INVALID if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="avdtc", description="AVD total coloring of 3-degenerate graphs")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("color", help="color a graph with at most Delta+3 colors")
    c.add_argument("-i", "--input", required=True)
    c.add_argument("-s", "--support")
    c.add_argument("-o", "--output")
    c.add_argument("--force-k5", action="store_true", help="allow Delta <= 4 with an 8-color palette")
    c.add_argument("--trace", action="store_true", help="JSON-lines step log on stderr")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring file")
    v.add_argument("-i", "--input", required=True)
    v.add_argument("-c", "--coloring", required=True)
    v.add_argument("-s", "--support")
    v.add_argument("--max-colors", type=int)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exact minimum number of colors (small graphs)")
    o.add_argument("-i", "--input", required=True)
    o.add_argument("--limit", type=int, default=MAX_LIMIT)
    o.add_argument("-o", "--output", help="write the witness coloring here")
    o.set_defaults(func=cmd_oracle)

    gn = sub.add_parser("gen", help="generate a graph")
    gn.add_argument("--kind", required=True, choices=KINDS)
    gn.add_argument("-n", type=int, default=0)
    gn.add_argument("--seed", type=int, default=0)
    gn.add_argument("--back-degree", type=int, default=3)
    gn.add_argument("--max-degree", type=int, default=0)
    gn.add_argument("-o", "--output")
    gn.add_argument("--support-out")
    gn.add_argument("--max-pairs", type=int, default=1 << 30)
    gn.set_defaults(func=cmd_gen)

    d = sub.add_parser("degeneracy", help="degeneracy and peeling order")
    d.add_argument("-i", "--input", required=True)
    d.set_defaults(func=cmd_degeneracy)

    s = sub.add_parser("stress", help="generate, solve and verify in a loop")
    s.add_argument("--iters", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--nmin", type=int, default=7)
    s.add_argument("--nmax", type=int, default=300)
    s.add_argument("--family", default="mixed", choices=("mixed",) + FAMILIES)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--failures", default="failures")
    s.set_defaults(func=cmd_stress)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalInvariantBroken as exc:
        sys.stderr.write(f"internal invariant broken: {exc}\n")
        _dump_trace(exc.trace)
        return EXIT_INTERNAL
    except (AvdError, OSError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
