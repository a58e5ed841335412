"""Command-line entry point: ``l21span {span,oracle,verify,gen,bench}``.

Exit codes: 0 ok, 1 verification failed, 2 input error, 3 timeout or
exhausted budget.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time

from . import graph as graphs
from .io import FORMATS, ParseError, format_labeling, parse_graph, parse_labeling, serialize_graph
from .labeling import Instance, first_violation, span_of
from .oracle import BudgetExceeded, OracleBudget, oracle_span
from .solver import SolverOptions, SolverTimeout, solve_span

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_TIMEOUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(args) -> graphs.Graph:
    if getattr(args, "family", None):
        try:
            return graphs.generate(args.family, args.n, args.p, args.seed)
        except graphs.GraphError as exc:
            raise InputError(str(exc)) from None
    try:
        return parse_graph(_read(args.input), args.format)
    except ParseError as exc:
        raise InputError(f"{args.input}: {exc}") from None


def _stats_summary(stats) -> dict:
    return {"nodes": stats.nodes, "max_depth": stats.max_depth, "partitions": stats.partitions}


def run_span(args) -> int:
    g = load_graph(args)
    opts = SolverOptions(prune=args.prune, collect_certificate=args.certificate, timeout=args.timeout)
    try:
        res = solve_span(g, opts)
    except SolverTimeout as exc:
        print(f"timeout after {args.timeout}s; partial stats: {json.dumps(exc.stats.as_dict())}",
              file=sys.stderr)
        return EXIT_TIMEOUT
    if args.certificate:
        problem = first_violation(Instance(g, g.vertex_mask), res.labeling, res.value + 1)
        if problem is not None:
            # never expected: the composed labeling failed its own check
            print(f"internal error: certificate rejected: {problem}", file=sys.stderr)
            return EXIT_INVALID
    if args.json:
        out = {"lambda": res.value, "n": g.n, "m": g.m, "stats": _stats_summary(res.stats)}
        if args.certificate:
            out["certificate"] = {str(v): label for v, label in sorted(res.labeling.items())}
        print(json.dumps(out))
    else:
        print(f"lambda = {res.value}")
        if args.certificate:
            sys.stdout.write(format_labeling(res.labeling))
    return EXIT_OK


def run_oracle(args) -> int:
    g = load_graph(args)
    try:
        value = oracle_span(g, OracleBudget(node_limit=args.node_limit))
    except BudgetExceeded as exc:
        print(f"unknown: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    if args.json:
        print(json.dumps({"lambda": value, "n": g.n, "m": g.m}))
    else:
        print(f"lambda = {value}")
    return EXIT_OK


def run_verify(args) -> int:
    g = load_graph(args)
    try:
        labels = parse_labeling(_read(args.labeling))
    except ParseError as exc:
        raise InputError(f"{args.labeling}: {exc}") from None
    k = span_of(labels) + 1 if labels else 0
    problem = first_violation(Instance(g, g.vertex_mask), labels, k)
    if problem is not None:
        print(f"invalid: {problem}")
        return EXIT_INVALID
    print(f"valid: span = {k - 1}")
    return EXIT_OK


def run_gen(args) -> int:
    if not args.family:
        raise InputError("gen requires --family")
    sys.stdout.write(serialize_graph(load_graph(args), args.format))
    return EXIT_OK


def bench_corpus(max_n: int = 10, seed: int = 0):
    """(family, n, graph) rows: paths, cycles, stars, cliques and G(n, p)."""
    for n in range(2, max_n + 1):
        yield "path", n, graphs.path_graph(n)
    for n in range(3, max_n + 1):
        yield "cycle", n, graphs.cycle_graph(n)
    for n in range(2, min(max_n, 7) + 1):
        yield "star", n, graphs.star_graph(n)
    for n in range(2, min(max_n, 8) + 1):
        yield "complete", n, graphs.complete_graph(n)
    for i, n in enumerate(range(4, min(max_n, 8) + 1)):
        for p in (0.2, 0.5, 0.8):
            yield f"gnp{p}", n, graphs.gnp_graph(n, p, seed + i)


BENCH_COLUMNS = ["family", "n", "m", "lambda", "oracle_lambda", "nodes", "max_depth",
                 "depth_bound", "partitions", "solver_seconds", "oracle_seconds", "status"]


def run_bench(args) -> int:
    writer = csv.DictWriter(sys.stdout, fieldnames=BENCH_COLUMNS)
    writer.writeheader()
    mismatches = 0
    for family, n, g in bench_corpus(args.max_n, args.seed):
        row = {"family": family, "n": n, "m": g.m,
               "depth_bound": math.ceil(math.log2(n)) + 1, "status": "ok"}
        t0 = time.perf_counter()
        try:
            res = solve_span(g, SolverOptions(prune=args.prune, timeout=args.timeout))
        except SolverTimeout:
            row.update(status="timeout", solver_seconds=f"{time.perf_counter() - t0:.4f}")
            writer.writerow(row)
            continue
        row.update({"lambda": res.value, "nodes": res.stats.nodes, "max_depth": res.stats.max_depth,
                    "partitions": res.stats.partitions,
                    "solver_seconds": f"{time.perf_counter() - t0:.4f}"})
        t0 = time.perf_counter()
        expected = oracle_span(g)
        row.update(oracle_lambda=expected, oracle_seconds=f"{time.perf_counter() - t0:.4f}")
        if expected != res.value:
            row["status"] = "MISMATCH"
            mismatches += 1
        elif res.stats.max_depth > row["depth_bound"]:
            row["status"] = "DEPTH"
            mismatches += 1
        writer.writerow(row)
        sys.stdout.flush()
    return EXIT_INVALID if mismatches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="l21span", description="Exact L(2,1)-span of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_source(p):
        p.add_argument("--input", default="-", help="graph file, '-' for stdin (default)")
        p.add_argument("--format", choices=FORMATS, default="edgelist")
        p.add_argument("--family", choices=graphs.FAMILIES, help="generate the graph instead of reading it")
        p.add_argument("--n", type=int)
        p.add_argument("--p", type=float, default=0.5)
        p.add_argument("--seed", type=int, default=0)

    span = sub.add_parser("span", help="compute lambda with the divide-and-conquer solver")
    graph_source(span)
    span.add_argument("--certificate", action="store_true", help="also print an optimal labeling")
    span.add_argument("--prune", action="store_true", help="branch-and-bound pruning")
    span.add_argument("--json", action="store_true")
    span.add_argument("--timeout", type=float, metavar="SECS")
    span.set_defaults(func=run_span)

    orc = sub.add_parser("oracle", help="compute lambda by brute-force backtracking")
    graph_source(orc)
    orc.add_argument("--json", action="store_true")
    orc.add_argument("--node-limit", type=int)
    orc.set_defaults(func=run_oracle)

    ver = sub.add_parser("verify", help="check a labeling file against a graph")
    graph_source(ver)
    ver.add_argument("--labeling", required=True, help="file of 'vertex label' lines")
    ver.set_defaults(func=run_verify)

    gen = sub.add_parser("gen", help="write a generated graph")
    graph_source(gen)
    gen.set_defaults(func=run_gen)

    bench = sub.add_parser("bench", help="solver vs oracle over a seeded corpus, CSV output")
    bench.add_argument("--max-n", type=int, default=10)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--prune", action="store_true")
    bench.add_argument("--timeout", type=float, metavar="SECS", help="per instance")
    bench.set_defaults(func=run_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
