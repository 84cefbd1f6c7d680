"""Command-line front end.

Subcommands:

* ``sample``   drive the on-the-fly sampler and print each query and answer.
* ``batch``    sample one whole graph up front and print it.
* ``compare``  empirical law of full sweeps against the exact law (small n).
* ``stats``    summary statistics over many batch samples, plus sampler cost.
* ``bench``    timing and resource figures for the on-the-fly sampler (JSON).

Text output is deterministic for fixed arguments; wall-clock figures appear
only in JSON output.  Exit codes: 0 success, 1 usage or input errors, 2
distribution check failed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .bagen import BAGenerator
from .batch import BATCH_SAMPLERS, enumerate_exact
from .linktree import RRTGenerator
from .stats import (chi_square_gof, degree_stats, empirical_law,
                    reconstruct_via_sweep, tree_metrics, tv_distance)

TV_THRESHOLD = 0.015
P_THRESHOLD = 0.001


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _make_generator(model: str, n: int, seed: int, exponent: float):
    if model in ("ba", "z"):
        return BAGenerator(n, seed, exponent)
    return RRTGenerator(n, seed, exponent)


def _read_queries_file(path: str, n: int):
    queries = []
    try:
        with open(path, "r", encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        sys.stderr.write(f"cannot read queries file: {exc}\n")
        raise SystemExit(1)
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            j = int(text, 10)
        except ValueError:
            sys.stderr.write(f"queries file line {lineno}: not an integer: {text!r}\n")
            raise SystemExit(1)
        if not 1 <= j <= n:
            sys.stderr.write(f"queries file line {lineno}: node {j} outside [1, {n}]\n")
            raise SystemExit(1)
        queries.append(j)
    return queries


def _schedule_queries(gen, n: int, schedule: str):
    """Yield (node, answer) pairs for a full sweep or round-robin pass."""
    if schedule == "sweep":
        for j in range(1, n + 1):
            while True:
                r = gen.next_neighbor(j)
                yield j, r
                if r == n + 1:
                    break
    else:
        active = set(range(1, n + 1))
        while active:
            for j in range(1, n + 1):
                if j in active:
                    r = gen.next_neighbor(j)
                    yield j, r
                    if r == n + 1:
                        active.discard(j)


def _cmd_sample(args) -> int:
    gen = _make_generator(args.model, args.n, args.seed, args.toss_exponent)
    if args.schedule == "file":
        if not args.queries_file:
            sys.stderr.write("schedule 'file' requires --queries-file\n")
            return 1
        nodes = _read_queries_file(args.queries_file, args.n)
        pairs = [(j, gen.next_neighbor(j)) for j in nodes]
    else:
        pairs = list(_schedule_queries(gen, args.n, args.schedule))
    if args.output == "json":
        print(json.dumps({
            "model": args.model, "n": args.n, "seed": args.seed,
            "schedule": args.schedule,
            "queries": [[j, r] for j, r in pairs],
            "bits_consumed": gen.bits_consumed,
            "stored_cells": gen.stored_cells(),
        }))
    else:
        for j, r in pairs:
            print(f"q {j} -> {r}")
    return 0


def _cmd_batch(args) -> int:
    sample = BATCH_SAMPLERS[args.model](args.n, args.seed)
    if args.output == "json":
        print(sample.to_json())
    else:
        for line in sample.edge_lines():
            print(line)
    return 0


def _cmd_compare(args) -> int:
    if args.n > 8:
        sys.stderr.write("compare needs n <= 8 for the exact law\n")
        return 1
    exact = enumerate_exact(args.model, args.n)
    counts = {}
    for i in range(args.trials):
        gen = _make_generator(args.model, args.n, args.seed + i,
                              args.toss_exponent)
        outcome = reconstruct_via_sweep(gen, args.model, args.schedule).outcome()
        counts[outcome] = counts.get(outcome, 0) + 1
    tv = float(tv_distance(empirical_law(counts, args.trials), exact))
    try:
        p_value = chi_square_gof(counts, exact, args.trials)
    except ValueError:
        p_value = None
    passed = tv < TV_THRESHOLD and (p_value is None or p_value > P_THRESHOLD)
    if args.output == "json":
        print(json.dumps({
            "model": args.model, "n": args.n, "trials": args.trials,
            "seed": args.seed, "schedule": args.schedule,
            "tv": tv, "chi2_p": p_value, "pass": passed,
        }))
    else:
        chi_text = "n/a" if p_value is None else f"{p_value:.6f}"
        print(f"model={args.model} n={args.n} trials={args.trials}")
        print(f"tv={tv:.6f} chi2_p={chi_text}")
        print("PASS" if passed else "FAIL")
    return 0 if passed else 2


def _cmd_stats(args) -> int:
    sampler = BATCH_SAMPLERS[args.model]
    heights = []
    max_fan_out = 0
    degree_hist = {}
    outcome_counts = {}
    for i in range(args.seeds):
        sample = sampler(args.n, args.seed + i)
        metrics = tree_metrics(sample)
        heights.append(metrics["height"])
        max_fan_out = max(max_fan_out, metrics["max_fan_out"])
        for d in degree_stats(sample)["degree"][1:]:
            degree_hist[d] = degree_hist.get(d, 0) + 1
        if args.n <= 8:
            key = sample.outcome()
            outcome_counts[key] = outcome_counts.get(key, 0) + 1
    tv = chi2_p = None
    if args.n <= 8:
        exact = enumerate_exact(args.model, args.n)
        tv = float(tv_distance(empirical_law(outcome_counts, args.seeds), exact))
        try:
            chi2_p = chi_square_gof(outcome_counts, exact, args.seeds)
        except ValueError:
            chi2_p = None

    gen = _make_generator(args.model, args.n, args.seed, args.toss_exponent)
    rng = random.Random(args.seed)
    queries = min(args.otf_queries, 3 * args.n + 3)
    start = time.perf_counter()
    for _ in range(queries):
        gen.next_neighbor(rng.randrange(1, args.n + 1))
    elapsed = time.perf_counter() - start
    bits_per_query = gen.bits_consumed / queries
    time_per_query_ns = elapsed / queries * 1e9

    height_mean = sum(heights) / len(heights)
    if args.output == "json":
        print(json.dumps({
            "model": args.model, "n": args.n, "seeds": args.seeds,
            "tv": tv, "chi2_p": chi2_p,
            "degree_hist": {str(k): degree_hist[k] for k in sorted(degree_hist)},
            "height": height_mean, "max_indeg": max_fan_out,
            "bits_per_query_mean": bits_per_query,
            "time_per_query_ns": time_per_query_ns,
        }))
    else:
        print(f"model={args.model} n={args.n} seeds={args.seeds}")
        print(f"height_mean={height_mean:.3f} max_fan_out={max_fan_out}")
        hist = " ".join(f"{k}:{degree_hist[k]}" for k in sorted(degree_hist))
        print(f"degree_hist {hist}")
        if tv is not None:
            chi_text = "n/a" if chi2_p is None else f"{chi2_p:.6f}"
            print(f"tv={tv:.6f} chi2_p={chi_text}")
        print(f"bits_per_query_mean={bits_per_query:.3f}")
    return 0


def _cmd_bench(args) -> int:
    gen = _make_generator(args.model, args.n, args.seed, args.toss_exponent)
    rng = random.Random(args.seed)
    nodes = [rng.randrange(1, args.n + 1) for _ in range(args.queries)]
    start = time.perf_counter()
    for j in nodes:
        gen.next_neighbor(j)
    elapsed = time.perf_counter() - start
    tree = gen.tree
    print(json.dumps({
        "model": args.model, "n": args.n, "queries": args.queries,
        "seed": args.seed,
        "bits_per_query_mean": gen.bits_consumed / args.queries,
        "time_per_query_ns": elapsed / args.queries * 1e9,
        "stored_cells": gen.stored_cells(),
        "max_scan_iterations": tree.scan_loop_max,
        "max_recursion_depth": tree.max_recursion_depth,
    }))
    return 0


def _add_common(sub, trials=False, seeds=False):
    sub.add_argument("--model", choices=("ba", "z", "rrt"), default="ba")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--toss-exponent", type=float, default=3.0)
    sub.add_argument("--output", choices=("text", "json"), default="text")
    if trials:
        sub.add_argument("--trials", type=int, default=20000)
    if seeds:
        sub.add_argument("--seeds", type=int, default=20)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flygraph",
                     description="On-the-fly random graph sampler.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_sample = subs.add_parser("sample", help="drive the lazy sampler")
    _add_common(p_sample)
    p_sample.add_argument("--schedule", choices=("sweep", "roundrobin", "file"),
                          default="sweep")
    p_sample.add_argument("--queries-file")
    p_sample.set_defaults(func=_cmd_sample)

    p_batch = subs.add_parser("batch", help="sample one whole graph up front")
    _add_common(p_batch)
    p_batch.set_defaults(func=_cmd_batch)

    p_compare = subs.add_parser("compare",
                                help="empirical sweep law vs exact law")
    _add_common(p_compare, trials=True)
    p_compare.add_argument("--schedule", choices=("sweep", "roundrobin"),
                           default="sweep")
    p_compare.set_defaults(func=_cmd_compare)

    p_stats = subs.add_parser("stats", help="summary statistics")
    _add_common(p_stats, seeds=True)
    p_stats.add_argument("--otf-queries", type=int, default=2000)
    p_stats.set_defaults(func=_cmd_stats)

    p_bench = subs.add_parser("bench", help="sampler cost figures (JSON)")
    _add_common(p_bench)
    p_bench.add_argument("--queries", type=int, default=10000)
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    for name in ("n", "trials", "seeds", "queries", "otf_queries"):
        value = getattr(args, name, None)
        if value is not None and value < 1:
            sys.stderr.write(f"--{name.replace('_', '-')} must be positive\n")
            return 1
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1


if __name__ == "__main__":
    sys.exit(main())
