"""Command-line interface.

Subcommands: cluster, schedule, replay, stats, verify. Exit codes: 0 on
success, 1 on validation failure, 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .agreement import count_below, distance_multiset, schedule_from_values
from .clustering import cluster_baseline, cluster_indexed, clustering_cost, same_partition
from .formats import (
    LoadReport,
    ParseError,
    StatsRow,
    read_edge_list,
    read_update_stream,
    write_clustering,
    write_histogram_csv,
    write_stats_csv,
)
from .graph import AddVertex, Flip, GraphError, Query, RemoveVertex, SignedGraph
from .index import StaleIndexError, build_index
from .oracle import oracle_rebuild_index
from .verify import run_verification


def _eps_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= value <= 2.0:
        raise argparse.ArgumentTypeError(f"threshold {value} outside [0, 2]")
    return value


def _k_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 2:
        raise argparse.ArgumentTypeError("schedule size must be at least 2")
    return value


class OutputPathError(Exception):
    pass


def _check_distinct(out, *inputs) -> None:
    out_abs = os.path.abspath(out)
    for path in inputs:
        if os.path.abspath(path) == out_abs:
            raise OutputPathError(f"output path {out} would overwrite input {path}")


def _load(path) -> tuple[SignedGraph, LoadReport]:
    g, report = read_edge_list(path)
    print(
        f"loaded {path}: n={report.n} m={report.m} "
        f"(duplicates dropped: {report.duplicate_edges}, "
        f"self-loops dropped: {report.self_loops})"
    )
    return g, report


def _count_heavy(idx, eps: float) -> int:
    return sum(1 for v in idx.graph.vertices() if idx.is_heavy(v, eps))


def cmd_cluster(args) -> int:
    _check_distinct(args.out, args.graph)
    g, _ = _load(args.graph)
    if args.baseline_only:
        t0 = time.perf_counter()
        clustering = cluster_baseline(g, args.eps)
        query_ms = (time.perf_counter() - t0) * 1e3
        print(f"baseline query: {query_ms:.3f} ms")
    else:
        t0 = time.perf_counter()
        idx = build_index(g)
        build_ms = (time.perf_counter() - t0) * 1e3
        t0 = time.perf_counter()
        clustering = cluster_indexed(idx, args.eps)
        query_ms = (time.perf_counter() - t0) * 1e3
        print(f"index build: {build_ms:.3f} ms, indexed query: {query_ms:.3f} ms")
    cost = clustering_cost(g, clustering)
    write_clustering(clustering, args.out)
    print(
        f"n={g.n} m={g.m} eps={args.eps:g} clusters={len(clustering)} "
        f"cost={cost} -> {args.out}"
    )
    return 0


def cmd_schedule(args) -> int:
    _check_distinct(args.out, args.graph)
    g, _ = _load(args.graph)
    values, _ = distance_multiset(g)
    schedule = schedule_from_values(values, args.k)

    t0 = time.perf_counter()
    idx = build_index(g)
    build_ms = (time.perf_counter() - t0) * 1e3

    rows: list[StatsRow] = []
    total_cc = 0.0
    total_icc = 0.0
    for eps in schedule:
        cc_ms = None
        if not args.icc_only:
            t0 = time.perf_counter()
            baseline = cluster_baseline(g, eps)
            cc_ms = (time.perf_counter() - t0) * 1e3
            total_cc += cc_ms
        t0 = time.perf_counter()
        indexed = cluster_indexed(idx, eps)
        icc_ms = (time.perf_counter() - t0) * 1e3
        total_icc += icc_ms
        if not args.icc_only and not same_partition(baseline, indexed):
            print(
                f"error: indexed partition differs from baseline at eps={eps!r}",
                file=sys.stderr,
            )
            return 1
        heavy = _count_heavy(idx, eps)
        rows.append(StatsRow(
            eps=eps,
            agree_edges=count_below(values, eps),
            light_vertices=g.n - heavy,
            heavy_vertices=heavy,
            clusters=len(indexed),
            cost=clustering_cost(g, indexed),
            cc_ms=cc_ms,
            icc_ms=icc_ms,
        ))
    write_stats_csv(rows, args.out)
    print(f"wrote {len(rows)} schedule points -> {args.out}")
    print(f"index build: {build_ms:.3f} ms")
    if not args.icc_only:
        print(f"total baseline time: {total_cc:.3f} ms")
    print(f"total indexed time:  {total_icc:.3f} ms")
    if not args.no_figures:
        from .figures import render_schedule_figures

        for path in render_schedule_figures(rows, args.out):
            print(f"figure -> {path}")
    return 0


def cmd_replay(args) -> int:
    _check_distinct(args.out, args.graph, args.stream)
    g, _ = _load(args.graph)
    events = read_update_stream(args.stream)
    idx = build_index(g)
    values_dirty = True
    values: list[float] = []
    rows: list[StatsRow] = []
    for lineno, event in events:
        try:
            if isinstance(event, Query):
                t0 = time.perf_counter()
                clustering = cluster_indexed(idx, event.eps)
                icc_ms = (time.perf_counter() - t0) * 1e3
                if values_dirty:
                    values, _ = distance_multiset(g)
                    values_dirty = False
                heavy = _count_heavy(idx, event.eps)
                rows.append(StatsRow(
                    eps=event.eps,
                    agree_edges=count_below(values, event.eps),
                    light_vertices=g.n - heavy,
                    heavy_vertices=heavy,
                    clusters=len(clustering),
                    cost=clustering_cost(g, clustering),
                    icc_ms=icc_ms,
                ))
            elif isinstance(event, Flip):
                idx.flip_edge(event.u, event.v)
                values_dirty = True
            elif isinstance(event, AddVertex):
                idx.add_vertex(event.v, event.neighbors)
                values_dirty = True
            elif isinstance(event, RemoveVertex):
                idx.remove_vertex(event.v)
                values_dirty = True
        except GraphError as exc:
            print(f"error: {args.stream}:{lineno}: invalid event: {exc}", file=sys.stderr)
            return 1
        if args.check and idx != oracle_rebuild_index(g):
            print(
                f"error: {args.stream}:{lineno}: maintained index diverged "
                f"from a fresh rebuild after {event!r}",
                file=sys.stderr,
            )
            return 1
    write_stats_csv(rows, args.out)
    print(
        f"replayed {len(events)} events ({len(rows)} queries) "
        f"-> {args.out}; final n={g.n} m={g.m}"
    )
    return 0


def cmd_stats(args) -> int:
    _check_distinct(args.out, args.graph)
    g, _ = _load(args.graph)
    values, stats = distance_multiset(g)
    write_histogram_csv(values, stats, args.out)
    print(f"edges={len(values)} distinct={stats.distinct}")
    if stats.minimum is not None:
        print(f"min={stats.minimum:.17g} max={stats.maximum:.17g}")
    for i, (value, freq) in enumerate(stats.modes, 1):
        print(f"mode {i}: value={value:.17g} frequency={freq}")
    print(f"wrote histogram -> {args.out}")
    if not args.no_figures:
        from .figures import render_histogram_figure

        path = render_histogram_figure(values, stats, args.out)
        if path:
            print(f"figure -> {path}")
    return 0


def cmd_verify(args) -> int:
    report = run_verification(seed=args.seed, trials=args.trials, log=print)
    print(
        f"checked: {report.edges_checked} edge distances, "
        f"{report.partitions_checked} partitions, "
        f"{report.events_checked} maintenance events"
    )
    if not report.ok:
        for failure in report.failures:
            print(f"FAIL: {failure}", file=sys.stderr)
        return 1
    print("all checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corrclust",
        description="Correlation clustering of complete signed graphs with a "
                    "dynamic agreement-distance index.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cluster", help="cluster a graph at one threshold")
    p.add_argument("-g", "--graph", required=True, help="edge list path")
    p.add_argument("-e", "--eps", required=True, type=_eps_arg,
                   help="agreement threshold in [0, 2]")
    p.add_argument("-o", "--out", required=True, help="output clustering path")
    p.add_argument("--baseline-only", action="store_true",
                   help="skip the index and recompute from scratch")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("schedule", help="sweep a threshold schedule, compare "
                                        "baseline and indexed runs")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-k", type=_k_arg, default=21, help="schedule size (default 21)")
    p.add_argument("-o", "--out", required=True, help="output CSV path")
    p.add_argument("--icc-only", action="store_true",
                   help="skip the baseline runs (no equality check)")
    p.add_argument("--no-figures", action="store_true",
                   help="do not render PNG figures next to the CSV")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("replay", help="apply an update stream, answering "
                                      "query events from the maintained index")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-s", "--stream", required=True, help="update stream path")
    p.add_argument("-o", "--out", required=True, help="output CSV path")
    p.add_argument("--check", action="store_true",
                   help="compare against a fresh rebuild after every event (slow)")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("stats", help="distance distribution and summary")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-o", "--out", required=True, help="output CSV path")
    p.add_argument("--no-figures", action="store_true",
                   help="do not render a PNG figure next to the CSV")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="randomized cross-validation against "
                                      "the naive oracles")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=25)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OutputPathError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        name = getattr(exc, "filename", None)
        detail = f"{name}: {exc.strerror}" if name else str(exc)
        print(f"error: {detail}", file=sys.stderr)
        return 2
    except (GraphError, StaleIndexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
