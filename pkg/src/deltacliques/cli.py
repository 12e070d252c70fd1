"""Command-line interface: enumerate, compare, generate, stats.

Exit codes: 0 success, 1 malformed input or parameters, 2 search truncated
by --max-states, 3 I/O failure, 4 stream too large for the brute-force
oracle, 5 engine/oracle mismatch in `compare`.  (argparse itself exits
with 2 on usage errors, as usual.)
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from . import analytics, generators
from .engine import EngineConfig, Telemetry, TruncationError, enumerate_maximal
from .oracle import OracleSizeError, brute_force_maximal
from .stream import DeltaClique, LinkStream, StreamFormatError, parse_link_stream

EXIT_OK = 0
EXIT_FORMAT = 1
EXIT_TRUNCATED = 2
EXIT_IO = 3
EXIT_ORACLE_GUARD = 4
EXIT_MISMATCH = 5


def format_clique_lines(stream: LinkStream, cliques: Sequence[DeltaClique]) -> list[str]:
    """`b<TAB>e<TAB>u1 u2 ... uk` rows with original labels, each row's labels
    sorted, rows ordered by (b, e, labels).  Note that with the default span
    the start may be negative (interval padding reaches delta before the
    first link)."""
    rows = []
    for c in cliques:
        labels = tuple(sorted(stream.labels[i] for i in c.nodes))
        rows.append((c.b, c.e, labels))
    rows.sort()
    return [f"{b}\t{e}\t{' '.join(labels)}" for b, e, labels in rows]


def _write_lines(path: Optional[str], lines: Sequence[str]) -> None:
    text = "\n".join(lines) + ("\n" if lines else "")
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_stream(args: argparse.Namespace) -> LinkStream:
    if (args.tmin is None) != (args.tmax is None):
        raise StreamFormatError("--tmin and --tmax must be given together")
    span = None if args.tmin is None else (args.tmin, args.tmax)
    text = Path(args.input).read_text(encoding="utf-8")
    stream = parse_link_stream(text, time_scale=args.time_scale, explicit_span=span)
    if stream.duplicates_collapsed:
        print(
            f"note: collapsed {stream.duplicates_collapsed} duplicate link(s)",
            file=sys.stderr,
        )
    return stream


def _engine_config(args: argparse.Namespace, *, log_discovery: bool) -> EngineConfig:
    return EngineConfig(
        order=args.order,
        use_interval_narrowing=not args.no_interval_narrowing,
        use_candidate_sets=not args.no_candidate_sets,
        max_states=args.max_states,
        log_discovery=log_discovery,
    )


def _render_figures(
    directory: str,
    delta_runs: Sequence[tuple[int, Sequence[DeltaClique], Telemetry]],
) -> None:
    from . import plotting  # deferred: matplotlib is only needed here

    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    sizes = {
        f"delta={delta}": analytics.ccdf(analytics.clique_sizes(cliques))
        for delta, cliques, _ in delta_runs
        if cliques
    }
    durations = {
        f"delta={delta}": analytics.ccdf(analytics.clique_durations(cliques))
        for delta, cliques, _ in delta_runs
        if cliques
    }
    if sizes:
        plotting.plot_ccdf(sizes, out / "ccdf_sizes.png", xlabel="clique size (nodes)")
    if durations:
        plotting.plot_ccdf(
            durations, out / "ccdf_durations.png", xlabel="clique duration (ticks)", logx=True
        )
    curves = {
        f"delta={delta}": telemetry.discovery_log
        for delta, _, telemetry in delta_runs
        if telemetry.discovery_log
    }
    if curves:
        plotting.plot_discovery(curves, out / "discovery.png")


def _delta_path(template: str, delta: int, multiple: bool) -> str:
    if "{delta}" in template:
        return template.format(delta=delta)
    if multiple:
        raise StreamFormatError(
            f"{template!r} needs a {{delta}} placeholder when several deltas run"
        )
    return template


def cmd_enumerate(args: argparse.Namespace) -> int:
    stream = _load_stream(args)
    want_log = bool(args.discovery_log or args.figures)
    config = _engine_config(args, log_discovery=want_log)
    cliques, telemetry = enumerate_maximal(stream, args.delta, config)

    _write_lines(args.out, format_clique_lines(stream, cliques))
    if args.stats:
        row = analytics.summarize(args.delta, cliques, telemetry)
        with open(args.stats, "w", encoding="utf-8") as fh:
            analytics.write_summary(row, fh)
    if args.ccdf_sizes:
        with open(args.ccdf_sizes, "w", encoding="utf-8") as fh:
            analytics.write_ccdf(analytics.ccdf(analytics.clique_sizes(cliques)), fh)
    if args.ccdf_durations:
        with open(args.ccdf_durations, "w", encoding="utf-8") as fh:
            analytics.write_ccdf(analytics.ccdf(analytics.clique_durations(cliques)), fh)
    if args.discovery_log:
        with open(args.discovery_log, "w", encoding="utf-8") as fh:
            analytics.write_discovery_log(analytics.discovery_curve(telemetry), fh)
    if args.figures:
        _render_figures(args.figures, [(args.delta, cliques, telemetry)])
    return EXIT_OK


def run_compare(
    stream: LinkStream, delta: int, config: EngineConfig
) -> tuple[list[DeltaClique], list[DeltaClique]]:
    """(engine-only, oracle-only) cliques; both empty means agreement."""
    engine_result, _ = enumerate_maximal(stream, delta, config)
    oracle_result = brute_force_maximal(stream, delta)
    engine_set = set(engine_result)
    oracle_set = set(oracle_result)
    only_engine = sorted(engine_set - oracle_set, key=DeltaClique.sort_key)
    only_oracle = sorted(oracle_set - engine_set, key=DeltaClique.sort_key)
    return only_engine, only_oracle


def cmd_compare(args: argparse.Namespace) -> int:
    stream = _load_stream(args)
    config = _engine_config(args, log_discovery=False)
    only_engine, only_oracle = run_compare(stream, args.delta, config)
    if not only_engine and not only_oracle:
        print(f"ok: engine and oracle agree for delta={args.delta}")
        return EXIT_OK
    if only_engine:
        print("only in engine output:")
        for line in format_clique_lines(stream, only_engine):
            print(f"  {line}")
    if only_oracle:
        print("only in oracle output:")
        for line in format_clique_lines(stream, only_oracle):
            print(f"  {line}")
    return EXIT_MISMATCH


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        if args.kind == "chain":
            links = generators.chain_links(args.links, args.spacing, args.pairs)
            comment = f"chain pairs={args.pairs} links={args.links} spacing={args.spacing}"
        elif args.kind == "burst":
            links = generators.burst_links(args.nodes)
            comment = f"burst nodes={args.nodes}"
        else:
            links = generators.random_links(
                args.nodes, args.links, args.tmin, args.tmax, args.seed
            )
            comment = (
                f"random nodes={args.nodes} links={args.links} "
                f"times=[{args.tmin},{args.tmax}] seed={args.seed}"
            )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    text = generators.render_stream(links, comment)
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    stream = _load_stream(args)
    deltas = args.delta
    want_log = bool(args.discovery_log or args.figures)
    config = _engine_config(args, log_discovery=want_log)
    multiple = len(deltas) > 1

    def run(delta: int) -> tuple[int, list[DeltaClique], Telemetry]:
        cliques, telemetry = enumerate_maximal(stream, delta, config)
        return delta, cliques, telemetry

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            runs = list(pool.map(run, deltas))
    else:
        runs = [run(d) for d in deltas]

    rows = [analytics.summarize(d, cl, tm) for d, cl, tm in runs]
    if args.stats:
        with open(args.stats, "w", encoding="utf-8") as fh:
            analytics.write_summary(rows, fh)
    else:
        analytics.write_summary(rows, sys.stdout)

    for delta, cliques, telemetry in runs:
        if args.ccdf_sizes and cliques:
            path = _delta_path(args.ccdf_sizes, delta, multiple)
            with open(path, "w", encoding="utf-8") as fh:
                analytics.write_ccdf(analytics.ccdf(analytics.clique_sizes(cliques)), fh)
        if args.ccdf_durations and cliques:
            path = _delta_path(args.ccdf_durations, delta, multiple)
            with open(path, "w", encoding="utf-8") as fh:
                analytics.write_ccdf(
                    analytics.ccdf(analytics.clique_durations(cliques)), fh
                )
        if args.discovery_log:
            path = _delta_path(args.discovery_log, delta, multiple)
            with open(path, "w", encoding="utf-8") as fh:
                analytics.write_discovery_log(analytics.discovery_curve(telemetry), fh)
    if args.figures:
        _render_figures(args.figures, runs)
    return EXIT_OK


def _add_stream_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", help="stream file: `<time> <u> <v> [classes...]` per line")
    parser.add_argument(
        "--time-scale",
        type=int,
        default=1,
        metavar="K",
        help="multiply input times by K; results must be integer ticks (default 1)",
    )
    parser.add_argument("--tmin", type=int, default=None, help="explicit span start")
    parser.add_argument("--tmax", type=int, default=None, help="explicit span end")


def _add_engine_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--order",
        choices=("bfs", "dfs"),
        default="dfs",
        help="exploration order of the configuration space (default dfs)",
    )
    parser.add_argument(
        "--no-interval-narrowing",
        action="store_true",
        help="search full intervals for occurrence times",
    )
    parser.add_argument(
        "--no-candidate-sets",
        action="store_true",
        help="test every outside node instead of inherited candidates",
    )
    parser.add_argument(
        "--max-states",
        type=int,
        default=None,
        metavar="N",
        help="abort (exit 2) if more than N states are generated",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltacliques",
        description="Enumerate maximal delta-cliques of a link stream.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser(
        "enumerate",
        help="list all maximal delta-cliques",
        description=(
            "Write one clique per line as `b<TAB>e<TAB>u1 u2 ... uk`, sorted "
            "by (b, e, labels).  With the default span, starts can be "
            "negative: intervals are padded by delta beyond the first and "
            "last links."
        ),
    )
    _add_stream_options(enum)
    _add_engine_options(enum)
    enum.add_argument("--delta", type=int, required=True, help="window length in ticks")
    enum.add_argument("--out", default=None, help="clique output file (default stdout)")
    enum.add_argument("--stats", default=None, help="summary JSON line output")
    enum.add_argument("--ccdf-sizes", default=None, help="size CCDF tsv output")
    enum.add_argument("--ccdf-durations", default=None, help="duration CCDF tsv output")
    enum.add_argument("--discovery-log", default=None, help="discovery log tsv output")
    enum.add_argument("--figures", default=None, metavar="DIR", help="render figures here")
    enum.set_defaults(func=cmd_enumerate)

    comp = sub.add_parser(
        "compare",
        help="check the engine against the brute-force oracle",
        description=(
            "Exit 0 when engine and oracle return identical sets, 5 on "
            "mismatch (the symmetric difference is printed), 4 when the "
            "stream exceeds the oracle size guard."
        ),
    )
    _add_stream_options(comp)
    _add_engine_options(comp)
    comp.add_argument("--delta", type=int, required=True, help="window length in ticks")
    comp.set_defaults(func=cmd_compare)

    gen = sub.add_parser("generate", help="write a synthetic stream file")
    gen.add_argument("kind", choices=("chain", "burst", "random"))
    gen.add_argument("--out", default=None, help="output file (default stdout)")
    gen.add_argument("--nodes", type=int, default=4, help="node count (burst, random)")
    gen.add_argument("--links", type=int, default=10, help="link count (chain, random)")
    gen.add_argument("--spacing", type=int, default=1, help="tick gap between chain links")
    gen.add_argument("--pairs", type=int, default=1, help="independent chain pairs")
    gen.add_argument("--tmin", type=int, default=0, help="random time range start")
    gen.add_argument("--tmax", type=int, default=100, help="random time range end")
    gen.add_argument("--seed", type=int, default=0, help="random generator seed")
    gen.set_defaults(func=cmd_generate)

    stats = sub.add_parser(
        "stats",
        help="summaries and distribution exports across one or more deltas",
        description=(
            "Run the enumeration for each --delta and write one summary JSON "
            "object per run.  Per-delta export paths take a {delta} "
            "placeholder when several deltas are given."
        ),
    )
    _add_stream_options(stats)
    _add_engine_options(stats)
    stats.add_argument(
        "--delta",
        type=int,
        action="append",
        required=True,
        help="window length in ticks; repeat for several runs",
    )
    stats.add_argument("--jobs", type=int, default=1, help="concurrent delta runs")
    stats.add_argument("--stats", default=None, help="summary JSONL file (default stdout)")
    stats.add_argument("--ccdf-sizes", default=None, help="size CCDF tsv (template)")
    stats.add_argument("--ccdf-durations", default=None, help="duration CCDF tsv (template)")
    stats.add_argument("--discovery-log", default=None, help="discovery tsv (template)")
    stats.add_argument("--figures", default=None, metavar="DIR", help="render figures here")
    stats.set_defaults(func=cmd_stats)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StreamFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except OracleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE_GUARD
    except TruncationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TRUNCATED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
