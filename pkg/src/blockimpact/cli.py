"""Command-line front end.

Subcommands: ``analyze`` prints the impact report, ``check`` cross-checks the
fast path against the removal oracle, ``dot`` emits the block forest as
Graphviz text, ``bench`` runs the scaling harness. Exit codes: 0 success,
1 check mismatch, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import TextIO

from .bench import format_rows, sweep
from .dot import export_dot
from .forest import build_block_forest
from .graph import (
    GENERATOR_FAMILIES,
    GeneratorSpec,
    Graph,
    ParseError,
    generate,
    parse_dimacs,
    parse_edge_list,
)
from .impact import ImpactReport, compute_all_impacts, compute_sq_sizes
from .oracle import naive_all_impacts

TSV_COLUMNS = ("label", "impact", "is_articulation", "component_id", "component_size")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockimpact",
        description="Per-vertex impact of removing articulation points, in linear time.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", default="-", help="graph file, or '-' for stdin")
        p.add_argument(
            "--format",
            choices=("edgelist", "dimacs"),
            default="edgelist",
            help="input format (default: edgelist)",
        )
        p.add_argument("--quiet", action="store_true", help="suppress diagnostics on stderr")

    p = sub.add_parser("analyze", help="compute and print the impact report")
    add_input_opts(p)
    p.add_argument(
        "--output", choices=("tsv", "json"), default="tsv", help="output format (default: tsv)"
    )
    p.add_argument(
        "--all",
        dest="all_vertices",
        action="store_true",
        help="report every vertex, not only articulation points",
    )

    p = sub.add_parser("check", help="compare the fast path against the removal oracle")
    add_input_opts(p)
    p.add_argument(
        "--sweep",
        type=int,
        metavar="COUNT",
        help="ignore the input and instead check COUNT random gnm graphs",
    )
    p.add_argument("--n-max", type=int, default=60, help="max vertices per sweep graph")
    p.add_argument("--seed", type=int, default=0, help="sweep RNG seed")

    p = sub.add_parser("dot", help="emit the block forest as Graphviz DOT")
    add_input_opts(p)

    p = sub.add_parser("bench", help="time the pipeline over a size sweep")
    p.add_argument("--family", choices=GENERATOR_FAMILIES, default="path")
    p.add_argument(
        "--sizes",
        default="32768,65536,131072",
        help="comma-separated vertex counts (default: 32768,65536,131072)",
    )
    p.add_argument("--m-per-n", type=float, default=2.0, help="edge density for gnm")
    p.add_argument("--k", type=int, help="family parameter (branching / clique size)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=1, help="median over this many runs per size")
    return parser


def _load_graph(args: argparse.Namespace, err: TextIO) -> Graph:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    parse = parse_dimacs if args.format == "dimacs" else parse_edge_list
    graph, dropped = parse(text)
    if dropped and not args.quiet:
        print(f"note: dropped {dropped} self-loop/duplicate line(s)", file=err)
    return graph


def _sorted_rows(report: ImpactReport, all_vertices: bool):
    rows = sorted(report.rows(), key=lambda r: (-r.impact, r.label))
    if not all_vertices:
        rows = [r for r in rows if r.is_articulation]
    return rows


def _summary_pairs(report: ImpactReport) -> list[tuple[str, object]]:
    pairs: list[tuple[str, object]] = [
        ("n", report.n),
        ("m", report.m),
        ("a", report.articulation_count),
        ("max_impact", report.max_impact),
    ]
    if report.max_impact_label is not None:
        pairs.append(("max_impact_label", report.max_impact_label))
    return pairs


def _cmd_analyze(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    report = compute_all_impacts(_load_graph(args, err))
    rows = _sorted_rows(report, args.all_vertices)
    if args.output == "tsv":
        print("\t".join(TSV_COLUMNS), file=out)
        for r in rows:
            flag = "true" if r.is_articulation else "false"
            print(
                f"{r.label}\t{r.impact}\t{flag}\t{r.component_id}\t{r.component_size}",
                file=out,
            )
        summary = " ".join(f"{k}={v}" for k, v in _summary_pairs(report))
        print(f"# {summary}", file=out)
    else:
        data = {
            "summary": dict(_summary_pairs(report)),
            "vertices": [
                {
                    "label": r.label,
                    "impact": r.impact,
                    "is_articulation": r.is_articulation,
                    "component_id": r.component_id,
                    "component_size": r.component_size,
                }
                for r in rows
            ],
        }
        print(json.dumps(data, indent=2), file=out)
    return 0


def _first_mismatch(fast: ImpactReport, naive: ImpactReport) -> str | None:
    for i in range(fast.n):
        for col in ("impact", "is_articulation", "component_id", "component_size"):
            got = getattr(fast, col)[i]
            want = getattr(naive, col)[i]
            if got != want:
                return f"vertex {fast.labels[i]!r}: fast {col}={got}, naive {col}={want}"
    if fast.articulation_count != naive.articulation_count:
        return f"articulation count: fast {fast.articulation_count}, naive {naive.articulation_count}"
    return None


def _cmd_check(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.sweep is not None:
        if args.sweep < 1 or args.n_max < 1:
            print("error: --sweep and --n-max must be positive", file=err)
            return 2
        rng = random.Random(args.seed)
        for i in range(args.sweep):
            n = rng.randint(1, args.n_max)
            m = rng.randint(0, n * (n - 1) // 2)
            g = generate(GeneratorSpec("gnm", n, m=m, seed=rng.randrange(2**63)))
            mismatch = _first_mismatch(compute_all_impacts(g), naive_all_impacts(g))
            if mismatch:
                print(f"mismatch (graph {i}, n={n}, m={m}): {mismatch}", file=out)
                return 1
        print(f"OK ({args.sweep} graphs)", file=out)
        return 0
    g = _load_graph(args, err)
    mismatch = _first_mismatch(compute_all_impacts(g), naive_all_impacts(g))
    if mismatch:
        print(f"mismatch: {mismatch}", file=out)
        return 1
    print("OK", file=out)
    return 0


def _cmd_dot(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    g = _load_graph(args, err)
    bf = build_block_forest(g)
    sizes = compute_sq_sizes(bf)
    out.write(export_dot(g, bf, sizes))
    return 0


def _cmd_bench(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        print(f"error: bad --sizes value {args.sizes!r}", file=err)
        return 2
    if not sizes:
        print("error: --sizes is empty", file=err)
        return 2
    rows = sweep(
        args.family,
        sizes,
        m_per_n=args.m_per_n,
        k=args.k,
        seed=args.seed,
        repeats=args.repeats,
    )
    out.write(format_rows(rows))
    return 0


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    handlers = {
        "analyze": _cmd_analyze,
        "check": _cmd_check,
        "dot": _cmd_dot,
        "bench": _cmd_bench,
    }
    try:
        return handlers[args.command](args, sys.stdout, sys.stderr)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
