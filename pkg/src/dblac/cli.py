"""Command line entry point: ``dblac {color,gen,verify,bench}``.

Exit codes: 0 success, 1 operational failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
import warnings
from pathlib import Path

from .algorithms import run_algorithm
from .bench import BenchConfig, BenchError, CellFailure, aggregate, format_table, parse_manifest, run_suite, write_csv
from .coloring import AlgorithmId
from .dimacs import DimacsError, parse_coloring, read_dimacs, write_coloring, write_dimacs
from .generate import gen_erdos_renyi
from .graph import GraphError, is_proper
from .plots import emit_plots

log = logging.getLogger("dblac")


def _algorithm(name: str) -> AlgorithmId:
    try:
        return AlgorithmId.parse(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _algorithm_list(text: str) -> list[AlgorithmId]:
    return [_algorithm(part) for part in text.split(",") if part.strip()]


def _probability(text: str) -> float:
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1], got {p}")
    return p


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit value")
    return value


def _show_warning(message, category, filename, lineno, file=None, line=None) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def cmd_color(args: argparse.Namespace) -> int:
    try:
        g = read_dimacs(args.input)
    except (OSError, DimacsError) as exc:
        return _fail(f"{args.input}: {exc}")
    start = time.perf_counter()
    coloring = run_algorithm(args.algo, g)
    elapsed = time.perf_counter() - start
    text = write_coloring(coloring, comments=(f"instance {Path(args.input).name}",))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    print(f"{Path(args.input).name} {args.algo.name.lower()} colors={coloring.k} time={elapsed:.6f}", file=sys.stderr)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    g = gen_erdos_renyi(args.n, args.p, args.seed)
    data = write_dimacs(g)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    print(f"n={g.n} m={g.m}", file=sys.stderr)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = read_dimacs(args.graph)
        coloring = parse_coloring(Path(args.coloring).read_bytes(), g.n)
    except (OSError, DimacsError) as exc:
        return _fail(str(exc))
    verdict = is_proper(g, coloring)
    if verdict.proper:
        print(f"PROPER k={coloring.k}")
        return 0
    u, v = verdict.witness
    print(f"IMPROPER edge {u + 1} {v + 1}")
    return 1


def cmd_bench(args: argparse.Namespace) -> int:
    manifest = Path(args.manifest)
    try:
        instances = parse_manifest(manifest.read_text(), base_dir=manifest.parent)
        cfg = BenchConfig(instances, args.algos, repetitions=args.reps, warmup=args.warmup)
    except (OSError, ValueError) as exc:
        return _fail(f"{manifest}: {exc}")
    failures: list[CellFailure] = []
    try:
        records = run_suite(cfg, jobs=args.jobs, failures=failures)
        rows = aggregate(records)
    except BenchError as exc:
        return _fail(str(exc))
    for f in failures:
        algo = f" {f.algorithm}" if f.algorithm else ""
        print(f"failed: {f.instance}{algo}: {f.message}", file=sys.stderr)
    if args.csv:
        Path(args.csv).write_text(write_csv(rows, kind="summary"))
    if args.records_csv:
        Path(args.records_csv).write_text(write_csv(records, kind="records"))
    if args.plots and rows:
        try:
            emit_plots(rows, args.plots)
        except OSError as exc:
            return _fail(f"cannot write plots: {exc}")
    sys.stdout.write(format_table(rows))
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dblac", description="Vertex coloring heuristics and benchmarks.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    algos = ", ".join(a.name.lower() for a in AlgorithmId)

    p = sub.add_parser("color", help="color a DIMACS graph")
    p.add_argument("--algo", type=_algorithm, required=True, help=f"one of: {algos}")
    p.add_argument("--input", required=True, help="DIMACS .col file")
    p.add_argument("--output", help="coloring file (default: stdout)")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("gen", help="generate a seeded G(n, p) graph in DIMACS format")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--p", type=_probability, required=True)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--output", help="DIMACS file (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("--graph", required=True, help="DIMACS .col file")
    p.add_argument("--coloring", required=True, help="coloring file ('s' and 'v' lines)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run a benchmark manifest")
    p.add_argument("--manifest", required=True, help="lines of 'file <path>' or 'er <n> <p> <seed>'")
    p.add_argument("--algos", type=_algorithm_list, default=[AlgorithmId.DBLAC, AlgorithmId.DSATUR, AlgorithmId.RLF],
                   help=f"comma-separated subset of: {algos} (default: dblac,dsatur,rlf)")
    p.add_argument("--reps", type=_positive, default=1)
    p.add_argument("--warmup", type=int, default=1)
    p.add_argument("--jobs", type=_positive, default=1, help="parallel workers; 1 runs serially")
    p.add_argument("--csv", help="summary CSV output path")
    p.add_argument("--records-csv", help="per-repetition CSV output path")
    p.add_argument("--plots", help="directory for colors.svg and runtime.svg")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    warnings.showwarning = _show_warning
    try:
        return args.func(args)
    except GraphError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
