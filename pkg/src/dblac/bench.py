"""Timed benchmark runs, aggregation and CSV output."""

from __future__ import annotations

import csv
import io
import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Iterable, Sequence

from .algorithms import run_algorithm
from .coloring import AlgorithmId
from .dimacs import read_dimacs
from .generate import gen_erdos_renyi
from .graph import Graph, is_proper

log = logging.getLogger(__name__)

SUMMARY_HEADER = ["instance", "algorithm", "mean_colors", "mean_runtime_s", "min_runtime_s", "repetitions"]
RECORD_HEADER = ["instance", "algorithm", "repetition", "colors", "runtime_s"]


class BenchError(RuntimeError):
    pass


@dataclass(frozen=True)
class Instance:
    """A named graph source: a DIMACS file path or an ``(n, p, seed)`` random spec."""

    name: str
    path: Path | None = None
    er: tuple[int, float, int] | None = None

    def load(self) -> Graph:
        if self.path is not None:
            return read_dimacs(self.path)
        assert self.er is not None
        return gen_erdos_renyi(*self.er)


@dataclass(frozen=True)
class BenchConfig:
    instances: Sequence[Instance]
    algorithms: Sequence[AlgorithmId] = (AlgorithmId.DBLAC, AlgorithmId.DSATUR, AlgorithmId.RLF)
    repetitions: int = 1
    warmup: int = 1

    def __post_init__(self) -> None:
        if self.repetitions < 1:
            raise ValueError("repetitions must be at least 1")
        if self.warmup < 0:
            raise ValueError("warmup must be non-negative")
        names = [inst.name for inst in self.instances]
        dupes = sorted({x for x in names if names.count(x) > 1})
        if dupes:
            raise ValueError(f"duplicate instance names: {', '.join(dupes)}")


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    algorithm: AlgorithmId
    repetition: int
    colors: int
    runtime_seconds: float


@dataclass(frozen=True)
class SummaryRow:
    instance: str
    algorithm: AlgorithmId
    mean_colors: float
    mean_runtime_seconds: float
    min_runtime_seconds: float
    repetitions: int


@dataclass
class CellFailure:
    instance: str
    algorithm: AlgorithmId | None
    message: str


def parse_manifest(text: str, base_dir: str | os.PathLike = ".") -> list[Instance]:
    """Read a manifest: one ``file <path>`` or ``er <n> <p> <seed>`` per line.

    Blank lines and lines starting with ``#`` are skipped. Relative paths are
    resolved against ``base_dir``.
    """
    instances = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        try:
            if tokens[0] == "file" and len(tokens) == 2:
                path = Path(base_dir) / tokens[1]
                instances.append(Instance(path.name, path=path))
            elif tokens[0] == "er" and len(tokens) == 4:
                n, p, seed = int(tokens[1]), float(tokens[2]), int(tokens[3])
                instances.append(Instance(f"er-{n}-{tokens[2]}-{seed}", er=(n, p, seed)))
            else:
                raise ValueError("expected 'file <path>' or 'er <n> <p> <seed>'")
        except ValueError as exc:
            raise ValueError(f"manifest line {lineno}: {exc}") from None
    return instances


def er_instances(count: int = 50, n: int = 100, p: float = 0.5, first_seed: int = 0) -> list[Instance]:
    """``count`` random instances with consecutive seeds."""
    return [Instance(f"er-{n}-{p}-{s}", er=(n, p, s)) for s in range(first_seed, first_seed + count)]


def run_instance(
    g: Graph, algorithm: AlgorithmId, repetitions: int = 1, warmup: int = 1, instance: str = "<graph>"
) -> list[BenchRecord]:
    """Time ``repetitions`` colorings of ``g`` after ``warmup`` untimed ones.

    Only the coloring call is inside the timed region. Every coloring is
    checked for properness before it is recorded.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    for _ in range(warmup):
        run_algorithm(algorithm, g)
    records = []
    for rep in range(repetitions):
        start = time.perf_counter()
        coloring = run_algorithm(algorithm, g)
        elapsed = time.perf_counter() - start
        verdict = is_proper(g, coloring)
        if not verdict.proper:
            u, v = verdict.witness
            raise BenchError(
                f"{algorithm} produced an improper coloring of {instance}: edge ({u + 1}, {v + 1})"
            )
        records.append(BenchRecord(instance, algorithm, rep, coloring.k, elapsed))
    return records


def _run_cell(args: tuple[Graph, AlgorithmId, int, int, str]) -> list[BenchRecord]:
    return run_instance(*args)


def run_suite(
    cfg: BenchConfig, jobs: int = 1, failures: list[CellFailure] | None = None
) -> list[BenchRecord]:
    """Run every (instance, algorithm) cell and return the records in config order.

    Each instance is loaded or generated once and shared by all algorithms.
    By default the first failure raises :class:`BenchError`; when a
    ``failures`` list is given, failed cells are appended to it and the
    remaining cells still run.
    """
    cells = []
    for inst in cfg.instances:
        try:
            g = inst.load()
        except (OSError, ValueError) as exc:
            if failures is None:
                raise BenchError(f"{inst.name}: {exc}") from exc
            log.error("%s: %s", inst.name, exc)
            failures.append(CellFailure(inst.name, None, str(exc)))
            continue
        for algo in cfg.algorithms:
            cells.append((g, algo, cfg.repetitions, cfg.warmup, inst.name))

    records: list[BenchRecord] = []

    def collect(cell, run) -> None:
        try:
            records.extend(run())
        except BenchError as exc:
            if failures is None:
                raise
            log.error("%s", exc)
            failures.append(CellFailure(cell[4], cell[1], str(exc)))

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_cell, cell) for cell in cells]
            for cell, fut in zip(cells, futures):
                collect(cell, fut.result)
    else:
        for cell in cells:
            collect(cell, partial(_run_cell, cell))
    return records


def aggregate(records: Iterable[BenchRecord]) -> list[SummaryRow]:
    groups: dict[tuple[str, AlgorithmId], list[BenchRecord]] = {}
    for rec in records:
        groups.setdefault((rec.instance, rec.algorithm), []).append(rec)
    rows = []
    for (name, algo), recs in groups.items():
        colors = {r.colors for r in recs}
        if len(colors) != 1:
            raise BenchError(f"{algo} on {name} gave different color counts across repetitions: {sorted(colors)}")
        times = [r.runtime_seconds for r in recs]
        rows.append(
            SummaryRow(
                instance=name,
                algorithm=algo,
                mean_colors=math.fsum(r.colors for r in recs) / len(recs),
                # fsum keeps the mean independent of record order
                mean_runtime_seconds=math.fsum(times) / len(times),
                min_runtime_seconds=min(times),
                repetitions=len(recs),
            )
        )
    rows.sort(key=lambda r: (r.instance, r.algorithm.rank))
    return rows


def write_csv(rows: Sequence[SummaryRow] | Sequence[BenchRecord], kind: str | None = None) -> str:
    """Render summaries or raw records as CSV with 6-digit runtimes.

    The row type decides the header; pass ``kind="summary"`` or
    ``kind="records"`` to choose it for an empty sequence.
    """
    if kind is None:
        kind = "records" if rows and isinstance(rows[0], BenchRecord) else "summary"
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if kind == "summary":
        writer.writerow(SUMMARY_HEADER)
        for r in rows:
            writer.writerow([
                r.instance, r.algorithm.value, f"{r.mean_colors:.2f}",
                f"{r.mean_runtime_seconds:.6f}", f"{r.min_runtime_seconds:.6f}", r.repetitions,
            ])
    elif kind == "records":
        writer.writerow(RECORD_HEADER)
        for r in rows:
            writer.writerow([r.instance, r.algorithm.value, r.repetition, r.colors, f"{r.runtime_seconds:.6f}"])
    else:
        raise ValueError(f"unknown CSV kind {kind!r}")
    return out.getvalue()


def read_summary_csv(text: str) -> list[SummaryRow]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != SUMMARY_HEADER:
        raise ValueError(f"unexpected summary header {reader.fieldnames}")
    return [
        SummaryRow(
            row["instance"], AlgorithmId.parse(row["algorithm"]), float(row["mean_colors"]),
            float(row["mean_runtime_s"]), float(row["min_runtime_s"]), int(row["repetitions"]),
        )
        for row in reader
    ]


def format_table(rows: Sequence[SummaryRow]) -> str:
    """Aligned text table: one line per instance, colors then runtimes per algorithm."""
    algos = sorted({r.algorithm for r in rows}, key=lambda a: a.rank)
    instances = sorted({r.instance for r in rows})
    by_key = {(r.instance, r.algorithm): r for r in rows}
    header = ["Graph"] + [f"{a} Colors" for a in algos] + [f"{a} Runtime (s)" for a in algos]
    body = []
    for name in instances:
        cells = [by_key.get((name, a)) for a in algos]
        body.append(
            [name]
            + ["-" if c is None else f"{c.mean_colors:g}" for c in cells]
            + ["-" if c is None else f"{c.mean_runtime_seconds:.6f}" for c in cells]
        )
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
    lines = []
    for line in [header, *body]:
        lines.append("  ".join(cell.ljust(w) if i == 0 else cell.rjust(w) for i, (cell, w) in enumerate(zip(line, widths))))
    return "\n".join(lines) + "\n"
