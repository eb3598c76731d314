"""Grouped bar charts of benchmark summaries as standalone SVG."""

from __future__ import annotations

import math
import os
from pathlib import Path
from typing import Callable, Sequence
from xml.sax.saxutils import escape

from .bench import SummaryRow
from .coloring import AlgorithmId

ALGORITHM_COLORS = {
    AlgorithmId.DBLAC: "#E24A33",
    AlgorithmId.LDF: "#988ED5",
    AlgorithmId.DSATUR: "#348ABD",
    AlgorithmId.RLF: "#8EBA42",
}

WIDTH, HEIGHT = 760, 420
LEFT, RIGHT, TOP, BOTTOM = 80, 140, 50, 90


def _grouped_bars(
    rows: Sequence[SummaryRow],
    value: Callable[[SummaryRow], float],
    title: str,
    ylabel: str,
    log_scale: bool,
) -> str:
    instances = sorted({r.instance for r in rows})
    algos = sorted({r.algorithm for r in rows}, key=lambda a: a.rank)
    by_key = {(r.instance, r.algorithm): value(r) for r in rows}
    plot_w = WIDTH - LEFT - RIGHT
    plot_h = HEIGHT - TOP - BOTTOM
    base_y = TOP + plot_h

    values = list(by_key.values())
    if log_scale:
        positive = [v for v in values if v > 0] or [1e-6]
        # one decade of headroom below the smallest bar so it stays visible
        lo = math.floor(math.log10(min(positive))) - 1
        hi = max(math.ceil(math.log10(max(positive))), lo + 1)
        ticks = [10.0**e for e in range(lo, hi + 1)]

        def scale(v: float) -> float:
            v = max(v, 10.0**lo)
            return (math.log10(v) - lo) / (hi - lo) * plot_h
    else:
        top = max(values) * 1.1 or 1.0
        step = 10 ** math.floor(math.log10(top)) if top >= 1 else top / 5
        ticks = [i * step for i in range(int(top // step) + 1)]

        def scale(v: float) -> float:
            return v / top * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{LEFT + plot_w / 2:.1f}" y="28" text-anchor="middle" font-size="16" font-weight="bold">{escape(title)}</text>',
        f'<text class="axis-label" x="{-(TOP + plot_h / 2):.1f}" y="22" transform="rotate(-90)" '
        f'text-anchor="middle" font-size="13">{escape(ylabel)}</text>',
    ]
    for t in ticks:
        y = base_y - scale(t)
        label = f"{t:g}"
        out.append(f'<line x1="{LEFT}" y1="{y:.1f}" x2="{LEFT + plot_w}" y2="{y:.1f}" stroke="#eee"/>')
        out.append(f'<text x="{LEFT - 6}" y="{y + 4:.1f}" text-anchor="end" font-size="11">{label}</text>')
    out.append(f'<line x1="{LEFT}" y1="{base_y}" x2="{LEFT + plot_w}" y2="{base_y}" stroke="#333"/>')
    out.append(f'<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{base_y}" stroke="#333"/>')

    group_w = plot_w / len(instances)
    bar_w = group_w * 0.8 / len(algos)
    for i, name in enumerate(instances):
        gx = LEFT + i * group_w + group_w * 0.1
        out.append(f'<g class="group" data-instance="{escape(name)}">')
        for j, algo in enumerate(algos):
            if (name, algo) not in by_key:
                continue
            v = by_key[(name, algo)]
            h = scale(v)
            out.append(
                f'<rect class="bar" x="{gx + j * bar_w:.1f}" y="{base_y - h:.1f}" width="{bar_w:.1f}" '
                f'height="{h:.1f}" fill="{ALGORITHM_COLORS[algo]}"><title>{escape(name)} {algo}: {v:g}</title></rect>'
            )
        out.append("</g>")
        cx = LEFT + (i + 0.5) * group_w
        out.append(
            f'<text x="{cx:.1f}" y="{base_y + 14}" text-anchor="end" font-size="11" '
            f'transform="rotate(-30 {cx:.1f} {base_y + 14})">{escape(name)}</text>'
        )
    for j, algo in enumerate(algos):
        ly = TOP + j * 20
        out.append(f'<rect class="legend" x="{WIDTH - RIGHT + 20}" y="{ly}" width="12" height="12" fill="{ALGORITHM_COLORS[algo]}"/>')
        out.append(f'<text x="{WIDTH - RIGHT + 38}" y="{ly + 10}" font-size="12">{algo}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def colors_svg(rows: Sequence[SummaryRow]) -> str:
    return _grouped_bars(rows, lambda r: r.mean_colors, "Number of colors", "mean colors used", log_scale=False)


def runtime_svg(rows: Sequence[SummaryRow]) -> str:
    return _grouped_bars(
        rows, lambda r: r.mean_runtime_seconds, "Runtime", "mean runtime (seconds, log scale)", log_scale=True
    )


def emit_plots(rows: Sequence[SummaryRow], out_dir: str | os.PathLike) -> tuple[Path, Path]:
    """Write ``colors.svg`` and ``runtime.svg`` into ``out_dir`` and return their paths."""
    if not rows:
        raise ValueError("no summary rows to plot")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    colors_path = out / "colors.svg"
    runtime_path = out / "runtime.svg"
    colors_path.write_text(colors_svg(rows))
    runtime_path.write_text(runtime_svg(rows))
    return colors_path, runtime_path
