"""DIMACS ``.col`` graphs and the ``s``/``v`` coloring text format.

Vertices are 1-indexed in both file formats and 0-indexed in memory.
"""

from __future__ import annotations

import os
import warnings

from .coloring import Coloring
from .graph import Graph, from_edge_list


class DimacsError(ValueError):
    """Malformed DIMACS input. ``lineno`` is 1-based, or ``None`` for whole-file errors."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


class MissingHeaderError(DimacsError):
    pass


class EdgeBeforeHeaderError(DimacsError):
    pass


class EndpointRangeError(DimacsError):
    pass


class BadTokenError(DimacsError):
    pass


class EdgeCountWarning(UserWarning):
    """The ``p`` line's edge count differs from the number of distinct edges read."""


def _decode(data: bytes | str) -> str:
    if isinstance(data, bytes):
        return data.decode("ascii", errors="replace")
    return data


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise BadTokenError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_dimacs(data: bytes | str) -> Graph:
    """Parse a DIMACS ``.col`` document into a :class:`Graph`.

    The declared edge count is advisory: duplicates and reversed duplicates
    are merged, and an :class:`EdgeCountWarning` is issued when the distinct
    edge count does not match the header.
    """
    n: int | None = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    for lineno, line in enumerate(_decode(data).splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise DimacsError("second 'p' line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise BadTokenError(f"expected 'p edge <n> <m>', got {line.strip()!r}", lineno)
            n, declared_m = _ints(tokens[2:], lineno)
            if n < 0 or declared_m < 0:
                raise BadTokenError("negative count in 'p' line", lineno)
        elif kind == "e":
            if n is None:
                raise EdgeBeforeHeaderError("'e' line before the 'p' line", lineno)
            if len(tokens) != 3:
                raise BadTokenError(f"expected 'e <u> <v>', got {line.strip()!r}", lineno)
            u, v = _ints(tokens[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise EndpointRangeError(f"edge ({u}, {v}) has an endpoint outside 1..{n}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise BadTokenError(f"unexpected line type {kind!r}", lineno)
    if n is None:
        raise MissingHeaderError("no 'p edge <n> <m>' line")
    g = from_edge_list(n, edges)
    if g.m != declared_m:
        warnings.warn(
            f"header declares {declared_m} edges but {g.m} distinct edges were read",
            EdgeCountWarning,
            stacklevel=2,
        )
    return g


def read_dimacs(path: str | os.PathLike) -> Graph:
    with open(path, "rb") as f:
        return parse_dimacs(f.read())


def write_dimacs(g: Graph) -> bytes:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return ("\n".join(lines) + "\n").encode("ascii")


def write_coloring(c: Coloring, comments: tuple[str, ...] = ()) -> str:
    """Render a coloring as ``c`` comments, ``s <k>``, then ``v <vertex> <color>`` lines."""
    lines = [f"c {text}" for text in comments]
    if c.algorithm is not None:
        lines.append(f"c algorithm {c.algorithm.value}")
    lines.append(f"s {c.k}")
    lines.extend(f"v {v + 1} {color + 1}" for v, color in enumerate(c.assignment))
    return "\n".join(lines) + "\n"


def parse_coloring(data: bytes | str, n: int) -> Coloring:
    """Read a coloring of an ``n``-vertex graph, checking every vertex appears once."""
    colors: list[int | None] = [None] * n
    declared_k = None
    for lineno, line in enumerate(_decode(data).splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "s" and len(tokens) == 2:
            (declared_k,) = _ints(tokens[1:], lineno)
        elif tokens[0] == "v" and len(tokens) == 3:
            v, color = _ints(tokens[1:], lineno)
            if not 1 <= v <= n:
                raise EndpointRangeError(f"vertex {v} outside 1..{n}", lineno)
            if color < 1:
                raise BadTokenError(f"color {color} is not positive", lineno)
            if colors[v - 1] is not None:
                raise DimacsError(f"vertex {v} colored twice", lineno)
            colors[v - 1] = color - 1
        else:
            raise BadTokenError(f"unexpected line {line.strip()!r}", lineno)
    missing = [v + 1 for v, color in enumerate(colors) if color is None]
    if missing:
        shown = ", ".join(map(str, missing[:10]))
        raise DimacsError(f"{len(missing)} vertices have no color (first: {shown})")
    try:
        coloring = Coloring(tuple(colors))
    except ValueError as exc:
        raise DimacsError(str(exc)) from None
    if declared_k is not None and declared_k != coloring.k:
        raise DimacsError(f"'s {declared_k}' does not match the {coloring.k} colors used")
    return coloring
