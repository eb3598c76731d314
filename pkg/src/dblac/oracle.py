"""Exact chromatic number for small graphs, used to check the heuristics."""

from __future__ import annotations

from .graph import Graph, GraphError

DEFAULT_LIMIT = 16


def _colorable(g: Graph, order: list[int], k: int) -> bool:
    colors = [-1] * g.n

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colors[w] for w in g.adj_list[v]}
        # a vertex may open at most one new color: removes color-permutation symmetry
        for c in range(min(used + 1, k)):
            if c not in taken:
                colors[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    return place(0, 0)


def exact_chromatic(g: Graph, limit: int = DEFAULT_LIMIT) -> int:
    """Return the chromatic number of ``g`` by trying k = 1, 2, ... in turn.

    Refuses graphs with more than ``limit`` vertices.
    """
    if g.n > limit:
        raise GraphError(f"exact_chromatic refuses n={g.n} > limit={limit}")
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: (-g.degrees[v], v))
    k = 1
    while not _colorable(g, order, k):
        k += 1
    return k
