"""Degree-ordered greedy colorers: DBLAC, LDF, DSATUR and RLF.

All four are deterministic. Wherever a rule leaves a tie, the lower vertex
index wins.
"""

from __future__ import annotations

from typing import Callable, MutableSequence

from .coloring import AlgorithmId, Coloring
from .graph import Graph, common_neighbors, iter_bits

UNCOLORED = -1


def degree_order(g: Graph) -> list[int]:
    """Vertices by degree, largest first; equal degrees in index order."""
    deg = g.degrees
    return sorted(range(g.n), key=lambda v: (-deg[v], v))


def smallest_feasible_color(g: Graph, colors: MutableSequence[int], v: int) -> int:
    """Smallest color not used by a colored neighbor of ``v``.

    ``colors`` holds one entry per vertex, ``UNCOLORED`` for vertices not yet
    colored.
    """
    used = 0
    for w in g.adj_list[v]:
        c = colors[w]
        if c >= 0:
            used |= 1 << c
    # lowest zero bit of the used-color mask
    return (~used & (used + 1)).bit_length() - 1


def color_ldf(g: Graph) -> Coloring:
    colors = [UNCOLORED] * g.n
    for v in degree_order(g):
        colors[v] = smallest_feasible_color(g, colors, v)
    return Coloring(tuple(colors), AlgorithmId.LDF)


def color_dblac(g: Graph) -> Coloring:
    """Degree-based greedy coloring with an eager common-neighbor pass.

    Vertices are visited in :func:`degree_order`. Each uncolored vertex ``v``
    gets its smallest feasible color. Then ``v``'s row is ANDed with the row of
    its highest-degree colored neighbor (the anchor), and the uncolored
    vertices in that intersection are colored right away, in the order their
    bits appear (ascending vertex index).

    Feasibility is checked per color class: color ``c`` fits ``v`` iff the AND
    of ``v``'s row with the class's vertex set is empty. This gives the same
    color as :func:`smallest_feasible_color` using word-level operations only.
    """
    rows = g.adj_bits
    deg = g.degrees
    colors = [UNCOLORED] * g.n
    classes: list[int] = []  # classes[c] is the bit set of vertices colored c
    colored = 0

    by_degree: dict[int, int] = {}
    for v, d in enumerate(deg):
        by_degree[d] = by_degree.get(d, 0) | 1 << v
    degree_buckets = [by_degree[d] for d in sorted(by_degree, reverse=True)]

    def assign(v: int) -> None:
        row = rows[v]
        for c, members in enumerate(classes):
            if not row & members:
                classes[c] = members | 1 << v
                colors[v] = c
                return
        colors[v] = len(classes)
        classes.append(1 << v)

    for v in degree_order(g):
        if colors[v] != UNCOLORED:
            continue
        assign(v)
        colored |= 1 << v

        colored_nbrs = rows[v] & colored
        if not colored_nbrs:
            continue
        for bucket in degree_buckets:
            hit = colored_nbrs & bucket
            if hit:
                anchor = (hit & -hit).bit_length() - 1
                break
        common = common_neighbors(g, v, anchor) & ~colored
        if not common:
            continue
        for w in iter_bits(common):
            assign(w)
        colored |= common
    return Coloring(tuple(colors), AlgorithmId.DBLAC)


def color_dsatur(g: Graph) -> Coloring:
    n = g.n
    deg = g.degrees
    colors = [UNCOLORED] * n
    neighbor_colors = [0] * n  # bit c set iff some colored neighbor has color c
    saturation = [0] * n
    remaining = list(range(n))
    while remaining:
        best = remaining[0]
        best_key = (saturation[best], deg[best])
        for v in remaining:
            key = (saturation[v], deg[v])
            # strict comparison keeps the lowest index among ties; remaining is sorted
            if key > best_key:
                best, best_key = v, key
        remaining.remove(best)
        mask = neighbor_colors[best]
        c = (~mask & (mask + 1)).bit_length() - 1
        colors[best] = c
        bit = 1 << c
        for w in g.adj_list[best]:
            if colors[w] == UNCOLORED and not neighbor_colors[w] & bit:
                neighbor_colors[w] |= bit
                saturation[w] += 1
    return Coloring(tuple(colors), AlgorithmId.DSATUR)


def color_rlf(g: Graph) -> Coloring:
    """Recursive Largest First.

    Each color class starts from the uncolored vertex of largest residual
    degree. Candidates (uncolored, not adjacent to the class) are then added
    one at a time, preferring the most neighbors among excluded vertices
    (uncolored and adjacent to the class), then the fewest neighbors among
    the remaining candidates.
    """
    rows = g.adj_bits
    uncolored = (1 << g.n) - 1
    classes: list[list[int]] = []
    while uncolored:
        seed = max(iter_bits(uncolored), key=lambda v: ((rows[v] & uncolored).bit_count(), -v))
        members = [seed]
        candidates = uncolored & ~rows[seed] & ~(1 << seed)
        excluded = uncolored & rows[seed]
        while candidates:
            best = -1
            best_key = None
            for u in iter_bits(candidates):
                row = rows[u]
                key = ((row & excluded).bit_count(), -(row & candidates).bit_count())
                if best_key is None or key > best_key:
                    best, best_key = u, key
            members.append(best)
            candidates &= ~(1 << best)
            excluded |= rows[best] & candidates
            candidates &= ~rows[best]
        classes.append(members)
        for v in members:
            uncolored &= ~(1 << v)
    return Coloring.from_classes(g.n, classes, AlgorithmId.RLF)


COLORERS: dict[AlgorithmId, Callable[[Graph], Coloring]] = {
    AlgorithmId.DBLAC: color_dblac,
    AlgorithmId.LDF: color_ldf,
    AlgorithmId.DSATUR: color_dsatur,
    AlgorithmId.RLF: color_rlf,
}


def run_algorithm(algorithm: AlgorithmId | str, g: Graph) -> Coloring:
    if isinstance(algorithm, str):
        algorithm = AlgorithmId.parse(algorithm)
    return COLORERS[algorithm](g)
