"""Immutable simple undirected graphs with bit-row and sorted-list adjacency."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


class GraphError(ValueError):
    """Raised when a graph cannot be built or queried as requested."""


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_of(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


@dataclass(frozen=True, eq=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Both representations are kept: ``adj_bits[u]`` is a Python int whose bit
    ``v`` is set iff ``{u, v}`` is an edge, and ``adj_list[u]`` lists the same
    neighbors in ascending order. Build instances with :func:`from_edge_list`,
    the DIMACS reader or the random generator rather than directly.
    """

    n: int
    m: int
    adj_bits: tuple[int, ...]
    adj_list: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, lexicographically."""
        for u, nbrs in enumerate(self.adj_list):
            for v in nbrs:
                if v > u:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_bits[u] >> v & 1)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _from_neighbor_lists(lists: Sequence[Sequence[int]]) -> Graph:
    # lists must already be symmetric, loop-free, sorted and duplicate-free
    n = len(lists)
    adj_list = tuple(tuple(nbrs) for nbrs in lists)
    degrees = tuple(len(nbrs) for nbrs in adj_list)
    adj_bits = tuple(bits_of(nbrs) for nbrs in adj_list)
    return Graph(n, sum(degrees) // 2, adj_bits, adj_list, degrees)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from ``(u, v)`` pairs on 0-indexed vertices.

    Duplicate edges and both orientations collapse to a single edge and
    self-loops are dropped.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    neighbors: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            continue
        neighbors[u].add(v)
        neighbors[v].add(u)
    return _from_neighbor_lists([sorted(s) for s in neighbors])


def from_bit_rows(rows: Sequence[int]) -> Graph:
    """Build a graph from symmetric, loop-free adjacency bit rows."""
    n = len(rows)
    for u, row in enumerate(rows):
        if row >> n or row >> u & 1:
            raise GraphError(f"row {u} has bits outside 0..{n - 1} or a self-loop")
    lists = [list(iter_bits(row)) for row in rows]
    for u, nbrs in enumerate(lists):
        for v in nbrs:
            if not rows[v] >> u & 1:
                raise GraphError(f"adjacency is not symmetric at ({u}, {v})")
    return _from_neighbor_lists(lists)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")


def common_neighbors(g: Graph, u: int, v: int) -> int:
    """Return the bit set of vertices adjacent to both ``u`` and ``v``.

    This is a single AND of the two adjacency rows.
    """
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphError(f"common_neighbors needs two distinct vertices, got {u} twice")
    return g.adj_bits[u] & g.adj_bits[v]


class Verdict(NamedTuple):
    proper: bool
    witness: tuple[int, int] | None = None


def is_proper(g: Graph, assignment: Sequence[int]) -> Verdict:
    """Check that no edge joins two vertices of the same color.

    ``assignment`` may be a :class:`~dblac.coloring.Coloring` or any sequence
    of per-vertex colors. On failure the lexicographically first
    monochromatic edge is returned as the witness.
    """
    colors = getattr(assignment, "assignment", assignment)
    if len(colors) != g.n:
        raise GraphError(f"coloring has {len(colors)} entries for a graph on {g.n} vertices")
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return Verdict(False, (u, v))
    return Verdict(True)
