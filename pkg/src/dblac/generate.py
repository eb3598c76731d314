"""Seeded Erdos-Renyi G(n, p) graphs.

The generator is numpy's PCG64 bit generator seeded with the given 64-bit
value. One raw 64-bit output is drawn per vertex pair ``u < v``, pairs taken
in lexicographic order; the pair becomes an edge iff the top 53 bits, read as
a fraction in [0, 1), are below ``p``. Raw PCG64 output for a given seed is
fixed by the algorithm, so the graphs do not depend on platform or on numpy's
distribution code.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, GraphError

_UNIT = 2.0**-53


def gen_erdos_renyi(n: int, p: float, seed: int) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    if not 0 <= seed < 2**64:
        raise GraphError(f"seed must be an unsigned 64-bit value, got {seed}")
    rows, cols = np.triu_indices(n, k=1)
    raw = np.random.PCG64(seed).random_raw(len(rows))
    keep = (raw >> np.uint64(11)).astype(np.float64) * _UNIT < p
    adj = np.zeros((n, n), dtype=bool)
    adj[rows[keep], cols[keep]] = True
    adj |= adj.T
    return _from_matrix(adj)


def _from_matrix(adj: np.ndarray) -> Graph:
    n = adj.shape[0]
    packed = np.packbits(adj, axis=1, bitorder="little")
    adj_bits = tuple(int.from_bytes(row.tobytes(), "little") for row in packed)
    adj_list = tuple(tuple(np.flatnonzero(row).tolist()) for row in adj)
    degrees = tuple(len(nbrs) for nbrs in adj_list)
    return Graph(n, sum(degrees) // 2, adj_bits, adj_list, degrees)
