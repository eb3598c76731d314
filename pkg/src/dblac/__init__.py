"""Vertex coloring heuristics (DBLAC, LDF, DSATUR, RLF) with DIMACS I/O and benchmarks."""

from .algorithms import (
    color_dblac,
    color_dsatur,
    color_ldf,
    color_rlf,
    degree_order,
    run_algorithm,
    smallest_feasible_color,
)
from .coloring import AlgorithmId, Coloring
from .dimacs import parse_coloring, parse_dimacs, read_dimacs, write_coloring, write_dimacs
from .generate import gen_erdos_renyi
from .graph import Graph, GraphError, common_neighbors, from_edge_list, is_proper, iter_bits
from .oracle import exact_chromatic

__all__ = [
    "AlgorithmId",
    "Coloring",
    "Graph",
    "GraphError",
    "color_dblac",
    "color_dsatur",
    "color_ldf",
    "color_rlf",
    "common_neighbors",
    "degree_order",
    "exact_chromatic",
    "from_edge_list",
    "gen_erdos_renyi",
    "is_proper",
    "iter_bits",
    "parse_coloring",
    "parse_dimacs",
    "read_dimacs",
    "run_algorithm",
    "smallest_feasible_color",
    "write_coloring",
    "write_dimacs",
]
