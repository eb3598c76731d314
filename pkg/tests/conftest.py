import itertools
import os
import warnings
from pathlib import Path

import pytest

from dblac import from_edge_list, gen_erdos_renyi, read_dimacs
from dblac.dimacs import EdgeCountWarning

DATA = Path(__file__).parent / "data"

# worked-example vertex names, in file order
PROBLEM1_NAMES = ["v1", "v2", "v3", "v4", "v5"]
PROBLEM2_NAMES = ["a", "b", "c", "d", "e", "f"]
PROBLEM3_NAMES = ["v1", "v2", "v3", "v4", "v5", "v6"]


def load(name):
    with warnings.catch_warnings():
        # queen5_5.col lists every edge twice, as the published file does
        warnings.simplefilter("ignore", EdgeCountWarning)
        return read_dimacs(DATA / name)


def dimacs_dir():
    return Path(os.environ.get("DBLAC_DIMACS_DIR", DATA.parent.parent / "data" / "dimacs"))


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def problem1():
    return load("problem1.col")


@pytest.fixture(scope="session")
def problem2():
    return load("problem2.col")


@pytest.fixture(scope="session")
def problem3():
    return load("problem3.col")


@pytest.fixture(scope="session")
def myciel3():
    return load("myciel3.col")


@pytest.fixture(scope="session")
def queen5_5():
    return load("queen5_5.col")


def complete(r):
    return from_edge_list(r, itertools.combinations(range(r), 2))


def cycle(r):
    return from_edge_list(r, [(i, (i + 1) % r) for i in range(r)])


def corpus():
    """Seeded random graphs: 4 densities x 52 seeds, n between 1 and 64."""
    graphs = []
    for p in (0.1, 0.3, 0.5, 0.8):
        for seed in range(52):
            n = 1 + (seed * 37 + int(p * 100)) % 64
            graphs.append(gen_erdos_renyi(n, p, 1000 * int(p * 10) + seed))
    return graphs


CORPUS = corpus()
