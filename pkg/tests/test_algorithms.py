import pytest

from dblac import (
    AlgorithmId,
    color_dblac,
    color_dsatur,
    color_ldf,
    color_rlf,
    degree_order,
    exact_chromatic,
    from_edge_list,
    is_proper,
    parse_dimacs,
    run_algorithm,
    smallest_feasible_color,
    write_dimacs,
)

from conftest import CORPUS, complete, cycle

ALL = list(AlgorithmId)


# Plain reference versions, written from the rule statements with sets and
# lists only. They serve as oracles for the bit-set implementations.

def first_free(used):
    c = 0
    while c in used:
        c += 1
    return c


def reference_dblac(g):
    colors = {}
    order = sorted(range(g.n), key=lambda v: (-len(g.adj_list[v]), v))
    for v in order:
        if v in colors:
            continue
        colors[v] = first_free({colors[w] for w in g.adj_list[v] if w in colors})
        colored_nbrs = [w for w in g.adj_list[v] if w in colors]
        if not colored_nbrs:
            continue
        anchor = min(colored_nbrs, key=lambda w: (-len(g.adj_list[w]), w))
        common = sorted(set(g.adj_list[v]) & set(g.adj_list[anchor]))
        for w in common:
            if w not in colors:
                colors[w] = first_free({colors[x] for x in g.adj_list[w] if x in colors})
    return [colors[v] for v in range(g.n)]


def reference_dsatur(g):
    colors = {}
    while len(colors) < g.n:
        def key(v):
            sat = len({colors[w] for w in g.adj_list[v] if w in colors})
            return (sat, len(g.adj_list[v]), -v)
        v = max((v for v in range(g.n) if v not in colors), key=key)
        colors[v] = first_free({colors[w] for w in g.adj_list[v] if w in colors})
    return [colors[v] for v in range(g.n)]


def reference_rlf(g):
    nbrs = [set(a) for a in g.adj_list]
    uncolored = set(range(g.n))
    colors = {}
    k = 0
    while uncolored:
        seed = max(uncolored, key=lambda v: (len(nbrs[v] & uncolored), -v))
        members = {seed}
        candidates = uncolored - nbrs[seed] - {seed}
        excluded = uncolored & nbrs[seed]
        while candidates:
            u = max(candidates, key=lambda x: (len(nbrs[x] & excluded), -len(nbrs[x] & candidates), -x))
            members.add(u)
            candidates.discard(u)
            excluded |= nbrs[u] & candidates
            candidates -= nbrs[u]
        for v in members:
            colors[v] = k
        k += 1
        uncolored -= members
    return [colors[v] for v in range(g.n)]


def test_degree_order_problem1(problem1):
    assert degree_order(problem1) == [1, 2, 0, 3, 4]


def test_degree_order_trivial():
    assert degree_order(complete(4)) == [0, 1, 2, 3]
    assert degree_order(from_edge_list(3, [])) == [0, 1, 2]


def test_degree_order_is_nonincreasing_permutation():
    for g in CORPUS[::3]:
        order = degree_order(g)
        assert sorted(order) == list(range(g.n))
        degs = [g.degrees[v] for v in order]
        assert degs == sorted(degs, reverse=True)


def test_smallest_feasible_color():
    star = from_edge_list(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    assert smallest_feasible_color(star, [-1] * 5, 0) == 0
    assert smallest_feasible_color(star, [-1, 0, 1, 3, -1], 0) == 2
    assert smallest_feasible_color(complete(4), [0, 1, 2, -1], 3) == 3


def test_ldf_examples(problem2):
    assert color_ldf(from_edge_list(4, [])).k == 1
    for r in range(1, 9):
        assert color_ldf(complete(r)).k == r
    c = color_ldf(problem2)
    assert is_proper(problem2, c).proper
    assert c.k == 4


def test_dsatur_examples(myciel3):
    for r in range(2, 8):
        assert color_dsatur(cycle(2 * r)).k == 2
    assert color_dsatur(myciel3).k == 4
    assert color_dsatur(complete(6)).k == 6


def test_rlf_examples(queen5_5):
    assert color_rlf(queen5_5).k == 5
    c = color_rlf(from_edge_list(5, []))
    assert c.assignment == (0,) * 5
    assert sorted(color_rlf(complete(5)).assignment) == [0, 1, 2, 3, 4]


def test_dblac_examples(myciel3, problem1):
    assert color_dblac(myciel3).k == 4
    c = color_dblac(problem1)
    assert is_proper(problem1, c).proper
    assert 3 <= c.k <= 4
    assert color_dblac(from_edge_list(6, [])).k == 1


def test_dblac_problem1_trace(problem1):
    # v2 -> 0; v3 -> 1, anchor v2, common {v1} -> 2; v4 -> 1; v5 -> 0
    assert color_dblac(problem1).assignment == (2, 0, 1, 1, 0)


def test_run_algorithm_examples(problem2):
    assert run_algorithm(AlgorithmId.DSATUR, complete(3)).k == 3
    c = run_algorithm("dblac", problem2)
    assert is_proper(problem2, c).proper and 4 <= c.k <= 6
    assert run_algorithm(AlgorithmId.RLF, from_edge_list(5, [])).k == 1
    assert c.algorithm is AlgorithmId.DBLAC


@pytest.mark.parametrize("name", ["dblac", "DBLAC", "Ldf", "dsatur", "rlf"])
def test_algorithm_names_round_trip(name):
    algo = AlgorithmId.parse(name)
    assert AlgorithmId.parse(algo.value.lower()) is algo


def test_bad_algorithm_name():
    with pytest.raises(ValueError, match="dblac, ldf, dsatur, rlf"):
        AlgorithmId.parse("bogus")


@pytest.mark.parametrize(
    "fast, reference",
    [(color_dblac, reference_dblac), (color_dsatur, reference_dsatur), (color_rlf, reference_rlf)],
)
def test_matches_reference(fast, reference):
    for g in CORPUS[::2]:
        assert list(fast(g).assignment) == reference(g)


@pytest.mark.parametrize("algo", ALL)
def test_proper_and_bounded_on_corpus(algo):
    assert len(CORPUS) >= 200
    for g in CORPUS:
        c = run_algorithm(algo, g)
        assert is_proper(g, c).proper
        assert c.k <= g.max_degree + 1
        assert len(c) == g.n
        if g.n <= 12:
            assert c.k >= exact_chromatic(g)


@pytest.mark.parametrize("algo", ALL)
def test_deterministic(algo):
    for g in CORPUS[::9]:
        first = run_algorithm(algo, g)
        assert run_algorithm(algo, g).assignment == first.assignment
        again = parse_dimacs(write_dimacs(g))
        assert run_algorithm(algo, again).assignment == first.assignment


def test_dblac_colors_every_vertex_once():
    for g in CORPUS:
        c = color_dblac(g)
        assert sorted(range(g.n)) == [v for v in range(g.n) if c[v] >= 0]
        assert set(c.assignment) == set(range(c.k))


def is_connected_bipartite(g):
    if g.n == 0:
        return False
    side = {0: 0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adj_list[u]:
            if w not in side:
                side[w] = 1 - side[u]
                stack.append(w)
            elif side[w] == side[u]:
                return False
    return len(side) == g.n


def test_dsatur_exact_on_bipartite():
    graphs = [g for g in CORPUS if g.m and is_connected_bipartite(g)]
    # grids and even cycles guarantee the check is not vacuous
    grid = from_edge_list(12, [(i, i + 1) for i in range(12) if i % 4 != 3] + [(i, i + 4) for i in range(8)])
    graphs += [grid, cycle(10), from_edge_list(6, [(u, v) for u in range(3) for v in range(3, 6)])]
    for g in graphs:
        assert color_dsatur(g).k == 2


@pytest.mark.parametrize("algo", ALL)
def test_exact_on_cliques_and_cycles(algo):
    for r in range(1, 9):
        assert run_algorithm(algo, complete(r)).k == r
    for r in range(3, 13):
        assert run_algorithm(algo, cycle(r)).k == (2 if r % 2 == 0 else 3)
