import random

import networkx as nx
import pytest

from src.balance.coloring import is_3_balanced, order_precheck, stats
from src.balance.solver import SolveStatus, brute_force_3_balanced, solve_2_balanced, solve_3_balanced
from src.core.errors import SizeLimitExceeded
from src.families.generators import (
    PetersenParams,
    complete_bipartite,
    cycle,
    gen_petersen,
    glued_prisms,
    hexagonal_prism,
    k33,
    petersen,
    tietze,
    triangular_prism,
    tutte_8_cage,
)
from src.graph.graph import from_edges
from tests.conftest import random_graph


def from_nx(h):
    return from_edges(h.number_of_nodes(), h.edges())


def check_stats(g, c):
    s = stats(g, c)
    m = g.edge_count
    for i in range(3):
        for j in range(3):
            assert s.e(i, j) == (2 * m // 9 if i != j else m // 9)
    if g.regularity():
        assert s.vertex_class_sizes == (g.n // 3,) * 3


@pytest.mark.parametrize("g", [k33(), triangular_prism(), hexagonal_prism(), glued_prisms()])
def test_solvable_examples(g):
    result = solve_3_balanced(g)
    assert result.status is SolveStatus.FOUND
    assert is_3_balanced(g, result.coloring)
    check_stats(g, result.coloring)


@pytest.mark.parametrize("g", [petersen(), tietze(), tutte_8_cage()])
def test_unsolvable_examples(g):
    assert solve_3_balanced(g).status is SolveStatus.NONE


@pytest.mark.slow
def test_g_24_6_is_not_balanced():
    assert solve_3_balanced(gen_petersen(PetersenParams(24, 6))).status is SolveStatus.NONE


def test_reversed_color_order_agrees():
    for g in (hexagonal_prism(), petersen()):
        forward = solve_3_balanced(g)
        backward = solve_3_balanced(g, color_order=(2, 1, 0))
        assert forward.status is backward.status


def test_budget_is_reported():
    result = solve_3_balanced(hexagonal_prism(), budget=1)
    assert result.status is SolveStatus.BUDGET
    assert result.coloring is None


def test_brute_force_limit():
    with pytest.raises(SizeLimitExceeded):
        brute_force_3_balanced(cycle(13))


def check_against_brute_force(g):
    result = solve_3_balanced(g)
    oracle = brute_force_3_balanced(g)
    assert result.found == (oracle is not None)
    if result.found:
        check_stats(g, result.coloring)
    if not order_precheck(g):
        assert not result.found


def test_agrees_with_brute_force(rng):
    graphs = [random_graph(rng, rng.randint(1, 9), rng.choice([0.3, 0.5, 0.7])) for _ in range(60)]
    for d, n in ((3, 4), (3, 6), (3, 8), (6, 9), (6, 9)):
        graphs.append(from_nx(nx.random_regular_graph(d, n, seed=rng.randint(0, 10_000))))
    graphs += [k33(), triangular_prism()]
    for g in graphs:
        check_against_brute_force(g)


@pytest.mark.slow
def test_agrees_with_brute_force_on_500_graphs():
    rng = random.Random(500)
    for _ in range(500):
        check_against_brute_force(random_graph(rng, rng.randint(1, 9), rng.choice([0.2, 0.4, 0.6, 0.8])))


def test_color_order_comes_from_settings(quiet_settings):
    g = hexagonal_prism()
    quiet_settings.solver.color_order = [2, 1, 0]
    assert solve_3_balanced(g).coloring == solve_3_balanced(g, color_order=(2, 1, 0)).coloring
    quiet_settings.solver.color_order = [0, 0, 1]
    with pytest.raises(ValueError):
        solve_3_balanced(g)


def test_components_decide_independently():
    assert solve_3_balanced(triangular_prism().disjoint_union(k33())).found
    assert not solve_3_balanced(triangular_prism().disjoint_union(petersen())).found


def test_two_balanced_examples():
    c4 = solve_2_balanced(cycle(4))
    assert c4.found
    assert solve_2_balanced(k33()).status is SolveStatus.NONE
    k44 = solve_2_balanced(complete_bipartite(4, 4))
    assert k44.found
    assert sum(k44.coloring) == 0
