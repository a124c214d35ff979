import networkx as nx
import pytest

from src.core.errors import DuplicateEdge, LoopEdge, VertexOutOfRange
from src.families.generators import heawood, k33, path, triangular_prism
from src.graph.graph import (
    bfs_order,
    bridges,
    connected_components,
    edge_id,
    from_edges,
    from_lcf,
    is_connected,
)
from tests.conftest import random_graph


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_triangle():
    g = from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert g.degrees() == [2, 2, 2]
    assert g.edge_count == 3
    assert g.regularity() == 2
    assert g.has_edge(2, 0) and g.has_edge(0, 2)


def test_k33_is_cubic():
    g = k33()
    assert g.n == 6
    assert g.is_cubic()
    assert g.edge_count == 9


def test_bad_edges_rejected():
    with pytest.raises(LoopEdge):
        from_edges(2, [(0, 0)])
    with pytest.raises(DuplicateEdge):
        from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(VertexOutOfRange):
        from_edges(3, [(0, 3)])


def test_adjacency_is_symmetric(rng):
    g = random_graph(rng, 15, 0.3)
    for v in range(g.n):
        for w in g.neighbors(v):
            assert v in g.neighbors(w)
            assert g.mask(v) >> w & 1
    assert sum(g.degrees()) == 2 * g.edge_count


def test_edge_id_orders_endpoints():
    assert edge_id(5, 2) == (2, 5)
    assert edge_id(2, 5) == (2, 5)


def test_regularity_of_irregular_and_empty():
    assert path(3).regularity() is None
    assert from_edges(4, []).regularity() == 0
    assert not from_edges(4, []).is_cubic()


def test_relabel_and_induced():
    g = path(4)
    h = g.relabel([3, 2, 1, 0])
    assert set(h.edges()) == {(2, 3), (1, 2), (0, 1)}
    sub = triangular_prism().induced([0, 1, 2])
    assert sub.edge_count == 3


def test_bridges_examples():
    assert bridges(path(3)) == {(0, 1), (1, 2)}
    assert bridges(from_edges(5, [(i, (i + 1) % 5) for i in range(5)])) == set()
    two_triangles = from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    assert bridges(two_triangles) == {(2, 3)}


def test_bridges_match_edge_removal(rng):
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 12), 0.25)
        base = len(connected_components(g))
        expected = {e for e in g.edges() if len(connected_components(g.without_edge(e))) > base}
        assert bridges(g) == expected


def test_bridges_agree_with_networkx(rng):
    for _ in range(20):
        g = random_graph(rng, 14, 0.2)
        assert bridges(g) == {edge_id(u, v) for u, v in nx.bridges(to_nx(g))}


def test_components():
    assert connected_components(from_edges(3, [])) == [[0], [1], [2]]
    assert len(connected_components(from_edges(5, [(i, (i + 1) % 5) for i in range(5)]))) == 1
    union = triangular_prism().disjoint_union(k33())
    assert connected_components(union) == [list(range(6)), list(range(6, 12))]
    assert not is_connected(union)


def test_bfs_order_visits_everything():
    union = triangular_prism().disjoint_union(k33())
    order = bfs_order(union, 7)
    assert order[0] == 7
    assert sorted(order) == list(range(12))


def test_heawood_from_lcf():
    g = heawood()
    assert g.n == 14 and g.is_cubic()
    assert nx.is_bipartite(to_nx(g))
    assert nx.girth(to_nx(g)) == 6


def test_lcf_matches_networkx():
    g = from_lcf(14, [5, -5], 7)
    assert nx.is_isomorphic(to_nx(g), nx.LCF_graph(14, [5, -5], 7))
