from itertools import combinations

import networkx as nx
import pytest

from src.core.errors import Graph6Error, MalformedHeader, TruncatedPayload
from src.families.generators import pappus, petersen, tutte_8_cage
from src.graph.graph import from_edges
from src.graph.graph6 import emit_graph6, parse_graph6, read_graph6_file, write_graph6_file
from tests.conftest import random_graph


def nx_graph6(g) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()


def test_single_vertex():
    g = parse_graph6("@")
    assert g.n == 1 and g.edge_count == 0
    assert emit_graph6(g) == "@"


def test_known_string():
    g = parse_graph6("E?~o")
    assert g.n == 6
    assert set(g.edges()) == {(0, 4), (1, 4), (2, 4), (3, 4), (0, 5), (1, 5), (2, 5), (3, 5)}
    assert emit_graph6(g) == "E?~o"


def test_all_graphs_on_four_vertices_match_networkx():
    pairs = list(combinations(range(4), 2))
    for mask in range(1 << len(pairs)):
        g = from_edges(4, [p for i, p in enumerate(pairs) if mask >> i & 1])
        text = emit_graph6(g)
        assert text == nx_graph6(g)
        assert parse_graph6(text) == g


def test_larger_graphs_match_networkx(rng):
    for g in (petersen(), pappus(), tutte_8_cage(), random_graph(rng, 70, 0.1)):
        assert emit_graph6(g) == nx_graph6(g)
        assert parse_graph6(emit_graph6(g)) == g


def test_header_and_bytes_accepted():
    assert parse_graph6(b">>graph6<<E?~o\n") == parse_graph6("E?~o")


def test_malformed_input():
    with pytest.raises(MalformedHeader):
        parse_graph6("E ~o")
    with pytest.raises(MalformedHeader):
        parse_graph6("")
    with pytest.raises(TruncatedPayload):
        parse_graph6("E?~")
    with pytest.raises(Graph6Error):
        parse_graph6("E?~oo")


def test_file_round_trip(tmp_path):
    graphs = [petersen(), pappus(), parse_graph6("E?~o")]
    out = tmp_path / "corpus" / "graphs.g6"
    write_graph6_file(out, graphs, header=True)
    assert read_graph6_file(out) == graphs


def test_blank_lines_skipped(tmp_path):
    out = tmp_path / "graphs.g6"
    out.write_text("E?~o\n\n@\n", encoding="ascii")
    assert [g.n for g in read_graph6_file(out)] == [6, 1]
