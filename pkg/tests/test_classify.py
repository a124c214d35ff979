from itertools import combinations

import networkx as nx
import pytest

from src.classify.corpus import classify_corpus, classify_graph, load_corpus, summarize
from src.classify.enumerate import enumerate_cubic
from src.classify.scan import family_scan
from src.core.errors import BadN, BadParams, CrossCheckFailed
from src.families.generators import hexagonal_prism, k33, k4, petersen, tietze, triangular_prism
from src.graph.canonical import canonical_form, is_isomorphic
from src.graph.graph6 import parse_graph6, write_graph6_file


def cubic_classes_by_brute_force(n: int) -> int:
    """Isomorphism classes of connected cubic graphs with vertex 0 adjacent to 1, 2, 3."""
    fixed = [(0, 1), (0, 2), (0, 3)]
    rest = [(u, v) for u, v in combinations(range(1, n), 2)]
    classes = []
    for extra in combinations(rest, 3 * n // 2 - 3):
        h = nx.Graph(fixed + list(extra))
        h.add_nodes_from(range(n))
        if any(d != 3 for _, d in h.degree()) or not nx.is_connected(h):
            continue
        if not any(nx.is_isomorphic(h, k) for k in classes):
            classes.append(h)
    return len(classes)


@pytest.mark.parametrize("n,count", [(4, 1), (6, 2), (8, 5)])
def test_enumeration_counts(n, count):
    graphs = list(enumerate_cubic(n))
    assert len(graphs) == count
    assert all(g.is_cubic() and g.n == n for g in graphs)
    assert len({canonical_form(g) for g in graphs}) == count


@pytest.mark.slow
@pytest.mark.parametrize("n,count", [(10, 19), (12, 85)])
def test_enumeration_counts_larger(n, count):
    assert len(list(enumerate_cubic(n))) == count


def test_small_enumerations_are_known_graphs():
    [g4] = enumerate_cubic(4)
    assert is_isomorphic(g4, k4())
    six = list(enumerate_cubic(6))
    assert sum(is_isomorphic(g, k33()) for g in six) == 1
    assert sum(is_isomorphic(g, triangular_prism()) for g in six) == 1


def test_strategies_agree():
    for n in (8, 10):
        first = {canonical_form(g) for g in enumerate_cubic(n, "first-open")}
        assert first == {canonical_form(g) for g in enumerate_cubic(n, "max-degree")}


@pytest.mark.slow
def test_enumeration_matches_networkx_oracle():
    assert cubic_classes_by_brute_force(8) == len(list(enumerate_cubic(8)))


def test_enumeration_rejects_bad_n():
    for n in (5, 16, 2):
        with pytest.raises(BadN):
            list(enumerate_cubic(n))
    with pytest.raises(ValueError):
        list(enumerate_cubic(8, "random"))


def test_enumeration_limit_comes_from_settings(quiet_settings):
    quiet_settings.classify.max_order = 8
    assert len(list(enumerate_cubic(8))) == 5
    with pytest.raises(BadN):
        list(enumerate_cubic(10))


def test_corpus_of_six_vertices():
    records, summary = classify_corpus(load_corpus(6))
    assert summary.total == 2 and summary.balanced == 2
    assert all(r.confirmed and r.witness is not None for r in records)


def test_classify_petersen():
    record = classify_graph(petersen())
    assert record.balanced == "no"
    assert record.precheck is not None
    assert record.tait is False
    assert record.confirmed


def test_classify_prism_keeps_witness():
    record = classify_graph(hexagonal_prism())
    assert record.balanced == "yes"
    assert record.precheck is None
    assert len(record.witness) == 12
    assert parse_graph6(record.graph6) == hexagonal_prism()


def test_budget_records_are_counted():
    record = classify_graph(hexagonal_prism(), budget=1)
    assert record.balanced == "budget"
    summary = summarize([record])
    assert summary.budget == 1 and summary.unbalanced == 0


@pytest.mark.slow
def test_corpus_of_twelve_vertices():
    records, summary = classify_corpus(load_corpus(12))
    assert summary.total == 85
    assert summary.balanced == 17
    assert summary.unbalanced == 68
    assert summary.unexplained == 0
    assert summary.only_non_tait == 1
    assert all(r.confirmed for r in records)
    [lonely] = [r for r in records if r.explanations == ["non-tait"]]
    assert is_isomorphic(parse_graph6(lonely.graph6), tietze())


def test_load_corpus_from_file(tmp_path):
    path = tmp_path / "corpus.g6"
    write_graph6_file(path, [k33(), petersen()], header=True)
    graphs = load_corpus(path=path)
    assert graphs == [k33(), petersen()]
    records, summary = classify_corpus(graphs)
    assert summary.balanced == 1 and summary.unbalanced == 1
    with pytest.raises(ValueError):
        load_corpus()


def test_mobius_scan():
    rows = family_scan("mobius", 4, 12)
    assert [r.params for r in rows] == [[4], [6], [8], [10], [12]]
    assert [r.solvable for r in rows] == [False, True, False, False, True]
    assert all(r.agree for r in rows)


def test_small_petersen_scan():
    rows = family_scan("petersen", 3, 9)
    assert all(r.agree for r in rows)
    assert [r.params for r in rows if r.solvable] == [[3, 1], [6, 1], [6, 2], [9, 1], [9, 2], [9, 4]]


def test_scan_budget_is_a_disagreement():
    rows = family_scan("mobius", 6, 6, budget=1, strict=False)
    assert rows[0].status == "budget" and not rows[0].agree
    with pytest.raises(CrossCheckFailed):
        family_scan("mobius", 6, 6, budget=1)


def test_scan_rejects_unknown_family():
    with pytest.raises(BadParams):
        family_scan("heawood")


@pytest.mark.slow
@pytest.mark.parametrize("family", ["petersen", "pappus", "mobius"])
def test_full_family_scans(family):
    rows = family_scan(family)
    assert rows and all(r.agree for r in rows)
