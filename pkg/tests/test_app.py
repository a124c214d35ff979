import io
import json

import pytest

from src.app import main
from src.balance.coloring import is_3_balanced
from src.families.generators import hexagonal_prism, hexagonal_prism_coloring, k33, petersen
from src.graph.graph6 import emit_graph6, parse_graph6, read_graph6_file


@pytest.fixture(autouse=True)
def workdir(tmp_path, monkeypatch):
    """Log and output files land in a scratch directory."""
    monkeypatch.chdir(tmp_path)
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    lines = [json.loads(line) for line in capsys.readouterr().out.splitlines() if line.strip()]
    return code, lines


def test_family_petersen(capsys, workdir):
    code, [record] = run(capsys, "family", "petersen", "6", "1", "--out", "g.g6")
    assert code == 0
    assert record["n"] == 12 and record["verified"]
    assert read_graph6_file(workdir / "g.g6") == [parse_graph6(record["graph6"])]


def test_solve(capsys):
    code, [record] = run(capsys, "solve", emit_graph6(k33()))
    assert code == 0
    assert record["status"] == "found"
    assert is_3_balanced(k33(), record["coloring"])


def test_solve_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(emit_graph6(petersen()) + "\n"))
    code, [record] = run(capsys, "solve", "-")
    assert code == 0
    assert record["status"] == "none"


def test_solve_budget_exits_one(capsys):
    code, [record] = run(capsys, "solve", emit_graph6(hexagonal_prism()), "--budget", "1")
    assert code == 1
    assert record["status"] == "budget"


def test_solve_two_balanced(capsys):
    code, [record] = run(capsys, "solve", "--two", emit_graph6(k33()))
    assert code == 0 and record["status"] == "none"


def test_verify(capsys, workdir):
    g6 = emit_graph6(hexagonal_prism())
    code, [record] = run(capsys, "verify", g6, json.dumps(list(hexagonal_prism_coloring())))
    assert code == 0 and record["balanced"]
    assert record["stats"]["vertex_class_sizes"] == [4, 4, 4]

    path = workdir / "c.json"
    path.write_text(json.dumps([0] * 12), encoding="utf-8")
    code, [record] = run(capsys, "verify", g6, str(path))
    assert code == 1 and not record["balanced"]


def test_malformed_graph_exits_two(capsys):
    code, lines = run(capsys, "solve", "E ~o")
    assert code == 2
    assert lines == []


def test_circulant_verify(capsys):
    code, [record] = run(capsys, "circulant", "verify", "--family", "petersen", "--a", "1", "--j", "3")
    assert code == 0
    assert record["determinant"] == "27"
    assert record["m"] == 9
    assert record["solution_is_constant"]


def test_circulant_search(capsys):
    code, [record] = run(capsys, "circulant", "search", "petersen", "--rational-only")
    assert code == 0
    assert record["solutions"] == [[0, 10]]


def test_classify(capsys, workdir):
    code, lines = run(capsys, "classify", "--n", "6", "--out", "out/records.jsonl")
    assert code == 0
    assert [r["balanced"] for r in lines] == ["yes", "yes"]
    assert len((workdir / "out" / "records.jsonl").read_text(encoding="utf-8").splitlines()) == 2


def test_cubic_analyze(capsys):
    code, [record] = run(capsys, "cubic", "analyze", emit_graph6(hexagonal_prism()))
    assert code == 0
    assert record["status"] == "found"
    assert [len(m) for m in record["matchings"]] == [6, 6, 6]
    assert record["dataset"]["vertex_sets"]


def test_scan(capsys):
    code, lines = run(capsys, "scan", "mobius", "--range", "4", "12")
    assert code == 0
    assert [r["params"] for r in lines if r["solvable"]] == [[6], [12]]


def test_classify_default_sink_is_output_dir(capsys, workdir, quiet_settings):
    quiet_settings.app.output_dir = str(workdir / "records")
    code, _ = run(capsys, "classify", "--n", "6", "--out")
    assert code == 0
    lines = (workdir / "records" / "cubic6.jsonl").read_text(encoding="utf-8").splitlines()
    assert [json.loads(line)["balanced"] for line in lines] == ["yes", "yes"]
