import json

import pytest

from periplectiq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv", [
    ("relations", "--n", "1"),
    ("relations", "--n", "5"),
    ("relations", "--k", "0"),
    ("relations", "--n", "3", "--k", "4"),
    ("bogus",),
    ("maximal", "--pattern", "1-"),
    ("decompose", "--k", "1"),
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_relations_pass(capsys):
    code, out, err = run(capsys, "relations", "--n", "2", "--k", "2", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["failures"] == 0 and {s["suite"] for s in rep["suites"]} >= {"frt", "centralizer"}
    assert json.loads(err.strip().splitlines()[-1])["backend"] in ("cython", "python")


def test_mutate_exits_one_and_is_caught(capsys):
    code, out, _ = run(capsys, "relations", "--n", "2", "--k", "2", "--mutate", "--format", "json")
    rep = json.loads(out)
    assert code == 1 and rep["undetected_mutations"] == []


def test_json_is_byte_stable(capsys):
    first = run(capsys, "relations", "--n", "2", "--k", "1", "--format", "json")[1]
    second = run(capsys, "relations", "--n", "2", "--k", "1", "--format", "json")[1]
    assert first == second


def test_out_file(tmp_path, capsys):
    path = tmp_path / "char.json"
    code, out, _ = run(capsys, "character", "--n", "2", "--k", "2", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    rep = json.loads(path.read_text(encoding="utf-8"))
    assert rep["dimension"] == 16
    assert sum(w["multiplicity"] for w in rep["weights"]) == 16


def test_text_format(capsys):
    code, out, _ = run(capsys, "relations", "--n", "2", "--k", "1")
    assert code == 0 and "pass" in out and not out.lstrip().startswith("{")


def test_maximal_exit_codes(capsys):
    assert run(capsys, "maximal", "--n", "3", "--k", "2")[0] == 0
    # equal rank and power: an extra maximal line the candidates miss
    assert run(capsys, "maximal", "--n", "2", "--k", "2")[0] == 1


def test_maximal_single_candidate(capsys):
    code, out, _ = run(capsys, "maximal", "--n", "3", "--k", "2", "--pattern", "1-2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["annihilated"] and rep["vector"]


def test_decompose_quadratic(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "2", "--k", "2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["total"] == 16


def test_decompose_four(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "2", "--k", "4", "--format", "json")
    assert code == 0 and json.loads(out)["not_completely_reducible"]
