import pytest

from periplectiq.relcheck import (
    DJ_RELATIONS,
    Evaluator,
    R,
    check_centralizer_and_symmetrizers,
    check_classical,
    check_dictionary,
    check_divided_powers,
    check_dj_relations,
    check_exprel,
    check_generator_formulas,
    check_lemma_alg,
    check_bracket,
    index_eval,
    run_relations,
)

SUITES = {
    "frt": lambda n, k, mut: check_exprel(n, k, mut),
    "dictionary": lambda n, k, mut: check_dictionary(n, k, mut),
    "dj": lambda n, k, mut: check_dj_relations(n, k, mut),
    "lemma": lambda n, k, mut: check_lemma_alg(n, k, mut),
    "generators": lambda n, k, mut: check_generator_formulas(n, k, mut),
    "divided": lambda n, k, mut: check_divided_powers(n, k, 3, mut),
    "centralizer": lambda n, k, mut: check_centralizer_and_symmetrizers(n, k, mut),
}


def test_index_arithmetic():
    assert index_eval("i+1", {"i": 2}) == 3
    assert index_eval("abs(j) > i+1", {"i": 1, "j": -3}) == 1


@pytest.mark.parametrize("expr", ["__import__('os')", "i.real", "[i]", "max(i, 1)", "i ** 2"])
def test_index_arithmetic_rejects(expr):
    with pytest.raises((ValueError, SyntaxError)):
        index_eval(expr, {"i": 1})


def test_instances_respect_where():
    rel = R("x", [("1", "e{i}")], domain=(("i", "I"), ("j", "J")), where="abs(i-j) > 1")
    assert [tuple(e.values()) for e in rel.instances(3)] == [(1, 3)]


def test_relation_ids_unique():
    keys = [(r.id, r.reading) for r in DJ_RELATIONS]
    assert len(keys) == len(set(keys))


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes(name):
    rep = SUITES[name](2, 2, False)
    assert rep.cases and rep.passed, [c.case_id for c in rep.failures][:5]


@pytest.mark.parametrize("name", sorted(SUITES))
def test_mutation_is_detected(name):
    assert SUITES[name](2, 2, True).failures


def test_classical_limit_and_bracket():
    assert check_classical(2).passed
    assert check_bracket(2).passed
    assert check_classical(2, mutate=True).failures
    assert check_bracket(2, mutate=True).failures


def test_serre_reading_selection():
    notes = check_dj_relations(4, 2).notes
    assert "serre.e-right[i=1]: holds only in the 'index-consistent' reading" in notes


@pytest.mark.parametrize("check,base,reading", [
    (check_lemma_alg, "derived.fe[i=1]", "squared"),
    (check_divided_powers, "divided.b[i=1,m=2]", "fitted"),
    (check_generator_formulas, "tstep.barred.t[-1,3]", "barred-row"),
])
def test_ambiguous_lines_resolve_to_one_reading(check, base, reading):
    rep = check(3, 2)
    assert f"{base}: holds only in the '{reading}' reading" in rep.notes
    assert {c.status for c in rep.cases if c.case_id == base} == {"ambiguous"}


def test_single_reading_without_group_is_plain():
    ev = Evaluator(2, 2)
    rel = R("kk", [("1", "K{i} K{i}^-1"), ("-1", "")])
    rep = run_relations([rel], ev, "t")
    assert [c.status for c in rep.cases] == ["pass"] and not rep.notes


def test_evaluator_rejects_unknown_factor():
    with pytest.raises(ValueError):
        Evaluator(2, 1).factor("zz{1}", {})
