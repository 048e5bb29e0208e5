"""Acceptance criteria 1-11, all exact over Q(q).

Each test prints one line ``criterion N: PASS|FAIL ...`` and then asserts.
"""

import json

import pytest

from periplectiq.cli import main as cli_main
from periplectiq.combinat import all_standard_tableaux, parse_tableau
from periplectiq.modtools import (
    DECOMPOSITIONS,
    contraction_reduction,
    decomposition_report,
    direct_sum_certificate,
    is_invariant,
    maximal_report,
)
from periplectiq.natrep import dj_labels, dj_matrix
from periplectiq.qbrauer import (
    explicit_y,
    place_brauer,
    thetas,
    xi_abstract,
    y_matrix,
    young_symmetrizer,
)
from periplectiq.qrat import ONE, QINV, Q
from periplectiq.relcheck import (
    check_centralizer_and_symmetrizers,
    check_classical,
    check_dictionary,
    check_divided_powers,
    check_dj_relations,
    check_exprel,
    check_bracket,
)
from periplectiq.superlinalg import matmul, scale
from periplectiq.tensorrep import TensorModule


@pytest.fixture
def verdict(capsys):
    def emit(number, ok, detail=""):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
        return ok

    return emit


def _failed(reports):
    return [c.case_id for r in reports for c in r.failures]


def _readings_resolved(reports):
    """Every two-reading line ends with exactly one surviving reading."""
    bad = []
    for r in reports:
        grouped = {}
        for c in r.cases:
            if c.group:
                grouped.setdefault(c.case_id, []).append(c.status)
        bad += [cid for cid, st in grouped.items() if len(st) != 1 or st[0] not in ("ambiguous", "pass")]
    return bad


SERRE_AND_FBAR = ("serre.", "Fbar.", "anti.Fbar", "comm.Fbar", "square.Fbar")


def test_criterion_1_presentation(verdict):
    reports = [check_dj_relations(n, k) for n in (2, 3) for k in (1, 2)]
    reports.append(check_dj_relations(3, 3, families=SERRE_AND_FBAR))
    failed, unresolved = _failed(reports), _readings_resolved(reports)
    cases = sum(len(r.cases) for r in reports)
    assert verdict(1, not failed and not unresolved, f"{cases} relation instances")
    assert not failed and not unresolved


def test_criterion_2_frt_relation(verdict):
    reports = [check_exprel(n, k) for n in (2, 3) for k in (1, 2)]
    failed = _failed(reports)
    assert verdict(2, not failed, f"{sum(len(r.cases) for r in reports)} index quadruples")
    assert not failed


def test_criterion_3_dictionary(verdict):
    reports = [check_dictionary(n, k) for n in (2, 3) for k in (1, 2, 3)]
    failed = _failed(reports)
    assert verdict(3, not failed)
    assert not failed


def test_criterion_4_centralizer(verdict):
    reports = [check_centralizer_and_symmetrizers(n, k) for n in (2, 3) for k in (2, 3)]
    wanted = ("commutes[t", "commutes[c", "hecke-quadratic", "braid")
    cases = [c for r in reports for c in r.cases if c.case_id.startswith(wanted)]
    failed = [c.case_id for c in cases if c.status != "pass"]
    assert verdict(4, cases and not failed, f"{len(cases)} checks")
    assert cases and not failed


def test_criterion_5_symmetrizers(verdict):
    bad = []
    for n in (2, 3):
        for k in (2, 3):
            for t in all_standard_tableaux(tuple(range(1, k + 1))):
                x, xi, _ = young_symmetrizer(t, n, k)
                if matmul(x, x) != scale(xi, x) or xi != xi_abstract(t, k):
                    bad.append(f"xi[{t}] n={n}")
            for name in DECOMPOSITIONS[k]:
                if y_matrix(parse_tableau(name), n, k) != explicit_y(name, n):
                    bad.append(f"explicit[{name}] n={n}")
    reports = [check_centralizer_and_symmetrizers(n, k) for n in (2, 3) for k in (2, 3)]
    bad += [c.case_id for r in reports for c in r.cases
            if c.case_id.startswith("quasi-symmetrizer") and c.status != "pass"]
    assert verdict(5, not bad)
    assert not bad


def test_criterion_6_maximal_vectors(verdict):
    expected = {(2, 2): 3, (3, 2): 3, (3, 3): 7}
    problems = []
    for (n, k), dim in expected.items():
        m = TensorModule(n, k)
        for i, v in thetas(n, k).items():
            if not all(g.apply(v).is_zero() for g in m.raising()):
                problems.append(f"theta{i} n={n} k={k} not maximal")
        rep = maximal_report(n, k)
        if rep["dimension"] != dim or not rep["candidates_span_kernel"]:
            problems.append(f"n={n} k={k}: kernel {rep['dimension']}, expected {dim}, "
                            f"missed {rep.get('uncovered_weights', [])}")
    verdict(6, not problems, "; ".join(problems))
    assert not problems


def test_criterion_7_decompositions(verdict):
    problems = []
    for n in (2, 3):
        for k in (2, 3):
            m = TensorModule(n, k)
            ys = {name: y_matrix(parse_tableau(name), n, k) for name in DECOMPOSITIONS[k]}
            cert = direct_sum_certificate(ys, m)
            if not all(is_invariant(s.basis, m) for s in cert["summands"].values()):
                problems.append(f"non-invariant image n={n} k={k}")
    for n in (2, 3):
        got = [s["verdict"] for s in decomposition_report(n, 2)["summands"]]
        if got != ["reducible indecomposable"] * 2:
            problems.append(f"k=2 n={n}: {got}")
    rep = decomposition_report(3, 3)
    got = [s["verdict"] for s in rep["summands"]]
    if got != ["reducible indecomposable", "split", "split", "reducible indecomposable"]:
        problems.append(f"k=3 verdicts {got}")
    if rep["summands"][2]["isomorphic_to"] != ["y_{12/3}V⊗3"]:
        problems.append("y_{13,2} not matched with y_{12,3}")
    c2 = place_brauer("c", 2, 3, 3)
    scalar = QINV * QINV / (Q * Q + ONE + QINV * QINV)
    if matmul(c2, matmul(y_matrix(parse_tableau("12/3"), 3, 3), c2)) != scale(scalar, c2):
        problems.append("c2 y c2 scalar")
    assert verdict(7, not problems, "; ".join(problems))


def test_criterion_8_not_completely_reducible(verdict):
    low = [decomposition_report(3, k)["summands"][0]["verdict"] for k in (2, 3)]
    rep = contraction_reduction(3, 4)
    ok = all(v == "reducible indecomposable" for v in low) and rep["not_completely_reducible"]
    assert verdict(8, ok, "k=4 at n=3: " + rep["argument"])


def test_criterion_9_classical_limit(verdict):
    problems = []
    for n in (2, 3):
        for g in dj_labels(n):
            dj_matrix(n, g).at_one()  # raises on a pole at q=1
        rep = check_classical(n)
        if not rep.passed:
            problems.append(f"n={n}: {_failed([rep])[:3]}")
        chosen = [note for note in rep.notes if note.startswith("F̄ identified as")]
        if chosen != ["F̄ identified as the 'specialized' q=1 matrix"]:
            problems.append(f"n={n}: identification {chosen}")
        if not check_bracket(n).passed:
            problems.append(f"bracket n={n}")
    assert verdict(9, not problems, "; ".join(problems))


def test_criterion_10_divided_powers(verdict):
    rep = check_divided_powers(2, 2, 3)
    assert verdict(10, rep.passed and bool(rep.cases), f"{len(rep.cases)} cases")


def test_criterion_11_negative_controls(verdict, capsys):
    silent = []
    for n, k in ((2, 2), (3, 2)):
        code = cli_main(["relations", "--n", str(n), "--k", str(k), "--mutate", "--format", "json"])
        out = capsys.readouterr().out
        silent += json.loads(out)["undetected_mutations"]
        assert code == 1
    for rep in (check_bracket(2, True), check_classical(3, True)):
        if not rep.failures:
            silent.append(rep.suite)
    assert verdict(11, not silent, f"undetected: {silent}" if silent else "")
