import pytest

from periplectiq.combinat import parse_tableau
from periplectiq.modtools import (
    CertificateFailure,
    Submodule,
    contraction_reduction,
    decomposition_report,
    direct_sum_certificate,
    full_module,
    generated_submodule,
    is_invariant,
    maximal_report,
    maximal_vectors,
)
from periplectiq.qbrauer import place_brauer, thetas, y_matrix
from periplectiq.superlinalg import SuperMatrix
from periplectiq.tensorrep import format_weight


def test_full_module_is_invariant(module):
    m = module(2, 2)
    full = full_module(m)
    assert full.dim == 16 and is_invariant(full.basis, m)


def test_contraction_image_is_a_line_of_weight_zero(module):
    m = module(2, 2)
    s = Submodule.image(place_brauer("c", 1, 2, 2), m, "c")
    assert s.dim == 1
    assert [(format_weight(w), len(b)) for w, b in maximal_vectors(s)] == [("0", 1)]


def test_cyclic_submodule_of_theta(module):
    m = module(2, 2)
    s = generated_submodule([thetas(2, 2)[1]], m)
    assert is_invariant(s.basis, m) and 0 < s.dim < m.dim


def test_certificate_rejects_overlap(module):
    m = module(2, 2)
    ident = SuperMatrix.identity(16)
    with pytest.raises(CertificateFailure):
        direct_sum_certificate({"a": ident, "b": ident}, m)


def test_certificate_rejects_short_sum(module):
    m = module(2, 2)
    y = y_matrix(parse_tableau("12"), 2, 2)
    with pytest.raises(CertificateFailure):
        direct_sum_certificate({"sym": y}, m)


@pytest.mark.parametrize("n", [2, 3])
def test_quadratic_decomposition(n):
    rep = decomposition_report(n, 2)
    assert rep["total"] == (2 * n) ** 2
    assert "Σ y_T = id" in rep["identities"]
    assert [s["verdict"] for s in rep["summands"]] == ["reducible indecomposable"] * 2


def test_cubic_decomposition_small_rank():
    rep = decomposition_report(2, 3)
    assert rep["total"] == 64
    assert len(rep["identities"]) == 13
    verdicts = [s["verdict"] for s in rep["summands"]]
    assert verdicts[0] == verdicts[3] == "reducible indecomposable"
    # the middle pair is left open below the rank-3 range, but the two copies match
    assert rep["summands"][2]["isomorphic_to"] == ["y_{12/3}V⊗3"]


def test_contraction_reduction_rank_two():
    rep = contraction_reduction(2, 4)
    assert len(rep["contraction_images"]) == 6
    for img in rep["contraction_images"]:
        assert img["rank"] == img["expected_rank"] == 16
        assert img["embedding_intertwines"] and img["image_equals_embedding"]
    assert rep["not_completely_reducible"]
    assert all(t["maximal_profile_matches"] for t in rep["transported"])


def test_reduction_needs_k4():
    with pytest.raises(ValueError):
        contraction_reduction(2, 3)


@pytest.mark.parametrize("n,k", [(3, 2), (4, 2)])
def test_candidates_span_kernel_when_rank_exceeds_power(n, k):
    rep = maximal_report(n, k)
    assert rep["candidates_span_kernel"] and rep["all_candidates_maximal"]


# recorded values of the exact computation
@pytest.mark.parametrize("n,k,dim", [(2, 2, 4), (3, 2, 3), (3, 3, 8), (4, 3, 7)])
def test_recorded_maximal_dimensions(n, k, dim):
    assert maximal_report(n, k)["dimension"] == dim


def test_extra_maximal_weight_at_equal_rank():
    rep = maximal_report(2, 2)
    assert not rep["candidates_span_kernel"]
    assert rep["uncovered_weights"] == ["ε1-ε2"]
