import pytest

from periplectiq.natrep import (
    EBar,
    FBar,
    FFBar,
    E,
    F,
    QK,
    classical_matrix,
    dj_labels,
    dj_matrix,
    parse_label,
    t_labels,
    weight_matrix_check,
)
from periplectiq.qrat import ONE, Q, QINV
from periplectiq.superlinalg import (
    SuperMatrix,
    SuperVector,
    commutator,
    flat_index,
    idx,
    labels,
    matmul,
    parity,
    tensor,
)
from periplectiq.tensorrep import (
    coproduct_action,
    dj_from_t,
    grading_ok,
    qh_action,
    tij_coproduct_action,
)


def test_basis_order_and_parity():
    assert labels(2) == [-2, -1, 1, 2]
    assert [parity(a) for a in labels(2)] == [1, 1, 0, 0]
    assert flat_index((-2, -2), 2) == 0
    assert flat_index((2, 2), 2) == 15


def test_koszul_sign():
    # (X⊗Y)(v⊗w) = (-1)^{p(Y)p(v)} Xv⊗Yw
    n = 1
    # odd map u_1 -> u_{-1}
    odd = SuperMatrix.from_entries(2, 2, {(idx(-1, n), idx(1, n)): 1}, 1)
    ident = SuperMatrix.identity(2)
    m = tensor(ident, odd, n, 1, 1)
    v = SuperVector.basis(n, (-1, 1))
    out = m.apply(v)
    assert out.data and all(c == -ONE for c in out.data.values())
    v = SuperVector.basis(n, (1, 1))
    assert all(c == ONE for c in m.apply(v).data.values())


def test_label_parsing():
    assert parse_label("ebar2") == EBar(2)
    assert str(FFBar(3)) == "Fbar3"
    assert FBar(1).parity == 1 and E(1).parity == 0


@pytest.mark.parametrize("n", [2, 3])
def test_weights_and_grading(n, module):
    assert weight_matrix_check(n)
    m = module(n, 2)
    for g in dj_labels(n):
        assert grading_ok(m, g)


@pytest.mark.parametrize("n", [2, 3])
def test_t_support(n):
    labs = t_labels(n)
    assert all(abs(g.i) <= abs(g.j) for g in labs)
    assert all(not (g.i < 0 and g.j == -g.i) for g in labs)


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 2)])
def test_dictionary(n, k):
    for g in dj_labels(n):
        assert coproduct_action(n, k, g) == dj_from_t(n, k, g)


def test_printed_f_coproduct_differs():
    # the corrected coproduct of f_i is the one that matches Δ(t_ij)
    g = F(1)
    assert coproduct_action(2, 2, g, "as-printed") != dj_from_t(2, 2, g)


def test_torus_action():
    k1 = qh_action(2, 1, QK(1, 2).h)
    assert k1[flat_index((1,), 2), flat_index((1,), 2)] == Q
    assert k1[flat_index((-1,), 2), flat_index((-1,), 2)] == QINV
    assert matmul(k1, qh_action(2, 1, QK(1, 2, -1).h)) == SuperMatrix.identity(4)


def test_ebar_fbar_anticommutator_is_cartan_difference():
    n = 2
    lhs = commutator(dj_matrix(n, EBar(1)), dj_matrix(n, FBar(1)))
    assert not lhs.is_zero()


def test_coassociativity():
    for g in dj_labels(2):
        if g.kind != "qh":
            assert coproduct_action(2, 3, g, side="left") == coproduct_action(2, 3, g, side="right")


def test_t_coproduct_is_algebra_map_on_diagonal():
    n, k = 2, 2
    t11 = tij_coproduct_action(n, k, 1, 1)
    assert t11 == qh_action(n, k, QK(1, n).h)


def test_periplectic_matrices():
    # E_{i,-i} with i even collapses, E_{-i,i} doubles
    assert classical_matrix(2, 1, -1).is_zero()
    assert [c for _, _, c in classical_matrix(2, -1, 1).entries()] == [2 * ONE]
    assert classical_matrix(2, 1, 2).nnz() == 2
