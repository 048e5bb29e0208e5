import pytest

from periplectiq.combinat import parse_tableau, row_tableau, standard_tableaux
from periplectiq.modtools import Submodule
from periplectiq.qbrauer import (
    EXPLICIT_Y,
    c_rs,
    explicit_y,
    extract_xi,
    k_operator,
    place_brauer,
    thetas,
    x_element,
    represent,
    xi_abstract,
    y_matrix,
)
from periplectiq.qrat import ONE, Q, QINV
from periplectiq.superlinalg import SuperMatrix, SuperVector, commutator, matadd, matmul, scale


def basis(n, *t):
    return SuperVector.basis(n, t)


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (3, 2)])
def test_brauer_generators_commute_with_action(n, k, module):
    m = module(n, k)
    for op in ("t", "c"):
        for i in range(1, k):
            b = place_brauer(op, i, n, k)
            assert all(commutator(g, b).is_zero() for g in m.generators())


@pytest.mark.parametrize("n", [2, 3])
def test_c_squares_to_zero_and_absorbs_t(n):
    c1, t1 = place_brauer("c", 1, n, 2), place_brauer("t", 1, n, 2)
    assert matmul(c1, c1).is_zero()
    assert not matmul(t1, c1).is_zero()


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (3, 3)])
def test_thetas_are_maximal(n, k, module):
    m = module(n, k)
    for v in thetas(n, k).values():
        assert v and all(g.apply(v).is_zero() for g in m.raising())


def test_theta_count_depends_on_rank():
    assert sorted(thetas(2, 3)) == [1, 2, 3, 4, 5, 6]
    assert sorted(thetas(3, 3)) == [1, 2, 3, 4, 5, 6, 7]


@pytest.fixture(scope="module")
def cubic():
    n, k = 3, 3
    ys = {s: y_matrix(parse_tableau(s), n, k) for s in ("123", "12/3", "13/2", "1/2/3")}
    return n, k, ys, thetas(n, k)


def test_theta_membership(cubic, module):
    n, k, ys, th = cubic
    m = module(n, k)
    sub = {s: Submodule.image(y, m, s) for s, y in ys.items()}
    assert sub["123"].contains(th[4])
    assert sub["123"].contains(th[1] + th[2].scale(Q) + th[3].scale(Q * Q))
    assert sub["12/3"].contains(th[5])
    assert sub["12/3"].contains(-th[1] - th[2].scale(Q - QINV) + th[3])
    assert sub["13/2"].contains(th[6])
    assert sub["13/2"].contains(-th[2].scale(Q) + th[3])
    assert sub["1/2/3"].contains(th[7])


def test_k_operator(cubic):
    n, _, ys, th = cubic
    kk = k_operator(n)
    assert matmul(ys["123"], kk) == kk
    assert kk.apply(basis(n, 1, 1, -1)) == th[1] + th[2].scale(Q) + th[3].scale(Q * Q)


def test_contracted_symmetrizer_scalar(cubic):
    n, k, ys, th = cubic
    c2 = place_brauer("c", 2, n, k)
    assert matmul(c2, matmul(ys["12/3"], c2)) == scale(QINV * QINV / (Q * Q + ONE + QINV * QINV), c2)
    w = basis(n, 1, 1, -1)
    target = (-th[1] - th[2].scale(Q - QINV) + th[3]).scale(ONE / (Q * Q + ONE + QINV * QINV))
    assert ys["12/3"].apply(c2.apply(w)) == target


def test_theta2_from_outer_contraction(cubic):
    n, k, _, th = cubic
    assert c_rs(1, 3, n, k).apply(basis(n, 1, 1, -1)).scale(QINV) == th[2]


@pytest.mark.parametrize("n", [2, 3])
def test_quadratic_identities(n):
    c1 = place_brauer("c", 1, n, 2)
    y_sym, y_alt = y_matrix(parse_tableau("12"), n, 2), y_matrix(parse_tableau("1/2"), n, 2)
    assert matmul(c1, y_alt).apply(basis(n, 1, -1)) == thetas(n, 2)[3]
    assert matmul(y_sym, c1) == c1


@pytest.mark.parametrize("name", sorted(EXPLICIT_Y))
def test_explicit_expansions(name):
    n = 2
    assert explicit_y(name, n) == y_matrix(parse_tableau(name), n, sum(ch.isdigit() for ch in name))


@pytest.mark.parametrize("shape", [(3,), (2, 1), (1, 1, 1)])
def test_xi_matches_matrix(shape):
    for t in standard_tableaux(shape):
        assert extract_xi(represent(x_element(t, 3), 3)) == xi_abstract(t, 3)


def test_symmetrizers_are_orthogonal_idempotents():
    n, k = 2, 2
    ys = [y_matrix(row_tableau(s), n, k) for s in ((2,), (1, 1))]
    assert matmul(ys[0], ys[0]) == ys[0]
    assert matmul(ys[0], ys[1]).is_zero()
    assert matadd(ys[0], ys[1]) == SuperMatrix.identity((2 * n) ** k)


def test_conventions_differ_on_outer_contraction():
    assert c_rs(2, 3, 2, 3, "right") != c_rs(2, 3, 2, 3, "left")


def test_short_composite_is_not_theta2(cubic):
    n, k, _, th = cubic
    v = matmul(place_brauer("t", 1, n, k), place_brauer("c", 2, n, k)).apply(basis(n, 1, 1, -1))
    assert v == th[2] + th[3].scale(Q - QINV)


@pytest.mark.parametrize("n", [2, 3])
def test_theta2_quadratic_normalization(n):
    raw = basis(n, 1, 2).scale(QINV) - basis(n, 2, 1)
    assert thetas(n, 2)[2] == raw.scale(ONE / (Q + QINV))
