"""Centralizer operators on V^{⊗k}: 𝔠, 𝔱, Hecke elements, q-Young symmetrizers,
contractions c_{r,s} and maximal-vector candidates."""

from __future__ import annotations

from functools import lru_cache

from .combinat import (
    ContractionPattern,
    PatternError,
    StandardTableau,
    column_group,
    column_tableau,
    from_cycles,
    length,
    reduced_word,
    row_group,
    row_tableau,
    tableau_permutation,
)
from .hecke import HeckeElement, T, T_inverse
from .natrep import elementary
from .qrat import EPS, ONE, Q, QINV, RatFunc
from .superlinalg import (
    ShapeError,
    SuperMatrix,
    SuperVector,
    embed,
    labels,
    matadd,
    matmul,
    parity,
    scale,
    tensor,
)


class SymmetrizerDegenerate(ArithmeticError):
    """x_T vanishes on V^{⊗k} or has no consistent idempotent scalar."""


# permutation composition convention; "right" means right-to-left (functions)
CONVENTIONS = ("right", "left")


def _pair(n: int, a1: int, b1: int, a2: int, b2: int, c=ONE) -> SuperMatrix:
    """c * E_{a1 b1} ⊗ E_{a2 b2} with the Koszul rule."""
    return scale(c, tensor(elementary(n, a1, b1), elementary(n, a2, b2), n, 1, 1))


@lru_cache(maxsize=None)
def c_op(n: int) -> SuperMatrix:
    """𝔠 = Σ_{a,b} (-1)^{p(a)p(b)} E_{ab} ⊗ E_{-a,-b}."""
    dim = (2 * n) ** 2
    out = SuperMatrix.zero(dim)
    for a in labels(n):
        for b in labels(n):
            sign = -1 if parity(a) * parity(b) else 1
            out = matadd(out, _pair(n, a, b, -a, -b, RatFunc.const(sign)))
    return out


@lru_cache(maxsize=None)
def t_op(n: int) -> SuperMatrix:
    """The 𝔱 operator, summed term by term."""
    dim = (2 * n) ** 2
    qm1 = Q - ONE
    qim1 = QINV - ONE
    terms = []
    for i in labels(n):
        for j in labels(n):
            terms.append(_pair(n, i, j, j, i, RatFunc.const(-1 if parity(j) else 1)))
    for i in range(1, n + 1):
        terms.append(_pair(n, -i, i, i, -i, qm1))
        terms.append(_pair(n, i, i, i, i, qm1))
        terms.append(_pair(n, i, -i, -i, i, -qim1))
        terms.append(_pair(n, -i, -i, -i, -i, -qim1))
        terms.append(_pair(n, i, i, -i, -i, EPS))
    for i in labels(n):
        for j in labels(n):
            if abs(j) < abs(i):
                terms.append(_pair(n, j, j, i, i, EPS))
                sign = -1 if parity(i) * parity(j) else 1
                terms.append(_pair(n, j, i, -j, -i, EPS * sign))
    out = SuperMatrix.zero(dim)
    for t in terms:
        out = matadd(out, t)
    return out


def t_inverse_op(n: int) -> SuperMatrix:
    return matadd(t_op(n), scale(-EPS, SuperMatrix.identity((2 * n) ** 2)))


@lru_cache(maxsize=None)
def place_brauer(op: str, i: int, n: int, k: int) -> SuperMatrix:
    """𝔱_i or 𝔠_i (op in {'t', 'c', 'tinv'}) acting on slots i, i+1 of V^{⊗k}."""
    if not 1 <= i <= k - 1:
        raise ShapeError(f"slot {i} out of range 1..{k - 1}")
    base = {"t": t_op, "c": c_op, "tinv": t_inverse_op}[op](n)
    return embed(base, i, 2, k, n)


@lru_cache(maxsize=None)
def hecke(sigma: tuple, n: int) -> SuperMatrix:
    """h(σ) = 𝔱_{j_1} ⋯ 𝔱_{j_l} for the canonical reduced word of σ."""
    k = len(sigma)
    out = SuperMatrix.identity((2 * n) ** k)
    for j in reduced_word(tuple(sigma)):
        out = matmul(out, place_brauer("t", j, n, k))
    return out


def hecke_word(word, n: int, k: int) -> SuperMatrix:
    out = SuperMatrix.identity((2 * n) ** k)
    for j in word:
        out = matmul(out, place_brauer("t", j, n, k))
    return out


@lru_cache(maxsize=None)
def hecke_inverse(sigma: tuple, n: int) -> SuperMatrix:
    k = len(sigma)
    out = SuperMatrix.identity((2 * n) ** k)
    for j in reversed(reduced_word(tuple(sigma))):
        out = matmul(out, place_brauer("tinv", j, n, k))
    return out


def represent(x: HeckeElement, n: int) -> SuperMatrix:
    """Image of an abstract Hecke element on V^{⊗k}."""
    dim = (2 * n) ** x.k
    out = SuperMatrix.zero(dim)
    for w, c in sorted(x.terms.items()):
        out = matadd(out, scale(c, hecke(w, n)))
    return out


# ---------------------------------------------------------------------------
# symmetrizers


def _standard_pair(t: StandardTableau):
    """T_+ and T_- of the shape of t, on the entries 1..m (m = |t|)."""
    return row_tableau(t.shape), column_tableau(t.shape)


def quasi_symmetrizers(t: StandardTableau, k: int) -> tuple[HeckeElement, HeckeElement]:
    tp, tm = _standard_pair(t)
    e_plus = HeckeElement(k)
    for s in row_group(tp, k):
        e_plus = e_plus + T(s).scale(Q ** length(s))
    e_minus = HeckeElement(k)
    for s in column_group(tm, k):
        e_minus = e_minus + T(s).scale((-Q) ** (-length(s)))
    return e_plus, e_minus


def sigma_pm(t: StandardTableau, k: int) -> tuple[tuple, tuple]:
    """σ_+^T and σ_-^T sending the cells of T_± to the cells of T.

    When t covers a proper subset of {1..k}, T_± live on {1..m} and the rest of
    {1..k} maps increasingly onto the points not in t.
    """
    tp, tm = _standard_pair(t)
    return tableau_permutation(tp, t, k), tableau_permutation(tm, t, k)


def x_element(t: StandardTableau, k: int) -> HeckeElement:
    """x_T = h(σ_-) e_- h(σ_-)^{-1} h(σ_+) e_+ h(σ_+)^{-1} in the abstract H_k."""
    e_plus, e_minus = quasi_symmetrizers(t, k)
    sp, sm = sigma_pm(t, k)
    left = T(sm) * e_minus * T_inverse(sm)
    right = T(sp) * e_plus * T_inverse(sp)
    return left * right


@lru_cache(maxsize=None)
def xi_abstract(t: StandardTableau, k: int) -> RatFunc:
    x = x_element(t, k)
    c = (x * x).proportional_to(x)
    if c is None:
        raise SymmetrizerDegenerate(f"x_T^2 is not a multiple of x_T for {t}")
    return c


@lru_cache(maxsize=None)
def y_element(t: StandardTableau, k: int) -> HeckeElement:
    return x_element(t, k).scale(xi_abstract(t, k).inv())


def extract_xi(x: SuperMatrix) -> RatFunc:
    """ξ with x^2 = ξ x, from the first entry where both are nonzero, then checked globally."""
    x2 = matmul(x, x)
    xi = None
    for r, c, v in x.entries():
        w = x2[r, c]
        if w:
            xi = w / v
            break
    if xi is None:
        raise SymmetrizerDegenerate("x_T is zero or nilpotent on this module")
    if x2 != scale(xi, x):
        raise SymmetrizerDegenerate("x_T^2 is not a scalar multiple of x_T")
    return xi


@lru_cache(maxsize=None)
def young_symmetrizer(t: StandardTableau, n: int, k: int) -> tuple:
    """(x, ξ, y) as matrices on V^{⊗k}; ξ is read off the matrices."""
    x = represent(x_element(t, k), n)
    if x.is_zero():
        raise SymmetrizerDegenerate(f"x_T vanishes on V^⊗{k} for n={n}, T={t}")
    xi = extract_xi(x)
    return x, xi, scale(xi.inv(), x)


def y_matrix(t: StandardTableau, n: int, k: int) -> SuperMatrix:
    return young_symmetrizer(t, n, k)[2]


# ---------------------------------------------------------------------------
# contractions


def sigma_rs(r: int, s: int, k: int, convention: str = "right") -> tuple:
    """σ_{r,s} = (1, r)(2, s)."""
    cycles = [c for c in ((1, r), (2, s)) if c[0] != c[1]]
    if convention == "left":
        cycles = cycles[::-1]
    return from_cycles(cycles, k)


@lru_cache(maxsize=None)
def c_rs(r: int, s: int, n: int, k: int, convention: str = "right") -> SuperMatrix:
    if not (1 <= r < s <= k):
        raise PatternError(f"need 1 <= r < s <= k, got ({r}, {s})")
    sig = sigma_rs(r, s, k, convention)
    return matmul(matmul(hecke(sig, n), place_brauer("c", 1, n, k)), hecke_inverse(sig, n))


def c_pattern(p: ContractionPattern, n: int, k: int, convention: str = "right") -> SuperMatrix:
    p.check(k)
    out = SuperMatrix.identity((2 * n) ** k)
    for r, s in p.pairs:
        out = matmul(out, c_rs(r, s, n, k, convention))
    return out


def associated_tensor(tau: StandardTableau | None, p: ContractionPattern, n: int, k: int) -> SuperVector:
    """w_{τ,r̃,s̃}: u_1 on r̃, u_{-1} on s̃, u_j on the complement where j is the row in τ."""
    w = [0] * k
    for r, s in p.pairs:
        w[r - 1] = 1
        w[s - 1] = -1
    comp = p.complement(k)
    if tau is None:
        if comp:
            raise PatternError("a tableau is needed on the complement of the pattern")
    else:
        if sorted(tau.entries()) != comp:
            raise PatternError(f"tableau entries {sorted(tau.entries())} != complement {comp}")
        for x in comp:
            row = tau.row_of(x)
            if row > n:
                raise SymmetrizerDegenerate(f"tableau row {row} exceeds n={n}")
            w[x - 1] = row
    return SuperVector.basis(n, tuple(w))


def maximal_candidate(tau: StandardTableau | None, p: ContractionPattern, n: int, k: int,
                      convention: str = "right") -> SuperVector:
    """y_τ c_{r̃,s̃} w_{τ,r̃,s̃}."""
    w = associated_tensor(tau, p, n, k)
    v = c_pattern(p, n, k, convention).apply(w)
    if tau is not None and tau.size > 1:
        v = y_matrix(tau, n, k).apply(v)
    return v


def theorem_candidates(n: int, k: int, convention: str = "right") -> list:
    """All (τ, pattern, vector) triples of the maximal-vector theorem with ℓ(τ) <= n."""
    from .combinat import all_standard_tableaux, patterns

    out = []
    for j in range(0, k // 2 + 1):
        for p in patterns(j, k):
            comp = p.complement(k)
            taus = all_standard_tableaux(comp, max_rows=n) if comp else [None]
            for tau in taus:
                out.append((tau, p, maximal_candidate(tau, p, n, k, convention)))
    return out


def hecke_from_words(expr, n: int, k: int) -> SuperMatrix:
    """Σ c * 𝔱_{w_1} ⋯ 𝔱_{w_m} for expr a list of (coefficient, word)."""
    dim = (2 * n) ** k
    out = SuperMatrix.zero(dim)
    for c, word in expr:
        out = matadd(out, scale(c, hecke_word(word, n, k)))
    return out


# ---------------------------------------------------------------------------
# explicit low-rank data


def _explicit_expansions() -> dict:
    """Six-term (k=3) and two-term (k=2) expansions of y_T in words in 𝔱_1, 𝔱_2.

    Maps the tableau string to (terms, denominator) with terms a list of
    (coefficient, word).
    """
    q, qi = Q, QINV
    one = ONE
    return {
        "12": ([(one, ()), (q, (1,))], one + q * q),
        "1/2": ([(one, ()), (-qi, (1,))], one + qi * qi),
        "123": ([(one, ()), (q, (1,)), (q, (2,)), (q ** 2, (1, 2)), (q ** 2, (2, 1)),
                 (q ** 3, (1, 2, 1))], one + q ** 2 * 2 + q ** 4 * 2 + q ** 6),
        "12/3": ([(one, ()), (q, (1,)), (q - qi, (2,)), (-one, (1, 2)), (q * q - one, (2, 1)),
                  (-q, (1, 2, 1))], qi * qi + one + q * q),
        "13/2": ([(one, ()), (-qi, (1,)), (-q * q, (2, 1)), (q, (1, 2, 1))],
                 qi * qi + one + q * q),
        "1/2/3": ([(one, ()), (-qi, (1,)), (-qi, (2,)), (qi ** 2, (1, 2)), (qi ** 2, (2, 1)),
                   (-qi ** 3, (1, 2, 1))], one + qi ** 2 * 2 + qi ** 4 * 2 + qi ** 6),
    }


EXPLICIT_Y = _explicit_expansions()


def explicit_y(name: str, n: int) -> SuperMatrix:
    terms, den = EXPLICIT_Y[name]
    k = sum(ch.isdigit() for ch in name)
    return hecke_from_words([(c / den, w) for c, w in terms], n, k)


def k_operator(n: int) -> SuperMatrix:
    """𝖪 = 𝔠_1𝔠_2 + q𝔱_2𝔠_1𝔠_2 + q²𝔠_2 on V^{⊗3}."""
    c1, c2 = place_brauer("c", 1, n, 3), place_brauer("c", 2, n, 3)
    t2 = place_brauer("t", 2, n, 3)
    c12 = matmul(c1, c2)
    return matadd(matadd(c12, scale(Q, matmul(t2, c12))), scale(Q * Q, c2))


def thetas(n: int, k: int) -> dict:
    """The named maximal vectors θ_i of V^{⊗2} (i = 1..3) or V^{⊗3} (i = 1..7)."""
    b = lambda *t: SuperVector.basis(n, t)  # noqa: E731
    if k == 2:
        return {
            1: y_matrix(row_tableau((2,)), n, 2).apply(b(1, 1)),
            2: y_matrix(column_tableau((1, 1)), n, 2).apply(b(1, 2)),
            3: place_brauer("c", 1, n, 2).apply(b(1, -1)),
        }
    if k != 3:
        raise ShapeError("named vectors exist for k = 2, 3 only")
    c1, c2 = place_brauer("c", 1, n, 3), place_brauer("c", 2, n, 3)
    t2 = place_brauer("t", 2, n, 3)
    out = {
        1: c1.apply(b(1, -1, 1)),
        2: matmul(t2, matmul(c1, c2)).apply(b(1, 1, -1)),
        3: c2.apply(b(1, 1, -1)),
        4: y_matrix(row_tableau((3,)), n, 3).apply(b(1, 1, 1)),
        5: y_matrix(StandardTableau(((1, 2), (3,))), n, 3).apply(b(1, 1, 2)),
        6: y_matrix(StandardTableau(((1, 3), (2,))), n, 3).apply(b(1, 2, 1)),
    }
    if n >= 3:
        out[7] = y_matrix(column_tableau((1, 1, 1)), n, 3).apply(b(1, 2, 3))
    return out


__all__ = [
    "CONVENTIONS", "SymmetrizerDegenerate", "associated_tensor", "c_op", "c_pattern", "c_rs",
    "extract_xi", "hecke", "hecke_from_words", "hecke_inverse", "hecke_word", "maximal_candidate",
    "place_brauer", "quasi_symmetrizers", "represent", "sigma_pm", "sigma_rs", "t_op",
    "theorem_candidates", "x_element", "xi_abstract", "y_element", "y_matrix",
    "young_symmetrizer", "EXPLICIT_Y", "explicit_y", "k_operator", "thetas",
]
