"""The action on V^{⊗k} through the comultiplication, weights and characters."""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .natrep import (
    QK,
    E,
    EBar,
    F,
    FBar,
    FFBar,
    GeneratorLabel,
    degree,
    dictionary,
    dj_labels,
    dj_matrix,
    raising_labels,
    t_matrix,
)
from .qrat import EPS, ONE, RatFunc
from .superlinalg import SuperMatrix, labels, matadd, matmul, parity, scale, tensor, tuples

HALF_EPS = EPS / 2

# Last term of the f_i coproduct: Fbar_i ⊗ ebar_i ("corrected", forced by degree
# counting and by the t_ij coproduct) or Fbar_i ⊗ ebar_{i+1}, kept as a negative control.
COPRODUCT_READINGS = ("corrected", "as-printed")


def coproduct_terms(g: GeneratorLabel, n: int, reading: str = "corrected") -> list:
    """Δ(g) as a list of (coefficient, left label, right label).

    Terms whose labels fall outside the index range for n are dropped.
    """
    if g.kind == "qh":
        return [(ONE, g, g)]
    i = g.i
    if g.kind == "e":
        terms = [(ONE, QK(i, n), E(i)), (ONE, E(i), QK(i + 1, n)),
                 (-HALF_EPS, EBar(i), FFBar(i + 1))]
    elif g.kind == "f":
        last = EBar(i) if reading == "corrected" else EBar(i + 1)
        terms = [(ONE, QK(i, n), F(i)), (ONE, F(i), QK(i + 1, n)),
                 (HALF_EPS, FFBar(i), last)]
    elif g.kind == "ebar":
        terms = [(ONE, QK(i, n), EBar(i)), (ONE, EBar(i), QK(i + 1, n))]
    elif g.kind == "fbar":
        terms = [(ONE, QK(i, n), FBar(i)), (ONE, FBar(i), QK(i + 1, n)),
                 (-HALF_EPS, FFBar(i), E(i)), (HALF_EPS, F(i), FFBar(i + 1))]
    elif g.kind == "Fbar":
        terms = [(ONE, QK(i, n), FFBar(i)), (ONE, FFBar(i), QK(i, n))]
    else:
        raise ValueError(f"no Drinfeld-Jimbo coproduct for {g}")
    return [(c, a, b) for c, a, b in terms if a.valid(n) and b.valid(n)]


@lru_cache(maxsize=None)
def qh_action(n: int, k: int, h: tuple) -> SuperMatrix:
    return SuperMatrix.diagonal(
        RatFunc.q_pow(sum(x * y for x, y in zip(weight_of(t, n), h))) for t in tuples(n, k)
    )


@lru_cache(maxsize=None)
def coproduct_action(n: int, k: int, g: GeneratorLabel, reading: str = "corrected",
                     side: str = "left") -> SuperMatrix:
    """Matrix of a Drinfeld-Jimbo generator on V^{⊗k}.

    ``side='left'`` expands Δ^{(k)} = (Δ^{(k-1)} ⊗ id)Δ, which is the same as
    repeatedly applying Δ to the leftmost factor. ``side='right'`` uses
    (id ⊗ Δ^{(k-1)})Δ and exists to test coassociativity.
    """
    if g.kind == "qh":
        return qh_action(n, k, g.h)
    if k == 1:
        return dj_matrix(n, g)
    dim = (2 * n) ** k
    out = SuperMatrix.zero(dim, dim, g.parity)
    for c, a, b in coproduct_terms(g, n, reading):
        if side == "left":
            left = coproduct_action(n, k - 1, a, reading, side)
            term = tensor(left, dj_matrix(n, b), n, k - 1, 1)
        else:
            right = coproduct_action(n, k - 1, b, reading, side)
            term = tensor(dj_matrix(n, a), right, n, 1, k - 1)
        out = matadd(out, scale(c, term))
    out.parity = g.parity
    return out


@lru_cache(maxsize=None)
def tij_coproduct_action(n: int, k: int, i: int, j: int) -> SuperMatrix:
    """Action of t_ij on V^{⊗k} via Δ(t_ij) = Σ_l ± t_il ⊗ t_lj, iterated on the left."""
    if k == 1:
        return t_matrix(n, i, j)
    dim = (2 * n) ** k
    out = SuperMatrix.zero(dim, dim, parity(i) + parity(j))
    for l in labels(n):
        if abs(i) > abs(l) or abs(l) > abs(j):
            continue
        left = tij_coproduct_action(n, k - 1, i, l)
        right = t_matrix(n, l, j)
        if left.is_zero() or right.is_zero():
            continue
        sign = -1 if ((parity(i) + parity(l)) * (parity(l) + parity(j))) % 2 else 1
        out = matadd(out, scale(sign, tensor(left, right, n, k - 1, 1)))
    out.parity = (parity(i) + parity(j)) & 1
    return out


def dj_from_t(n: int, k: int, g: GeneratorLabel) -> SuperMatrix:
    """The generator-dictionary rescaling applied to the t_ij coproduct action.

    For q^h this is the product of powers of t_ii (diagonal, so inverses are
    taken entrywise).
    """
    if g.kind == "qh":
        m = SuperMatrix.identity((2 * n) ** k)
        for i, e in enumerate(g.h, start=1):
            base = tij_coproduct_action(n, k, i, i)
            if e < 0:
                base = base.map_entries(lambda v: v.inv())
            for _ in range(abs(e)):
                m = matmul(m, base)
        return m
    c, a, b = dictionary(g)
    return scale(c, tij_coproduct_action(n, k, a, b))


# ---------------------------------------------------------------------------
# weights


def weight_of(tup, n: int) -> tuple:
    w = [0] * n
    for a in tup:
        w[abs(a) - 1] += 1 if a > 0 else -1
    return tuple(w)


def add_weights(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def weight_leq(mu, lam) -> bool:
    """mu <= lam, i.e. mu - lam lies in the negative cone spanned by -α_i, -γ_i, -β_j."""
    d = [l - m for l, m in zip(lam, mu)]  # must lie in the positive cone
    n = len(d)

    def search(pos: int, carry: int) -> bool:
        # coordinate pos receives d[pos] + carry, where carry collects -a + c
        # from α_{pos-1} and γ_{pos-1}
        val = d[pos] + carry
        if val < 0:
            return False
        if pos == n - 1:
            return val % 2 == 0
        for b in range(val // 2 + 1):  # β_pos
            rest = val - 2 * b
            for a in range(rest + 1):  # α_pos; γ_pos takes the remainder
                c = rest - a
                if search(pos + 1, c - a):
                    return True
        return False

    return search(0, 0)


def is_dominant(lam) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def format_weight(w) -> str:
    parts = []
    for i, c in enumerate(w, start=1):
        if not c:
            continue
        term = f"ε{i}" if abs(c) == 1 else f"{abs(c)}ε{i}"
        parts.append(("-" if c < 0 else "+") + term)
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


class TensorModule:
    """V^{⊗k} with eagerly built generator matrices and a weight index."""

    def __init__(self, n: int, k: int, reading: str = "corrected"):
        if n < 1 or k < 1:
            raise ValueError("n and k must be positive")
        self.n = n
        self.k = k
        self.dim = (2 * n) ** k
        self.reading = reading
        self.labels = dj_labels(n)
        self.actions = {g: coproduct_action(n, k, g, reading) for g in self.labels}
        self.tuples = tuples(n, k)
        index: dict[tuple, list[int]] = defaultdict(list)
        for i, t in enumerate(self.tuples):
            index[weight_of(t, n)].append(i)
        self.weight_index = dict(sorted(index.items()))
        self.weight_by_index = [weight_of(t, n) for t in self.tuples]

    def action(self, g: GeneratorLabel) -> SuperMatrix:
        if g in self.actions:
            return self.actions[g]
        if g.kind == "qh":
            return qh_action(self.n, self.k, g.h)
        return coproduct_action(self.n, self.k, g, self.reading)

    def raising(self) -> list:
        return [self.actions[g] for g in raising_labels(self.n)]

    def generators(self) -> list:
        return [self.actions[g] for g in self.labels]

    def weight_spaces(self) -> dict:
        return self.weight_index

    def character(self) -> dict:
        return {w: len(v) for w, v in self.weight_index.items()}

    def character_json(self) -> list:
        return [{"weight": list(w), "multiplicity": m} for w, m in sorted(self.character().items())]


def weight_spaces(m: TensorModule) -> dict:
    return m.weight_spaces()


def character(m: TensorModule) -> dict:
    return m.character()


def grading_ok(m: TensorModule, g: GeneratorLabel) -> bool:
    d = degree(g, m.n)
    for r, c, _ in m.action(g).entries():
        if m.weight_by_index[r] != add_weights(m.weight_by_index[c], d):
            return False
    return True


__all__ = [
    "TensorModule", "character", "coproduct_action", "coproduct_terms", "dj_from_t",
    "format_weight", "grading_ok", "is_dominant", "qh_action", "tij_coproduct_action",
    "weight_leq", "weight_of", "weight_spaces",
]
