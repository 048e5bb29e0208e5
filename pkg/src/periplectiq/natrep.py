"""Generator labels and their matrices on the natural module V = C_q(n|n)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .qrat import EPS, ONE, RatFunc
from .superlinalg import ShapeError, SuperMatrix, idx, labels, parity

KINDS = ("e", "f", "ebar", "fbar", "Fbar", "qh", "t")
ODD_KINDS = frozenset({"ebar", "fbar", "Fbar"})


@dataclass(frozen=True, order=True)
class GeneratorLabel:
    """A Drinfeld-Jimbo generator, a torus element q^h, or an FRT generator t_ij.

    ``i`` is the index for e/f/ebar/fbar/Fbar, ``h`` the coweight for qh and
    ``(i, j)`` the index pair for t.
    """

    kind: str
    i: int = 0
    j: int = 0
    h: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")

    @property
    def parity(self) -> int:
        if self.kind == "t":
            return (parity(self.i) + parity(self.j)) & 1
        return 1 if self.kind in ODD_KINDS else 0

    def __str__(self):
        if self.kind == "qh":
            return "qh[" + ",".join(str(x) for x in self.h) + "]"
        if self.kind == "t":
            return f"t[{self.i},{self.j}]"
        return f"{self.kind}{self.i}"

    def valid(self, n: int) -> bool:
        if self.kind in ("e", "f", "ebar", "fbar"):
            return 1 <= self.i <= n - 1
        if self.kind == "Fbar":
            return 1 <= self.i <= n
        if self.kind == "qh":
            return len(self.h) == n
        return 1 <= abs(self.i) <= n and 1 <= abs(self.j) <= n


def E(i: int) -> GeneratorLabel:
    return GeneratorLabel("e", i)


def F(i: int) -> GeneratorLabel:
    return GeneratorLabel("f", i)


def EBar(i: int) -> GeneratorLabel:
    return GeneratorLabel("ebar", i)


def FBar(i: int) -> GeneratorLabel:
    return GeneratorLabel("fbar", i)


def FFBar(i: int) -> GeneratorLabel:
    return GeneratorLabel("Fbar", i)


def QH(h) -> GeneratorLabel:
    return GeneratorLabel("qh", h=tuple(int(x) for x in h))


def QK(i: int, n: int, power: int = 1) -> GeneratorLabel:
    """q^{power * k_i}."""
    h = [0] * n
    h[i - 1] = power
    return QH(h)


def TGen(i: int, j: int) -> GeneratorLabel:
    return GeneratorLabel("t", i, j)


_LABEL_RE = re.compile(
    r"^(?:(?P<kind>ebar|fbar|Fbar|e|f)(?P<i>\d+)"
    r"|qh\[(?P<h>-?\d+(?:\s*,\s*-?\d+)*)\]"
    r"|t\[(?P<ti>-?\d+)\s*,\s*(?P<tj>-?\d+)\])$"
)


def parse_label(text: str) -> GeneratorLabel:
    m = _LABEL_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse generator label {text!r}")
    if m.group("kind"):
        return GeneratorLabel(m.group("kind"), int(m.group("i")))
    if m.group("h") is not None:
        return QH(int(x) for x in m.group("h").split(","))
    return TGen(int(m.group("ti")), int(m.group("tj")))


def dj_labels(n: int) -> list[GeneratorLabel]:
    """All Drinfeld-Jimbo generators for n, with q^{k_i} standing in for the torus."""
    out: list[GeneratorLabel] = []
    for i in range(1, n):
        out += [E(i), F(i), EBar(i), FBar(i)]
    out += [FFBar(j) for j in range(1, n + 1)]
    out += [QK(i, n) for i in range(1, n + 1)]
    return out


def raising_labels(n: int) -> list[GeneratorLabel]:
    out: list[GeneratorLabel] = []
    for i in range(1, n):
        out += [E(i), EBar(i)]
    return out


def t_labels(n: int) -> list[GeneratorLabel]:
    """Nonzero FRT generators: 1 <= |i| <= |j| <= n, minus t_{-i,i} for i > 0."""
    out = []
    for i in labels(n):
        for j in labels(n):
            if abs(i) > abs(j) or (i < 0 and j == -i):
                continue
            out.append(TGen(i, j))
    return out


# ---------------------------------------------------------------------------
# weights and degrees


def unit_weight(a: int, n: int) -> tuple:
    w = [0] * n
    w[abs(a) - 1] = 1 if a > 0 else -1
    return tuple(w)


def root(name: str, i: int, n: int) -> tuple:
    w = [0] * n
    if name == "alpha":
        w[i - 1], w[i] = 1, -1
    elif name == "gamma":
        w[i - 1], w[i] = 1, 1
    elif name == "beta":
        w[i - 1] = 2
    else:
        raise ValueError(name)
    return tuple(w)


def degree(g: GeneratorLabel, n: int) -> tuple:
    """Weight shift produced by g."""
    if g.kind == "e":
        return root("alpha", g.i, n)
    if g.kind == "f":
        return tuple(-x for x in root("alpha", g.i, n))
    if g.kind == "ebar":
        return root("gamma", g.i, n)
    if g.kind == "fbar":
        return tuple(-x for x in root("gamma", g.i, n))
    if g.kind == "Fbar":
        return tuple(-x for x in root("beta", g.i, n))
    if g.kind == "qh":
        return (0,) * n
    # t_ij is proportional to the classical E_{ji}
    wi, wj = unit_weight(g.i, n), unit_weight(g.j, n)
    return tuple(b - a for a, b in zip(wi, wj))


# ---------------------------------------------------------------------------
# matrices on V


def elementary(n: int, a: int, b: int, c=ONE) -> SuperMatrix:
    """c * E_{ab}: u_b -> c * u_a."""
    return SuperMatrix(2 * n, 2 * n, parity(a) + parity(b), {idx(a, n): {idx(b, n): c}})


def _bold_e_entries(n: int, i: int, j: int) -> dict:
    out: dict = {}
    out[(idx(i, n), idx(j, n))] = 1
    sign = -1 if (parity(i) * (parity(j) + 1)) % 2 else 1
    key = (idx(-j, n), idx(-i, n))
    out[key] = out.get(key, 0) - sign
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def classical_matrix(n: int, i: int, j: int) -> SuperMatrix:
    """The periplectic matrix 𝖤_{ij} = E_{ij} - (-1)^{p(i)(p(j)+1)} E_{-j,-i}."""
    if not (1 <= abs(i) <= n and 1 <= abs(j) <= n):
        raise ShapeError(f"indices ({i},{j}) out of range for n={n}")
    ents = _bold_e_entries(n, i, j)
    return SuperMatrix.from_entries(2 * n, 2 * n, ents, parity(i) + parity(j))


def theta_sign(i: int, j: int, k: int) -> int:
    s = (i > 0) - (i < 0) + (j > 0) - (j < 0) + (k > 0) - (k < 0)
    return (s > 0) - (s < 0)


@lru_cache(maxsize=None)
def t_matrix(n: int, i: int, j: int) -> SuperMatrix:
    """Action of t_ij on V."""
    if not (1 <= abs(i) <= n and 1 <= abs(j) <= n):
        raise ShapeError(f"indices ({i},{j}) out of range for n={n}")
    par = parity(i) + parity(j)
    dim = 2 * n
    if abs(i) > abs(j):
        return SuperMatrix.zero(dim, dim, par)
    if abs(i) == abs(j):
        if i == j:
            m = abs(i)
            diag = []
            for a in labels(n):
                if a == m:
                    diag.append(RatFunc.q_pow(1))
                elif a == -m:
                    diag.append(RatFunc.q_pow(-1))
                else:
                    diag.append(ONE)
            return SuperMatrix.diagonal(diag)
        # j = -i
        if i > 0:
            return elementary(n, -i, i, EPS)
        return SuperMatrix.zero(dim, dim, par)
    sign = -1 if parity(i) else 1
    return SuperMatrix.from_entries(
        dim, dim,
        {rc: EPS * (sign * v) for rc, v in _bold_e_entries(n, j, i).items()},
        par,
    )


# rescaling in the generator dictionary: label -> (scalar, t-indices)
def dictionary(g: GeneratorLabel) -> tuple[RatFunc, int, int]:
    i = g.i
    inv = EPS.inv()
    if g.kind == "e":
        return -inv, -i, -i - 1
    if g.kind == "fbar":
        return -inv, i, -i - 1
    if g.kind == "f":
        return inv, i, i + 1
    if g.kind == "ebar":
        return inv, -i, i + 1
    if g.kind == "Fbar":
        return inv * (-2), i, -i
    raise ValueError(f"{g} is not given by a rescaled t-generator")


@lru_cache(maxsize=None)
def qh_matrix(n: int, h: tuple) -> SuperMatrix:
    return SuperMatrix.diagonal(
        RatFunc.q_pow(h[abs(a) - 1] * (1 if a > 0 else -1)) for a in labels(n)
    )


@lru_cache(maxsize=None)
def dj_matrix(n: int, g: GeneratorLabel) -> SuperMatrix:
    """Action of a Drinfeld-Jimbo generator (or q^h, or t_ij) on V."""
    if not g.valid(n):
        raise ShapeError(f"generator {g} not valid for n={n}")
    if g.kind == "qh":
        return qh_matrix(n, g.h)
    if g.kind == "t":
        return t_matrix(n, g.i, g.j)
    c, a, b = dictionary(g)
    return t_matrix(n, a, b) * c


def weight_matrix_check(n: int) -> bool:
    """q^{k_i} acts on u_a by q^{<weight(u_a), k_i>} with weight(u_a) = sgn(a) ε_|a|."""
    for i in range(1, n + 1):
        m = dj_matrix(n, QK(i, n))
        for a in labels(n):
            w = unit_weight(a, n)
            if m[idx(a, n), idx(a, n)] != RatFunc.q_pow(w[i - 1]):
                return False
            if len(m.data.get(idx(a, n), {})) != 1:
                return False
    return True


__all__ = [
    "E", "F", "EBar", "FBar", "FFBar", "QH", "QK", "TGen", "GeneratorLabel",
    "classical_matrix", "degree", "dictionary", "dj_labels", "dj_matrix", "elementary",
    "parse_label", "qh_matrix", "raising_labels", "root", "t_labels", "t_matrix",
    "theta_sign", "unit_weight", "weight_matrix_check"
]
