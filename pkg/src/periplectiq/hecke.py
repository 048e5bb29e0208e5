"""The abstract Hecke algebra H_k in its standard basis {T_w}.

Used as an oracle independent of any representation: T_s T_w = T_{sw} when
ℓ(sw) > ℓ(w), and T_s T_w = T_{sw} + (q - q^{-1}) T_w otherwise, which encodes
(T_s - q)(T_s + q^{-1}) = 0.
"""

from __future__ import annotations

from .combinat import compose, identity, length, reduced_word, simple
from .qrat import EPS, ONE, ZERO, RatFunc, as_ratfunc


class HeckeElement:
    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: dict | None = None):
        self.k = k
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, w: tuple) -> HeckeElement:
        return cls(len(w), {tuple(w): ONE})

    @classmethod
    def one(cls, k: int) -> HeckeElement:
        return cls(k, {identity(k): ONE})

    @classmethod
    def generator(cls, j: int, k: int) -> HeckeElement:
        return cls.basis(simple(j, k))

    def __add__(self, other: HeckeElement) -> HeckeElement:
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return HeckeElement(self.k, out)

    def __neg__(self):
        return HeckeElement(self.k, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> HeckeElement:
        c = as_ratfunc(c)
        return HeckeElement(self.k, {w: c * x for w, x in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def _left_simple(self, j: int) -> HeckeElement:
        s = simple(j, self.k)
        out: dict = {}
        for w, c in self.terms.items():
            sw = compose(s, w)
            out[sw] = out.get(sw, ZERO) + c
            if length(sw) < length(w):
                out[w] = out.get(w, ZERO) + EPS * c
        return HeckeElement(self.k, out)

    def __mul__(self, other):
        if not isinstance(other, HeckeElement):
            return self.scale(other)
        out = HeckeElement(self.k)
        for w, c in self.terms.items():
            part = other
            for j in reversed(reduced_word(w)):
                part = part._left_simple(j)
            out = out + part.scale(c)
        return out

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.k == other.k and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def proportional_to(self, other: HeckeElement) -> RatFunc | None:
        """c with self = c * other, or None."""
        if not other.terms:
            return None
        w0 = min(other.terms)
        c = self.terms.get(w0, ZERO) / other.terms[w0]
        return c if self == other.scale(c) else None

    def __repr__(self):
        return "HeckeElement(" + " + ".join(
            f"({c})T{list(w)}" for w, c in sorted(self.terms.items())) + ")"


def T(w: tuple) -> HeckeElement:
    return HeckeElement.basis(w)


def T_inverse(w: tuple) -> HeckeElement:
    """T_w^{-1} = T_{s_l}^{-1} ... T_{s_1}^{-1}, with T_s^{-1} = T_s - (q - q^{-1})."""
    k = len(w)
    out = HeckeElement.one(k)
    for j in reduced_word(w):
        inv = HeckeElement.generator(j, k) - HeckeElement.one(k).scale(EPS)
        out = inv * out
    return out


def word_element(word, k: int) -> HeckeElement:
    """Product T_{s_{j_1}} ... T_{s_{j_m}} (word need not be reduced)."""
    out = HeckeElement.one(k)
    for j in word:
        out = out * HeckeElement.generator(j, k)
    return out
