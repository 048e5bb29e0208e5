"""Exact arithmetic in Q(q): Laurent polynomials, their quotients, q-integers.

A :class:`LaurentPoly` is stored as ``q^low * (c_0 + c_1 q + ...) / den`` with
integer ``c_i`` and a positive integer ``den`` coprime to the content. A
:class:`RatFunc` is ``num / den`` in canonical form: ``den`` is a monic
polynomial with nonzero constant term and ``gcd(num, den) = 1``. Canonical
forms make equality structural.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

from . import kernels as _k


class DivisionByZero(ZeroDivisionError):
    """Inversion of the zero rational function."""


class PoleAtOne(ArithmeticError):
    """A rational function has a pole at q = 1."""


def _content(coeffs):
    return math.gcd(*coeffs)


class LaurentPoly:
    __slots__ = ("low", "coeffs", "den", "_hash")

    def __init__(self, low: int = 0, coeffs: tuple = (), den: int = 1):
        # Trusted constructor: callers pass normalized data. Use make() otherwise.
        self.low = low
        self.coeffs = coeffs
        self.den = den
        self._hash = None

    @classmethod
    def make(cls, low: int, coeffs, den: int = 1) -> LaurentPoly:
        coeffs = tuple(coeffs)
        start = 0
        end = len(coeffs)
        while start < end and not coeffs[start]:
            start += 1
        if start == end:
            return ZERO_POLY
        while not coeffs[end - 1]:
            end -= 1
        if start or end != len(coeffs):
            coeffs = coeffs[start:end]
            low += start
        if den < 0:
            den = -den
            coeffs = tuple(-c for c in coeffs)
        if den != 1:
            g = math.gcd(den, _content(coeffs))
            if g != 1:
                den //= g
                coeffs = tuple(c // g for c in coeffs)
        return cls(low, coeffs, den)

    @classmethod
    def from_terms(cls, terms: dict) -> LaurentPoly:
        """Build from a map ``exponent -> rational coefficient``."""
        terms = {e: Fraction(c) for e, c in terms.items() if c}
        if not terms:
            return ZERO_POLY
        low = min(terms)
        high = max(terms)
        den = math.lcm(*(c.denominator for c in terms.values()))
        coeffs = [0] * (high - low + 1)
        for e, c in terms.items():
            coeffs[e - low] = c.numerator * (den // c.denominator)
        return cls.make(low, coeffs, den)

    @classmethod
    def constant(cls, c) -> LaurentPoly:
        c = Fraction(c)
        if not c:
            return ZERO_POLY
        return cls(0, (c.numerator,), c.denominator)

    @classmethod
    def monomial(cls, e: int, c=1) -> LaurentPoly:
        c = Fraction(c)
        if not c:
            return ZERO_POLY
        return cls(e, (c.numerator,), c.denominator)

    @property
    def terms(self) -> dict:
        return {
            self.low + i: Fraction(c, self.den)
            for i, c in enumerate(self.coeffs)
            if c
        }

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.low == 0 and self.den == 1 and self.coeffs == (1,)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (
            self.coeffs == other.coeffs
            and self.den == other.den
            and (self.low == other.low or not self.coeffs)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.low, self.coeffs, self.den))
        return self._hash

    def __neg__(self):
        if not self.coeffs:
            return self
        return LaurentPoly(self.low, tuple(-c for c in self.coeffs), self.den)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        da, db = self.den, other.den
        if da == db:
            low, cs = _k.add_scaled(self.low, self.coeffs, 1, other.low, other.coeffs, 1)
            if not cs:
                return ZERO_POLY
            if da == 1:
                return LaurentPoly(low, cs, 1)
            return LaurentPoly.make(low, cs, da)
        g = math.gcd(da, db)
        sa, sb = db // g, da // g
        low, cs = _k.add_scaled(self.low, self.coeffs, sa, other.low, other.coeffs, sb)
        if not cs:
            return ZERO_POLY
        return LaurentPoly.make(low, cs, da * sa)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if not self.coeffs or not other.coeffs:
            return ZERO_POLY
        cs = _k.mul(self.coeffs, other.coeffs)
        den = self.den * other.den
        if den == 1:
            return LaurentPoly(self.low + other.low, cs, 1)
        return LaurentPoly.make(self.low + other.low, cs, den)

    def scale(self, c) -> LaurentPoly:
        c = Fraction(c)
        if not c or not self.coeffs:
            return ZERO_POLY
        return LaurentPoly.make(
            self.low, tuple(x * c.numerator for x in self.coeffs), self.den * c.denominator
        )

    def shift(self, e: int) -> LaurentPoly:
        if not self.coeffs:
            return self
        return LaurentPoly(self.low + e, self.coeffs, self.den)

    def invert_q(self) -> LaurentPoly:
        """Substitute q -> q^-1."""
        if not self.coeffs:
            return self
        return LaurentPoly(-self.high, self.coeffs[::-1], self.den)

    def at_one(self) -> Fraction:
        return Fraction(sum(self.coeffs), self.den)

    def leading(self) -> Fraction:
        return Fraction(self.coeffs[-1], self.den)

    def __repr__(self):
        return f"LaurentPoly({render_poly(self)!r})"

    __str__ = lambda self: render_poly(self)  # noqa: E731


ZERO_POLY = LaurentPoly(0, (), 1)
ONE_POLY = LaurentPoly(0, (1,), 1)


def _primitive(cs):
    g = _content(cs)
    if cs[-1] < 0:
        g = -g
    if g == 1:
        return cs
    return tuple(c // g for c in cs)


def poly_gcd(a: tuple, b: tuple) -> tuple:
    """Primitive gcd over Z[q] of two dense integer polynomials (subresultant PRS).

    The result has positive leading coefficient; ``gcd(0, 0) = 0``.
    """
    if not a:
        return _primitive(b) if b else ()
    if not b:
        return _primitive(a)
    if len(a) < len(b):
        a, b = b, a
    a = _primitive(a)
    b = _primitive(b)
    if len(b) == 1:
        return (1,)
    g = 1
    h = 1
    while True:
        d = len(a) - len(b)
        r = _k.prem(a, b)
        if not r:
            return _primitive(b)
        if len(r) == 1:
            return (1,)
        a = b
        den = g * h**d
        b = tuple(c // den for c in r)
        g = a[-1]
        if d == 0:
            pass
        elif d == 1:
            h = g
        else:
            h = g**d // h ** (d - 1)


class RatFunc:
    """Element of Q(q) in canonical form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = ONE_POLY, _canonical: bool = False):
        if _canonical:
            self.num = num
            self.den = den
        else:
            self.num, self.den = _canonicalize(num, den)
        self._hash = None

    # constructors -------------------------------------------------------
    @classmethod
    def from_poly(cls, p: LaurentPoly) -> RatFunc:
        return cls(p, ONE_POLY, True)

    @classmethod
    def const(cls, c) -> RatFunc:
        return cls(LaurentPoly.constant(c), ONE_POLY, True)

    @classmethod
    def q_pow(cls, e: int, c=1) -> RatFunc:
        return cls(LaurentPoly.monomial(e, c), ONE_POLY, True)

    @classmethod
    def from_terms(cls, terms: dict) -> RatFunc:
        return cls(LaurentPoly.from_terms(terms), ONE_POLY, True)

    @classmethod
    def parse(cls, text: str) -> RatFunc:
        return parse_ratfunc(text)

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num.coeffs

    def is_poly(self) -> bool:
        return self.den is ONE_POLY or self.den.is_one()

    def __bool__(self):
        return bool(self.num.coeffs)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == RatFunc.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # arithmetic ---------------------------------------------------------
    def __neg__(self):
        return RatFunc(-self.num, self.den, True)

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = as_ratfunc(other)
        if not self.num.coeffs:
            return other
        if not other.num.coeffs:
            return self
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num + other.num, ONE_POLY, True)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = as_ratfunc(other)
        return self + (-other)

    def __rsub__(self, other):
        return as_ratfunc(other) - self

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            if not isinstance(other, _SCALARS):
                return NotImplemented
            other = as_ratfunc(other)
        if not self.num.coeffs or not other.num.coeffs:
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num * other.num, ONE_POLY, True)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> RatFunc:
        if not self.num.coeffs:
            raise DivisionByZero("inverse of zero in Q(q)")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            other = as_ratfunc(other)
        return self * other.inv()

    def __rtruediv__(self, other):
        return as_ratfunc(other) * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # specialisations ----------------------------------------------------
    def invert_q(self) -> RatFunc:
        """Substitute q -> q^-1."""
        return RatFunc(self.num.invert_q(), self.den.invert_q())

    def eval_at_one(self) -> Fraction:
        d = self.den.at_one()
        if d == 0:
            raise PoleAtOne(f"{self} has a pole at q = 1")
        return self.num.at_one() / d

    def size(self) -> int:
        """Total number of stored terms; used as a sparsity/blowup measure."""
        return len(self.num.coeffs) + len(self.den.coeffs)

    def __repr__(self):
        return f"RatFunc({str(self)!r})"

    def __str__(self):
        if self.den.is_one():
            return render_poly(self.num)
        return f"({render_poly(self.num)})/({render_poly(self.den)})"


def _canonicalize(num: LaurentPoly, den: LaurentPoly):
    if not den.coeffs:
        raise DivisionByZero("zero denominator")
    if not num.coeffs:
        return ZERO_POLY, ONE_POLY
    # move q-powers of the denominator into the numerator
    low = num.low - den.low
    ncs, dcs = num.coeffs, den.coeffs
    scale = Fraction(den.den, num.den)
    if len(dcs) > 1:
        g = poly_gcd(ncs, dcs)
        if len(g) > 1:
            ncs = _k.divexact(ncs, g)
            dcs = _k.divexact(dcs, g)
    lc = dcs[-1]
    if len(dcs) == 1:
        return LaurentPoly.make(low, tuple(c * scale.numerator for c in ncs),
                                lc * scale.denominator), ONE_POLY
    # make the denominator monic
    dpoly = LaurentPoly.make(0, dcs, lc)
    npoly = LaurentPoly.make(low, tuple(c * scale.numerator for c in ncs), lc * scale.denominator)
    return npoly, dpoly


_SCALARS = (int, Fraction, LaurentPoly, str)


def as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc.const(x)
    if isinstance(x, LaurentPoly):
        return RatFunc.from_poly(x)
    if isinstance(x, str):
        return parse_ratfunc(x)
    raise TypeError(f"cannot convert {type(x).__name__} to RatFunc")


ZERO = RatFunc(ZERO_POLY, ONE_POLY, True)
ONE = RatFunc(ONE_POLY, ONE_POLY, True)
Q = RatFunc.q_pow(1)
QINV = RatFunc.q_pow(-1)
EPS = Q - QINV  # q - q^-1


def q(e: int = 1) -> RatFunc:
    return RatFunc.q_pow(e)


@lru_cache(maxsize=None)
def quantum_integer(m: int) -> RatFunc:
    """[m]_q = (q^m - q^-m)/(q - q^-1) = q^(m-1) + q^(m-3) + ... + q^(1-m)."""
    if m < 0:
        raise ValueError("quantum_integer needs m >= 0")
    return RatFunc.from_terms({m - 1 - 2 * j: 1 for j in range(m)})


@lru_cache(maxsize=None)
def quantum_factorial(m: int) -> RatFunc:
    if m < 0:
        raise ValueError("quantum_factorial needs m >= 0")
    out = ONE
    for j in range(2, m + 1):
        out = out * quantum_integer(j)
    return out


def eval_at_one(a: RatFunc) -> Fraction:
    return a.eval_at_one()


# rendering / parsing ------------------------------------------------------

def _render_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def render_poly(p: LaurentPoly) -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for e in range(p.high, p.low - 1, -1):
        c = Fraction(p.coeffs[e - p.low], p.den)
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = _render_coeff(a)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if a == 1 else f"{_render_coeff(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?
        (?P<q>q(?:\s*\^\s*(?P<exp>-?\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> LaurentPoly:
    """Parse a sum of terms ``c*q^e`` (the rendering grammar)."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    terms: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator in {text!r} at {pos}")
        if m.group("coef") is None and m.group("q") is None:
            raise ValueError(f"empty term in {text!r} at {pos}")
        c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        e = 0
        if m.group("q"):
            e = int(m.group("exp")) if m.group("exp") is not None else 1
        terms[e] = terms.get(e, Fraction(0)) + c
        pos = m.end()
        first = False
    return LaurentPoly.from_terms(terms)


def parse_ratfunc(text: str) -> RatFunc:
    """Parse ``poly`` or ``(poly)/(poly)``."""
    s = text.strip()
    m = re.fullmatch(r"\((?P<n>[^()]*)\)\s*/\s*\((?P<d>[^()]*)\)", s)
    if m:
        return RatFunc(parse_poly(m.group("n")), parse_poly(m.group("d")))
    if s.startswith("(") and s.endswith(")") and "(" not in s[1:-1]:
        s = s[1:-1]
    return RatFunc.from_poly(parse_poly(s))
