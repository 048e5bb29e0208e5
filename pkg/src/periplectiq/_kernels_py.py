"""Pure-Python integer polynomial kernels.

Polynomials are dense tuples of Python ints, index = degree, with no
trailing zeros. The empty tuple is the zero polynomial. The compiled module
``_ckernels`` exports the same functions with the same semantics.
"""

from __future__ import annotations


def trim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def mul(a, b):
    if not a or not b:
        return ()
    la, lb = len(a), len(b)
    out = [0] * (la + lb - 1)
    for i in range(la):
        x = a[i]
        if not x:
            continue
        for j in range(lb):
            out[i + j] += x * b[j]
    return tuple(out)


def add_scaled(alow, a, sa, blow, b, sb):
    """Return ``(low, coeffs)`` for ``sa*A + sb*B`` with both ends trimmed.

    ``A = q^alow * a`` and ``B = q^blow * b``.
    """
    if not a:
        if not b:
            return 0, ()
        return blow, tuple(sb * x for x in b)
    if not b:
        return alow, tuple(sa * x for x in a)
    low = alow if alow < blow else blow
    high = max(alow + len(a), blow + len(b))
    out = [0] * (high - low)
    off = alow - low
    for i, x in enumerate(a):
        out[off + i] = sa * x
    off = blow - low
    for i, x in enumerate(b):
        out[off + i] += sb * x
    start = 0
    end = len(out)
    while start < end and not out[start]:
        start += 1
    if start == end:
        return 0, ()
    while not out[end - 1]:
        end -= 1
    return low + start, tuple(out[start:end])


def prem(a, b):
    """Pseudo-remainder of ``a`` by nonzero ``b``: ``lc(b)^(da-db+1) a mod b``."""
    db = len(b) - 1
    r = list(a)
    dr = len(r) - 1
    if dr < db:
        return trim(r)
    lcb = b[db]
    e = dr - db + 1
    while dr >= db and r:
        lcr = r[dr]
        shift = dr - db
        for i in range(dr + 1):
            r[i] *= lcb
        for i in range(db + 1):
            r[shift + i] -= lcr * b[i]
        e -= 1
        while dr >= 0 and not r[dr]:
            dr -= 1
        del r[dr + 1:]
    if e > 0:
        f = lcb ** e
        r = [x * f for x in r]
    return tuple(r)


def divexact(a, b):
    """Quotient of ``a`` by ``b`` when the division is exact over the integers."""
    if not a:
        return ()
    db = len(b) - 1
    lcb = b[db]
    r = list(a)
    dq = len(a) - 1 - db
    if dq < 0:
        raise ArithmeticError("inexact polynomial division")
    quo = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c, rem = divmod(r[k + db], lcb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        quo[k] = c
        if c:
            for i in range(db + 1):
                r[k + i] -= c * b[i]
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return tuple(quo)
