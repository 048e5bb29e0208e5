# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer polynomial kernels; mirrors ``_kernels_py`` exactly."""

from cpython.list cimport PyList_New, PyList_SET_ITEM
from cpython.ref cimport Py_INCREF


cdef list _zeros(Py_ssize_t n):
    cdef list out = PyList_New(n)
    cdef Py_ssize_t i
    cdef object z = 0
    for i in range(n):
        Py_INCREF(z)
        PyList_SET_ITEM(out, i, z)
    return out


def trim(a):
    cdef Py_ssize_t n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def mul(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef object x
    if la == 0 or lb == 0:
        return ()
    cdef list out = _zeros(la + lb - 1)
    for i in range(la):
        x = a[i]
        if not x:
            continue
        for j in range(lb):
            out[i + j] = out[i + j] + x * b[j]
    return tuple(out)


def add_scaled(Py_ssize_t alow, tuple a, sa, Py_ssize_t blow, tuple b, sb):
    cdef Py_ssize_t la = len(a), lb = len(b), low, high, off, i, start, end
    if la == 0:
        if lb == 0:
            return 0, ()
        return blow, tuple([sb * x for x in b])
    if lb == 0:
        return alow, tuple([sa * x for x in a])
    low = alow if alow < blow else blow
    high = alow + la if alow + la > blow + lb else blow + lb
    cdef list out = _zeros(high - low)
    off = alow - low
    for i in range(la):
        out[off + i] = sa * a[i]
    off = blow - low
    for i in range(lb):
        out[off + i] = out[off + i] + sb * b[i]
    start = 0
    end = high - low
    while start < end and not out[start]:
        start += 1
    if start == end:
        return 0, ()
    while not out[end - 1]:
        end -= 1
    return low + start, tuple(out[start:end])


def prem(tuple a, tuple b):
    cdef Py_ssize_t db = len(b) - 1, dr, i, shift, e
    cdef list r = list(a)
    cdef object lcb, lcr, f
    dr = len(r) - 1
    if dr < db:
        return trim(r)
    lcb = b[db]
    e = dr - db + 1
    while dr >= db and dr >= 0:
        lcr = r[dr]
        shift = dr - db
        for i in range(dr + 1):
            r[i] = r[i] * lcb
        for i in range(db + 1):
            r[shift + i] = r[shift + i] - lcr * b[i]
        e -= 1
        while dr >= 0 and not r[dr]:
            dr -= 1
        del r[dr + 1:]
    if e > 0:
        f = lcb ** e
        r = [x * f for x in r]
    return tuple(r)


def divexact(tuple a, tuple b):
    cdef Py_ssize_t db, dq, k, i
    cdef object lcb, c, rem
    if len(a) == 0:
        return ()
    db = len(b) - 1
    lcb = b[db]
    cdef list r = list(a)
    dq = len(a) - 1 - db
    if dq < 0:
        raise ArithmeticError("inexact polynomial division")
    cdef list quo = _zeros(dq + 1)
    for k in range(dq, -1, -1):
        c, rem = divmod(r[k + db], lcb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        quo[k] = c
        if c:
            for i in range(db + 1):
                r[k + i] = r[k + i] - c * b[i]
    for i in range(db):
        if r[i]:
            raise ArithmeticError("inexact polynomial division")
    return tuple(quo)
