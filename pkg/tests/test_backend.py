import os
import subprocess
import sys

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from periplectiq import _kernels_py, kernels

ck = pytest.importorskip("periplectiq._ckernels")

poly = st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=12).map(tuple)
nonzero = poly.filter(lambda p: p[-1] != 0)


@settings(max_examples=200, deadline=None)
@given(poly, poly)
def test_mul_agrees(a, b):
    assert ck.mul(a, b) == _kernels_py.mul(a, b)


@settings(max_examples=200, deadline=None)
@given(st.integers(-5, 5), poly, st.integers(-9, 9), st.integers(-5, 5), poly, st.integers(-9, 9))
def test_add_scaled_agrees(la, a, sa, lb, b, sb):
    assert ck.add_scaled(la, a, sa, lb, b, sb) == _kernels_py.add_scaled(la, a, sa, lb, b, sb)


@settings(max_examples=200, deadline=None)
@given(poly, nonzero)
def test_prem_agrees(a, b):
    assert ck.prem(a, b) == _kernels_py.prem(a, b)


@settings(max_examples=200, deadline=None)
@given(poly, nonzero)
def test_divexact_agrees(a, b):
    prod = _kernels_py.mul(a, b)
    assume(any(prod))
    assert ck.divexact(prod, b) == _kernels_py.divexact(prod, b) == _kernels_py.trim(a)


def test_big_coefficients():
    a = (3**80, -(2**70), 1)
    assert ck.mul(a, a) == _kernels_py.mul(a, a)


def test_compiled_backend_is_default():
    if os.environ.get("PERIPLECTIQ_PURE"):
        pytest.skip("fallback forced by environment")
    assert kernels.BACKEND == "cython"


def test_pure_switch_selects_fallback():
    out = subprocess.run([sys.executable, "-c", "from periplectiq import kernels; print(kernels.BACKEND)"],
                         env={**os.environ, "PERIPLECTIQ_PURE": "1"}, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
