"""Exact computations with the quantized periplectic superalgebra on V^{⊗k}."""

from .kernels import BACKEND
from .qrat import (
    DivisionByZero,
    LaurentPoly,
    PoleAtOne,
    RatFunc,
    eval_at_one,
    quantum_factorial,
    quantum_integer,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DivisionByZero",
    "LaurentPoly",
    "PoleAtOne",
    "RatFunc",
    "eval_at_one",
    "quantum_factorial",
    "quantum_integer",
]
