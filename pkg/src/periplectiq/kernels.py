"""Backend selection for the integer polynomial kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. Set ``PERIPLECTIQ_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

BACKEND = "python"

if os.environ.get("PERIPLECTIQ_PURE", "") not in ("1", "true", "yes"):
    try:
        from ._ckernels import add_scaled, divexact, mul, prem, trim  # type: ignore

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on build
        pass

if BACKEND == "python":
    from ._kernels_py import add_scaled, divexact, mul, prem, trim  # noqa: F401

__all__ = ["BACKEND", "add_scaled", "divexact", "mul", "prem", "trim"]
