"""Compare the compiled polynomial kernels with the pure-Python fallback.

Two measurements:

* micro: each kernel on random integer polynomials, both backends in-process
* end to end: one CLI sweep per backend in a subprocess (PERIPLECTIQ_PURE=1
  selects the fallback)

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--degree D] [--json]
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time
import timeit

from periplectiq import _kernels_py

try:
    from periplectiq import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None


def _poly(rng: random.Random, degree: int) -> tuple:
    coeffs = [rng.randint(-50, 50) for _ in range(degree)]
    coeffs.append(rng.randint(1, 50))
    return tuple(coeffs)


def micro(repeat: int, degree: int, seed: int = 7) -> dict:
    rng = random.Random(seed)
    a, b = _poly(rng, degree), _poly(rng, degree // 2)
    prod = _kernels_py.mul(a, b)
    cases = {
        "mul": lambda m: m.mul(a, b),
        "add_scaled": lambda m: m.add_scaled(0, a, 3, 2, b, -5),
        "prem": lambda m: m.prem(a, b),
        "divexact": lambda m: m.divexact(prod, b),
    }
    out = {}
    for name, fn in cases.items():
        row = {"python": min(timeit.repeat(lambda: fn(_kernels_py), number=200, repeat=repeat)) / 200}
        if _ckernels is not None:
            assert fn(_ckernels) == fn(_kernels_py), name
            row["cython"] = min(timeit.repeat(lambda: fn(_ckernels), number=200, repeat=repeat)) / 200
            row["speedup"] = row["python"] / row["cython"]
        out[name] = row
    return out


def end_to_end(argv: list) -> dict:
    out = {}
    for backend, env in (("cython", {}), ("python", {"PERIPLECTIQ_PURE": "1"})):
        t0 = time.perf_counter()
        proc = subprocess.run([sys.executable, "-m", "periplectiq.cli", *argv, "--format", "json"],
                              env={**os.environ, **env}, capture_output=True, text=True)
        out[backend] = {"seconds": time.perf_counter() - t0, "exit": proc.returncode,
                        "reported_backend": json.loads(proc.stderr.strip().splitlines()[-1])["backend"]}
    if out["python"]["seconds"]:
        out["speedup"] = out["python"]["seconds"] / out["cython"]["seconds"]
    return out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--degree", type=int, default=24)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    result = {
        "micro": micro(args.repeat, args.degree),
        "relations n=3 k=2": end_to_end(["relations", "--n", "3", "--k", "2"]),
        "decompose n=3 k=3": end_to_end(["decompose", "--n", "3", "--k", "3"]),
    }
    if args.json:
        print(json.dumps(result, indent=2))
        return
    for name, row in result["micro"].items():
        line = f"{name:11} python {row['python'] * 1e6:9.2f} us"
        if "cython" in row:
            line += f"   cython {row['cython'] * 1e6:9.2f} us   x{row['speedup']:.1f}"
        print(line)
    for name in ("relations n=3 k=2", "decompose n=3 k=3"):
        row = result[name]
        print(f"{name}: cython {row['cython']['seconds']:.2f}s, python {row['python']['seconds']:.2f}s, "
              f"x{row.get('speedup', 0):.2f}")


if __name__ == "__main__":
    main()
