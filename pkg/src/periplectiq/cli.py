"""Command-line driver: ``periplectiq {relations,maximal,decompose,character}``.

Exit status is 0 when every check passes, 1 on a verification failure and 2
on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import kernels
from .combinat import PatternError, parse_pattern, parse_tableau
from .modtools import (
    CertificateFailure,
    contraction_reduction,
    decomposition_report,
    maximal_report,
)
from .qbrauer import CONVENTIONS, SymmetrizerDegenerate, maximal_candidate
from .relcheck import check_centralizer_and_symmetrizers, run_all
from .tensorrep import TensorModule, format_weight

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _telemetry(t0: float, **extra) -> dict:
    out = {"seconds": round(time.perf_counter() - t0, 3), "backend": kernels.BACKEND,
           "threads": int(os.environ.get("PERIPLECTIQ_THREADS", "1") or 1)}
    out.update(extra)
    return out


def cmd_relations(args) -> tuple[dict, int]:
    reports = run_all(args.n, args.k, mutate=args.mutate)
    if args.k in (2, 3):
        reports.append(check_centralizer_and_symmetrizers(args.n, args.k, args.mutate))
    suites = [r.to_json() for r in reports]
    failures = sum(len(r.failures) for r in reports)
    warnings = [note for r in reports for note in r.notes if "only in the" in note]
    payload = {"command": "relations", "n": args.n, "k": args.k, "mutate": args.mutate,
               "suites": suites, "failures": failures, "warnings": warnings}
    args.telemetry["suite_seconds"] = {r.suite: round(r.seconds, 3) for r in reports}
    if args.mutate:
        # negative controls: every suite must have caught its perturbation
        silent = [r.suite for r in reports if not r.failures]
        payload["undetected_mutations"] = silent
        return payload, EXIT_FAIL
    return payload, EXIT_FAIL if failures else EXIT_OK


def cmd_maximal(args) -> tuple[dict, int]:
    if args.tableau or args.pattern:
        tau = parse_tableau(args.tableau) if args.tableau else None
        pattern = parse_pattern(args.pattern or "")
        v = maximal_candidate(tau, pattern, args.n, args.k, args.convention)
        m = TensorModule(args.n, args.k)
        killed = all(op.apply(v).is_zero() for op in m.raising())
        payload = {"command": "maximal", "n": args.n, "k": args.k, "tableau": args.tableau or "",
                   "pattern": pattern.to_json(), "vector": v.to_json(), "annihilated": killed}
        return payload, EXIT_OK if killed and v else EXIT_FAIL
    rep = maximal_report(args.n, args.k, args.convention)
    rep["command"] = "maximal"
    ok = rep["all_candidates_maximal"] and (rep["candidates_span_kernel"] or not rep["theorem_range"])
    return rep, EXIT_OK if ok else EXIT_FAIL


def cmd_decompose(args) -> tuple[dict, int]:
    if args.k == 4:
        rep = contraction_reduction(args.n, 4, args.convention)
        rep["command"] = "decompose"
        return rep, EXIT_OK if rep["not_completely_reducible"] else EXIT_FAIL
    if args.k not in (2, 3):
        raise UsageError("decompose needs --k 2, 3 or 4")
    rep = decomposition_report(args.n, args.k, args.convention)
    rep["command"] = "decompose"
    return rep, EXIT_OK


def cmd_character(args) -> tuple[dict, int]:
    m = TensorModule(args.n, args.k)
    table = [{"weight": format_weight(w), "multiplicity": c} for w, c in m.character().items()]
    return {"command": "character", "n": args.n, "k": args.k, "dimension": m.dim,
            "weights": table}, EXIT_OK


COMMANDS = {"relations": cmd_relations, "maximal": cmd_maximal, "decompose": cmd_decompose,
            "character": cmd_character}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="periplectiq",
                                description="Exact checks for the quantized periplectic superalgebra.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--n", type=int, default=2, help="rank, 2..4")
    p.add_argument("--k", type=int, default=2, help="tensor power, 1..4")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--mutate", action="store_true", help="negative controls: perturb each suite")
    p.add_argument("--tableau", help="standard tableau such as 12/3")
    p.add_argument("--pattern", help="contraction pattern such as 1-3,2-4")
    p.add_argument("--convention", choices=CONVENTIONS, default="right",
                   help="permutation composition order")
    return p


def _validate(args):
    if not 2 <= args.n <= 4:
        raise UsageError("--n must lie in 2..4 (the index set I = {1..n-1} must be nonempty)")
    if not 1 <= args.k <= 4:
        raise UsageError("--k must lie in 1..4")
    if args.command == "relations" and args.k == 4 and args.n > 2:
        raise UsageError("relations at k=4 is limited to n=2")


def _render_text(payload: dict) -> str:
    lines = []

    def walk(obj, indent=0):
        pad = "  " * indent
        if isinstance(obj, dict):
            for key, val in obj.items():
                if isinstance(val, (dict, list)) and val:
                    lines.append(f"{pad}{key}:")
                    walk(val, indent + 1)
                else:
                    lines.append(f"{pad}{key}: {val}")
        elif isinstance(obj, list):
            for item in obj:
                if isinstance(item, dict) and "case_id" in item:
                    lines.append(f"{pad}{item['status']:9} {item['case_id']} {item.get('reading', '')}".rstrip())
                elif isinstance(item, (dict, list)):
                    lines.append(f"{pad}-")
                    walk(item, indent + 1)
                else:
                    lines.append(f"{pad}- {item}")

    walk(payload)
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    t0 = time.perf_counter()
    args.telemetry = {"matrix_dim": (2 * args.n) ** args.k}
    try:
        _validate(args)
        payload, code = COMMANDS[args.command](args)
    except (UsageError, PatternError, ValueError) as exc:
        print(f"periplectiq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SymmetrizerDegenerate as exc:
        payload, code = {"command": args.command, "warning": f"symmetrizer degenerate: {exc}"}, EXIT_FAIL
    except CertificateFailure as exc:
        payload, code = {"command": args.command, "certificate_failure": str(exc)}, EXIT_FAIL
    # telemetry goes to stderr so the report itself stays byte-stable
    print(json.dumps(_telemetry(t0, **args.telemetry)), file=sys.stderr)
    if args.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False, default=str) + "\n"
    else:
        text = _render_text(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
