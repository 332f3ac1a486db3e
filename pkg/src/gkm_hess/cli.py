"""
Command-line interface.

    gkm-hess conditions 2,3,3
    gkm-hess basis 2,3,3 --format json
    gkm-hess poincare 3,3,3
    gkm-hess schubert 3 --double
    gkm-hess csf 2,3,3 --vars 3
    gkm-hess decompose 2,3,3 1 --element one.json
    gkm-hess verify --suite modular --n 4 --seed 0

Exit codes: 0 success, 1 a check failed, 2 usage or parse error, 3 internal
error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .csf import csf_truncated, squarefree_coefficient
from .flowup import flow_up_basis, poincare_series
from .gkm import (
    GkmElement, HessenbergFunction, almost_stable_decompose,
    almost_stable_factor, almost_stable_parts, failed_condition, hessenberg_conditions,
    is_almost_stable, is_stable, rvars, phi, stable_decompose,
)
from .schubert import double_schubert_table, schubert_table
from .symgroup import all_permutations
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    """Bad arguments or input files; reported with exit code 2."""


def _hessenberg(text: str) -> HessenbergFunction:
    try:
        return HessenbergFunction.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, data: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


# -- commands ------------------------------------------------------------------------

def cmd_conditions(args) -> int:
    h = _hessenberg(args.h)
    C = hessenberg_conditions(h)
    rows = []
    for i in range(1, h.n):
        tau = is_almost_stable(C, i)
        if is_stable(C, i):
            kind = "stable"
        elif tau is not None:
            kind = "almost-stable"
        elif (i, i + 1) in C:
            kind = "neither"
        else:
            kind = "s_i not in C"
        rows.append({"i": i, "kind": kind, "tau": None if tau is None else str(tau)})
    lines = [f"C({h}) = {C}"]
    for row in rows:
        extra = f" tau={row['tau']}" if row["tau"] else ""
        lines.append(f"i={row['i']}: {row['kind']}{extra}")
    _emit(args, {"h": str(h), "conditions": [str(t) for t in C], "table": rows}, "\n".join(lines))
    return EXIT_OK


def cmd_basis(args) -> int:
    h = _hessenberg(args.h)
    basis = flow_up_basis(h)
    lines = [f"flow-up basis of H_C for h = {h}"]
    for w, f in basis:
        support = ", ".join(f"{v}: {p}" for v, p in f.items() if p)
        lines.append(f"f_{w} (degree {basis.degrees[w]}): {support}")
    _emit(args, {"h": str(h), "basis": basis.to_list()}, "\n".join(lines))
    return EXIT_OK


def cmd_poincare(args) -> int:
    h = _hessenberg(args.h)
    series = poincare_series(h)
    _emit(args, {"h": str(h), "poincare": str(series), "coefficients": list(series.coefficients)},
          str(series))
    return EXIT_OK


def cmd_schubert(args) -> int:
    n = args.n
    if not 1 <= n <= 5:
        raise UsageError("n must be between 1 and 5")
    table = double_schubert_table(n) if args.double else schubert_table(n)
    name = "S'" if args.double else "S"
    lines = [f"{name}_{w} = {table[w]}" for w in all_permutations(n)]
    _emit(args, {"n": n, "double": args.double, "polynomials": table.to_dict()}, "\n".join(lines))
    return EXIT_OK


def cmd_csf(args) -> int:
    h = _hessenberg(args.h)
    m = h.n if args.vars is None else args.vars
    if m < 1:
        raise UsageError("--vars must be positive")
    f = csf_truncated(h, m)
    data = {"h": str(h), "vars": m, "csf": str(f)}
    lines = [f"csf({h}) in x1..x{m} = {f}"]
    if m >= h.n:
        coeff = squarefree_coefficient(f, h.n)
        data["squarefree_coefficient"] = str(coeff)
        lines.append(f"coefficient of x1...x{h.n}: {coeff}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def _load_element(path: str, n: int) -> GkmElement:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        f = GkmElement.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{path}: not a serialized GKM element: {exc}") from None
    if f.n != n:
        raise UsageError(f"{path}: element has n={f.n}, Hessenberg function has n={n}")
    return f


def cmd_decompose(args) -> int:
    h = _hessenberg(args.h)
    n, i = h.n, args.i
    if not 1 <= i < n:
        raise UsageError(f"index i must satisfy 1 <= i < {n}")
    C = hessenberg_conditions(h)
    f = _load_element(args.element, n)
    bad = failed_condition(f, C)
    if bad is not None:
        raise UsageError(f"element is not in H_C for h = {h}: violates {bad[0]} at {bad[1]}")
    R = rvars(n)
    if is_stable(C, i):
        g, hh = stable_decompose(f, i, C)
        ok = f == g + phi(R.x(i) - R.x(i + 1)) * hh
        data = {"case": "stable", "h": str(h), "i": i, "g": g.to_dict(), "h_component": hh.to_dict(),
                "reconstructs": ok}
        text = (f"C({h}) is s_{i}-stable; f = g + (x{i} - x{i + 1}) h with\n"
                f"g = {g}\nh = {hh}\nreconstruction: {'ok' if ok else 'FAILED'}")
    elif is_almost_stable(C, i) is not None:
        tau, c_minus, c_plus = almost_stable_parts(C, i)
        p, m = almost_stable_decompose(f, i, C)
        ok = f == p + almost_stable_factor(C, i) * m
        data = {"case": "almost-stable", "h": str(h), "i": i, "tau": str(tau),
                "c_minus": [str(t) for t in c_minus], "c_plus": [str(t) for t in c_plus],
                "p": p.to_dict(), "m": m.to_dict(), "reconstructs": ok}
        text = (f"C({h}) is almost s_{i}-stable with tau = {tau}\n"
                f"C- = {c_minus}\nC+ = {c_plus}\np = {p}\nm = {m}\n"
                f"reconstruction: {'ok' if ok else 'FAILED'}")
    else:
        raise UsageError(f"C({h}) is neither s_{i}-stable nor almost s_{i}-stable")
    _emit(args, data, text)
    return EXIT_OK if ok else EXIT_FAIL


def _ns(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        ns = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise UsageError(f"--n expects integers separated by commas, got {text!r}") from None
    if not ns or any(not 1 <= n <= 5 for n in ns):
        raise UsageError("--n values must lie between 1 and 5")
    return ns


def cmd_verify(args) -> int:
    ns = _ns(args.n)
    if args.samples is not None and args.samples < 1:
        raise UsageError("--samples must be positive")
    start = time.perf_counter()
    report = run_suite(args.suite, ns, args.seed, args.samples)
    report.duration = time.perf_counter() - start if args.timing else None
    if args.format == "json":
        print(report.to_json(timing=args.timing))
    else:
        print(report.to_text(verbose=args.verbose))
    return EXIT_OK if report.passed else EXIT_FAIL


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    common.add_argument("--timing", action="store_true",
                        help="include wall-clock duration (breaks byte-identical output)")

    parser = argparse.ArgumentParser(
        prog="gkm-hess",
        description="Exact computations in GKM rings of regular semisimple Hessenberg varieties.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("conditions", parents=[common], help="condition set C(h) and stability table")
    p.add_argument("h", help="Hessenberg function, e.g. 2,3,3")
    p.set_defaults(func=cmd_conditions)

    p = sub.add_parser("basis", parents=[common], help="flow-up basis of H_C(h)")
    p.add_argument("h")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("poincare", parents=[common], help="Poincare series of H_C(h)")
    p.add_argument("h")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("schubert", parents=[common], help="(double) Schubert polynomials")
    p.add_argument("n", type=int)
    p.add_argument("--double", action="store_true", help="double Schubert polynomials")
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("csf", parents=[common], help="chromatic quasisymmetric function")
    p.add_argument("h")
    p.add_argument("--vars", type=int, default=None, metavar="M",
                   help="number of color variables (default: n)")
    p.set_defaults(func=cmd_csf)

    p = sub.add_parser("decompose", parents=[common], help="stable or almost-stable decomposition")
    p.add_argument("h")
    p.add_argument("i", type=int)
    p.add_argument("--element", required=True, metavar="FILE", help="JSON-serialized GKM element")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--n", default=None, metavar="N[,N...]", help="sizes to run (default: per suite)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=None, help="random samples per case")
    p.add_argument("-v", "--verbose", action="store_true", help="list passing checks as well")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - any other failure is an internal error
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
