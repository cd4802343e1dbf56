"""Command-line front door: parse vectors and matrices, dispatch the
verifiers, and emit human-readable or canonical JSON reports.

Exit codes form a shell predicate: 0 when every requested check passes,
1 when a checked inequality fails (the report carries a witness), 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from .families import f_kr_all
from .majorize import majorizes, psi_compare, theorem2_scan
from .mellin import identity_check, identity_lhs, integral_I, integral_J
from .series import Catalyst, catalyst_product, taylor_template, tensor
from .spectral import as_int_matrix, f_from_matrix, gram, spectral_summary
from .theorem1 import (ConclusionReport, HypothesisReport, check_hypotheses,
                       check_hypotheses_coeffs, verify_conclusions)
from .vectors import RationalVector, lp_mean, partial_sums_desc

DEFAULT_SEED = 12345
DEFAULT_GRID_POINTS = 101
DEFAULT_TOL = 1e-9


class CliInputError(Exception):
    """Malformed input file or value; maps to exit code 2."""


def frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fracs(values: Sequence[Fraction]) -> list[str]:
    return [frac_str(v) for v in values]


def load_vector(path: str) -> RationalVector:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliInputError(f"{path}: {exc.strerror}") from exc
    try:
        return RationalVector.from_json(text)
    except json.JSONDecodeError as exc:
        raise CliInputError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise CliInputError(f"{path}: {exc}") from exc


def load_matrix(path: str) -> tuple[tuple[int, ...], ...]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliInputError(f"{path}: {exc.strerror}") from exc
    try:
        if path.endswith(".csv"):
            rows = [[int(cell) for cell in row]
                    for row in csv.reader(text.splitlines()) if row]
        else:
            rows = json.loads(text)
        return as_int_matrix(rows)
    except json.JSONDecodeError as exc:
        raise CliInputError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    except (ValueError, TypeError) as exc:
        raise CliInputError(f"{path}: {exc}") from exc


def parse_exponent(text: str) -> float:
    value = text.strip().lower()
    if value in ("inf", "+inf", "infinity"):
        return math.inf
    if value in ("-inf", "-infinity"):
        return -math.inf
    try:
        return float(value)
    except ValueError as exc:
        raise CliInputError(f"bad exponent {text!r}") from exc


def emit(report: dict[str, Any], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        _print_text(report)


def _print_text(report: dict[str, Any], indent: int = 0) -> None:
    pad = "  " * indent
    for key in sorted(report):
        value = report[key]
        if isinstance(value, dict):
            print(f"{pad}{key}:")
            _print_text(value, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{pad}{key}:")
            for row in value:
                cells = ", ".join(f"{k}={row[k]}" for k in sorted(row))
                print(f"{pad}  - {cells}")
        else:
            print(f"{pad}{key}: {value}")


def _hypothesis_json(rep: HypothesisReport) -> dict[str, Any]:
    return {
        "r": rep.r,
        "all_pass": rep.all_pass,
        "sums_equal": rep.sums_equal,
        "checks": [
            {"k": c.k, "fx": frac_str(c.fx), "fy": frac_str(c.fy),
             "kfact_fx": frac_str(c.fx * math.factorial(c.k)),
             "kfact_fy": frac_str(c.fy * math.factorial(c.k)),
             "pass": c.ok}
            for c in rep.checks
        ],
    }


def _conclusion_json(rep: ConclusionReport) -> dict[str, Any]:
    def grid(points):
        return [{"p": pt.p, "nx": pt.x_mean, "ny": pt.y_mean,
                 "margin": pt.margin, "pass": pt.ok} for pt in points]

    return {
        "r": rep.r,
        "tol": rep.tol,
        "sums_equal": rep.sums_equal,
        "low_grid": grid(rep.low_grid),
        "high_grid": grid(rep.high_grid),
        "low_all_pass": rep.low_all_pass,
        "high_all_pass": rep.high_all_pass,
    }


def cmd_norms(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    x = load_vector(args.x)
    exponents = ([parse_exponent(p) for p in args.p]
                 if args.p else [-math.inf, -2.0, -1.0, 0.0, 0.5, 1.0, 2.0, math.inf])
    rows = [{"p": p, "mean": lp_mean(x, p)} for p in exponents]
    report = {
        "command": "norms",
        "seed": args.seed,
        "n": len(x),
        "entries": fracs(x.entries),
        "partial_sums_desc": fracs(partial_sums_desc(x)),
        "means": rows,
    }
    return 0, report


def cmd_fkr(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    x = load_vector(args.x)
    table = f_kr_all(x, args.r)
    ks = [args.k] if args.k is not None else list(range(len(table)))
    rows = []
    for k in ks:
        if not 0 <= k < len(table):
            raise CliInputError(f"k={k} outside 0..{len(table) - 1}")
        rows.append({"k": k, "value": frac_str(table[k]),
                     "kfact_value": frac_str(table[k] * math.factorial(k))})
    report = {
        "command": "fkr",
        "seed": args.seed,
        "n": len(x),
        "r": args.r,
        "values": rows,
    }
    return 0, report


def _float_eigen_vector(matrix) -> RationalVector:
    # float spectrum for the (tolerance-based) norm grids only; exact
    # quantities never go through here
    import numpy as np

    eig = np.linalg.eigvalsh(np.array(matrix, dtype=float))
    return RationalVector([max(0.0, float(v)) for v in eig])


def cmd_theorem1(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    vector_mode = args.x is not None
    if vector_mode != (args.y is not None) or vector_mode == (args.qx is not None):
        raise CliInputError("provide either --x/--y vectors or --qx/--qy matrices")
    if (args.qx is None) != (args.qy is None):
        raise CliInputError("matrix mode needs both --qx and --qy")

    r_values = list(range(1, args.r_max + 1)) if args.r_max else [args.r]

    if vector_mode:
        x, y = load_vector(args.x), load_vector(args.y)
        if len(x) != len(y):
            raise CliInputError("vectors must have equal length")
        hypothesis_reports = [check_hypotheses(x, y, r) for r in r_values]
        grid_x, grid_y = x, y
    else:
        mx, my = gram(load_matrix(args.qx)), gram(load_matrix(args.qy))
        if len(mx) != len(my):
            raise CliInputError("factor matrices must have equal row counts")
        n = len(mx)
        hypothesis_reports = [
            check_hypotheses_coeffs(f_from_matrix(mx, r), f_from_matrix(my, r), r, n)
            for r in r_values
        ]
        grid_x, grid_y = _float_eigen_vector(mx), _float_eigen_vector(my)

    certified = None
    for rep in hypothesis_reports:
        if rep.all_pass:
            certified = rep.r

    # grids are always measured when a definite order is at hand; they only
    # count toward the exit code once the hypotheses certify that order
    if certified is not None:
        measure_r = certified
    elif len(r_values) == 1:
        measure_r = r_values[0]
    else:
        measure_r = None
    conclusion = None
    if measure_r is not None:
        measured_rep = next(h for h in hypothesis_reports if h.r == measure_r)
        conclusion = verify_conclusions(grid_x, grid_y, measure_r,
                                        grid_points=args.grid_points,
                                        tol=args.tol,
                                        sums_equal=measured_rep.sums_equal)

    asserted = certified is not None
    ok = (certified == max(r_values)
          and (not asserted or conclusion is None
               or conclusion.all_asserted_pass))
    report = {
        "command": "theorem1",
        "seed": args.seed,
        "mode": "vectors" if vector_mode else "matrices",
        "requested_r": r_values,
        "hypotheses": [_hypothesis_json(h) for h in hypothesis_reports],
        "certified_r": certified,
        "certified_interval": [0.0, certified + 1.0] if certified else None,
        "conclusions": _conclusion_json(conclusion) if conclusion else None,
        "conclusions_asserted": asserted,
        "pass": ok,
    }
    return (0 if ok else 1), report


def cmd_majorize(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    x, y = load_vector(args.x), load_vector(args.y)
    if len(x) != len(y):
        raise CliInputError("vectors must have equal length")
    verdict = majorizes(x, y)
    report: dict[str, Any] = {
        "command": "majorize",
        "seed": args.seed,
        "holds": verdict.holds,
        "sums_equal": verdict.sum_equal,
        "first_violation": (
            {"k": verdict.first_violation[0],
             "x_partial": frac_str(verdict.first_violation[1]),
             "y_partial": frac_str(verdict.first_violation[2])}
            if verdict.first_violation else None),
        "x_partial_sums": fracs(partial_sums_desc(x)),
        "y_partial_sums": fracs(partial_sums_desc(y)),
    }
    if args.psi_grid:
        rows = psi_compare(x, y, [parse_exponent(v) for v in args.psi_grid])
        report["psi"] = [{"lambda": r.lam, "lhs": r.lhs, "rhs": r.rhs,
                          "holds": r.holds} for r in rows]
    return (0 if verdict.holds else 1), report


def cmd_theorem2(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    x, y = load_vector(args.x), load_vector(args.y)
    if len(x) != len(y):
        raise CliInputError("vectors must have equal length")
    rep = theorem2_scan(x, y, args.k_max)

    def cell(v):
        return ({"r": v.r, "k": v.k, "lhs": frac_str(v.lhs),
                 "rhs": frac_str(v.rhs)} if v else None)

    ok = (rep.sums_equal and rep.majorization_holds
          and rep.distinct_var_violation is None
          and rep.subset_power_violation is None)
    report = {
        "command": "theorem2",
        "seed": args.seed,
        "k_max": rep.k_max,
        "sums_equal": rep.sums_equal,
        "majorization_holds": rep.majorization_holds,
        "distinct_var_family_violation": cell(rep.distinct_var_violation),
        "subset_power_family_violation": cell(rep.subset_power_violation),
        "cells_checked": rep.cells_checked,
        "note": rep.note,
        "pass": ok,
    }
    return (0 if ok else 1), report


def cmd_spectral(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    if (args.q is None) == (args.matrix is None):
        raise CliInputError("provide exactly one of --q (factor) or --matrix (square)")
    if args.q is not None:
        matrix = gram(load_matrix(args.q))
        assume_psd = True
    else:
        matrix = load_matrix(args.matrix)
        assume_psd = False
    rs = sorted(set(args.r)) if args.r else [1]
    try:
        summary = spectral_summary(matrix, rs=rs, assume_psd=assume_psd)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    report = {
        "command": "spectral",
        "seed": args.seed,
        "n": len(matrix),
        "matrix": [list(row) for row in matrix],
        "e_coeffs": fracs(summary.e_coeffs),
        "f_tables": {
            str(r): [{"k": k, "value": frac_str(v),
                      "kfact_value": frac_str(v * math.factorial(k))}
                     for k, v in enumerate(table)]
            for r, table in summary.f_coeffs.items()
        },
    }
    return 0, report


def cmd_mellin_validate(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    if args.a < 0:
        raise CliInputError("need a >= 0")
    try:
        lhs = identity_lhs(args.which, args.a, args.p, args.r)
        error = identity_check(args.which, args.a, args.p, args.r)
        base = (integral_I(args.r, args.p) if args.which == "id1"
                else integral_J(args.r, args.p))
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    ok = error <= args.tol
    report = {
        "command": "mellin-validate",
        "seed": args.seed,
        "which": args.which,
        "r": args.r,
        "p": args.p,
        "a": args.a,
        "normalizer": {"value": base.value,
                       "estimated_error": base.estimated_error,
                       "node_count": base.node_count},
        "lhs": lhs.value,
        "target": float(args.a) ** args.p if args.a > 0 else 0.0,
        "relative_error": error,
        "tol": args.tol,
        "pass": ok,
    }
    return (0 if ok else 1), report


def cmd_catalyst(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    x = load_vector(args.x)
    c_vec = load_vector(args.c)
    try:
        catalyst = Catalyst(c_vec.entries)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    tpl = taylor_template(args.r)
    degree = args.degree if args.degree is not None else len(x) * len(catalyst) * args.r
    cx = catalyst_product(x, catalyst, tpl, degree)
    report: dict[str, Any] = {
        "command": "catalyst",
        "seed": args.seed,
        "r": args.r,
        "degree_bound": degree,
        "tensor_x": fracs(tensor(x, catalyst).entries),
        "x_coeffs": fracs(cx.coeffs),
    }
    code = 0
    if args.y:
        y = load_vector(args.y)
        if len(y) != len(x):
            raise CliInputError("vectors must have equal length")
        cy = catalyst_product(y, catalyst, tpl, degree)
        rows = [{"k": k, "cx": frac_str(a), "cy": frac_str(b), "pass": a <= b}
                for k, (a, b) in enumerate(zip(cx.coeffs, cy.coeffs))]
        report["y_coeffs"] = fracs(cy.coeffs)
        report["comparison"] = rows
        report["pass"] = all(row["pass"] for row in rows)
        code = 0 if report["pass"] else 1
    return code, report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympineq",
        description="Exact symmetric-polynomial families, majorization checks, "
                    "and lp-mean inequality verifiers.")
    parser.add_argument("--format", choices=("text", "json"), default="json",
                        help="report format (default json)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed recorded in reports; fixed default for "
                             "reproducibility")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norms", help="lp means and partial sums of one vector")
    p.add_argument("--x", required=True, help="vector file (JSON array)")
    p.add_argument("--p", action="append",
                   help="exponent (repeatable; accepts inf/-inf)")
    p.set_defaults(func=cmd_norms)

    p = sub.add_parser("fkr", help="exact order-r family values of one vector")
    p.add_argument("--x", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="single k (default: all)")
    p.set_defaults(func=cmd_fkr)

    p = sub.add_parser("theorem1",
                       help="check the polynomial hypotheses and measure the "
                            "lp-mean conclusion grids")
    p.add_argument("--x", help="vector file for the left side")
    p.add_argument("--y", help="vector file for the right side")
    p.add_argument("--qx", help="integer factor matrix for the left side "
                                "(Gram product is taken)")
    p.add_argument("--qy", help="integer factor matrix for the right side")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--r", type=int, help="single template order")
    group.add_argument("--r-max", type=int, help="scan orders 1..r_max")
    p.add_argument("--grid-points", type=int, default=DEFAULT_GRID_POINTS)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_theorem1)

    p = sub.add_parser("majorize", help="exact majorization verdict")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--psi-grid", action="append",
                   help="lambda values for the concave test-function probe")
    p.set_defaults(func=cmd_majorize)

    p = sub.add_parser("theorem2",
                       help="scan the majorization characterization via the "
                            "distinct-variable and subset-power families")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--k-max", type=int, default=8)
    p.set_defaults(func=cmd_theorem2)

    p = sub.add_parser("spectral",
                       help="exact determinant coefficients of a matrix "
                            "pipeline")
    p.add_argument("--q", help="integer factor matrix (Gram product is taken)")
    p.add_argument("--matrix", help="square integer matrix used as-is")
    p.add_argument("--r", type=int, action="append",
                   help="family order (repeatable; default 1)")
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("mellin-validate",
                       help="validate the scaled-transform identities "
                            "numerically")
    p.add_argument("--which", choices=("id1", "id2"), required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_mellin_validate)

    p = sub.add_parser("catalyst",
                       help="family values on the tensor product with a "
                            "catalyst vector")
    p.add_argument("--x", required=True)
    p.add_argument("--c", required=True, help="catalyst vector file (c_0 = 1)")
    p.add_argument("--y", help="optional right side for per-k comparison")
    p.add_argument("--r", type=int, default=1, help="template order")
    p.add_argument("--degree", type=int, default=None)
    p.set_defaults(func=cmd_catalyst)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, report = args.func(args)
    except (CliInputError, ValueError) as exc:
        # library ValueErrors are contract violations of the inputs
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
