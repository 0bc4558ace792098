"""Command-line front end.

Exposes evaluation and duality of periodic continued fractions, variety
membership and conic projection, the table searches, and the 2-adic reports.
Everything is computed exactly; decimals are display-only and every printed
digit is certified.  Exit codes: 0 for a positive outcome (converges, member,
match), 1 for a mathematical negative, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .continuant import INF
from .converge import PARABOLIC, rate, verdict
from .intervals import decimal_str
from .pcf import Pcf, dual
from .ring import (
    ExtElem,
    RingElem,
    format_elem,
    parse_elem,
    sign_under_embedding,
    sqrt_in_ring,
)
from .search import TableName, ljunggren_oracle, reproduce_table, solve_e_curve
from .skolem import aprime_z_table, format_aprime_table, l2_scan, oryx_check, rst_table
from .variety import (
    TargetRoots,
    VarietyPoint,
    e_curve_residual,
    fp_conic_residual,
    fp_project,
    variety_residuals,
)

MATH_NEGATIVE = 1
USAGE_ERROR = 2


def _is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    n = abs(n)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


@dataclass
class CliConfig:
    """Knobs shared by every subcommand."""

    d: int = 2
    precision: int = 50
    kmax: int = 20
    box: int = 5
    ljunggren: int = 1000
    jmax: int = 30
    format: str = "text"

    def __post_init__(self):
        if not _is_squarefree(self.d):
            raise ValueError(f"ambient discriminant {self.d} is not squarefree")
        for label in ("precision", "kmax", "box", "ljunggren", "jmax"):
            if getattr(self, label) <= 0:
                raise ValueError(f"{label} must be positive")
        if self.format not in ("text", "json-lines"):
            raise ValueError(f"unknown output format {self.format!r}")


def _print_record(record: dict):
    print(json.dumps(record, sort_keys=True))


def _ring_form(e: ExtElem, d: int) -> Optional[RingElem]:
    th = e.theta
    if isinstance(th, RingElem) and th.d is not None and th.b:
        return None
    s = sqrt_in_ring(th, d)
    if s is None:
        return None
    return e.x + e.branch * e.y * s


def _value_text(x, d: int = 2) -> str:
    if x is INF:
        return "inf"
    if isinstance(x, ExtElem):
        simple = _ring_form(x, d)
        if simple is not None:
            return format_elem(simple)
        if not x.x:
            body = f"sqrt({format_elem(x.y * x.y * x.theta)})"
            return body if x.branch * sign_under_embedding(x.y) >= 0 else "-" + body
        return str(x)
    if isinstance(x, RingElem):
        return format_elem(x)
    return str(x)


def _decimal_or_none(x, digits: int) -> Optional[str]:
    if x is None or x is INF:
        return None
    return decimal_str(x, digits)


def _verdict_label(v) -> str:
    return "Converges" if v.converges else f"Diverges({v.reason})"


def _emit_pcf_result(P: Pcf, cfg: CliConfig, heading: str) -> int:
    v = verdict(P)
    dec = _decimal_or_none(v.value, cfg.precision) if v.converges else None
    if cfg.format == "json-lines":
        _print_record(
            {
                "pcf": str(P),
                "residuals": None,
                "verdict": _verdict_label(v),
                "value_decimal": dec,
            }
        )
        return 0 if v.converges else MATH_NEGATIVE
    print(f"{heading}: {P}")
    print(f"verdict: {_verdict_label(v)}")
    if v.note:
        print(f"note: {v.note}")
    if v.converges:
        print(f"value: {_value_text(v.value, cfg.d)}")
        if dec is not None:
            print(f"decimal: {dec}")
        if v.reason == PARABOLIC:
            print("rate: sub-exponential (tangent case)")
        else:
            r = rate(P)
            print(
                f"rate: ~{float(r.convergents_per_digit.mid):.6g} convergents per digit"
                f" (|eigenvalue| ~ {float(r.eigen_abs.mid):.6g})"
            )
        return 0
    if v.pariah_index is not None:
        print(f"pariah index: {v.pariah_index}")
        print(f"pariah limit: {_value_text(v.pariah_limit, cfg.d)}")
        if v.pariah_limit is not INF:
            print(f"pariah limit decimal: {decimal_str(v.pariah_limit, cfg.precision)}")
    return MATH_NEGATIVE


def cmd_eval(args, cfg: CliConfig) -> int:
    P = Pcf.parse(args.pcf, cfg.d)
    return _emit_pcf_result(P, cfg, "pcf")


def cmd_dual(args, cfg: CliConfig) -> int:
    P = Pcf.parse(args.pcf, cfg.d)
    return _emit_pcf_result(dual(P), cfg, "dual")


def _parse_type(text: str) -> Tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"type must be two comma-separated integers, got {text!r}")
    n, k = (int(p) for p in parts)
    if n < 0 or k < 1:
        raise ValueError(f"type ({n},{k}) is out of range")
    return n, k


def _parse_tuple(text: str, d: int) -> Tuple[RingElem, ...]:
    return tuple(parse_elem(p, d) for p in text.split(","))


def _target_of(args, cfg: CliConfig) -> TargetRoots:
    abc = _parse_tuple(args.target, cfg.d)
    if len(abc) != 3:
        raise ValueError("target must be three comma-separated coefficients")
    return TargetRoots(*abc)


def _coords_text(coords: Sequence[RingElem]) -> str:
    return ", ".join(format_elem(c) for c in coords)


def cmd_variety_check(args, cfg: CliConfig) -> int:
    n, k = _parse_type(args.type)
    T = _target_of(args, cfg)
    all_member = True
    for text in args.point:
        coords = _parse_tuple(text, cfg.d)
        p = VarietyPoint(coords, n, k)
        res = variety_residuals(T, p)
        member = not any(res)
        all_member = all_member and member
        if cfg.format == "json-lines":
            _print_record(
                {
                    "coords": [format_elem(c) for c in coords],
                    "residuals": [format_elem(r) for r in res],
                    "verdict": "member" if member else "non-member",
                    "value_decimal": None,
                }
            )
        else:
            tag = "member" if member else "NOT a member"
            print(f"point ({_coords_text(coords)}): residuals ({_coords_text(res)}), {tag}")
    return 0 if all_member else MATH_NEGATIVE


def cmd_fp_project(args, cfg: CliConfig) -> int:
    n, k = _parse_type(args.type)
    T = _target_of(args, cfg)
    all_on = True
    for text in args.point:
        coords = _parse_tuple(text, cfg.d)
        p = VarietyPoint(coords, n, k)
        try:
            xy = fp_project(T, p)
        except ValueError as exc:
            print(f"math error: {exc}", file=sys.stderr)
            all_on = False
            continue
        r = fp_conic_residual(T, k, xy)
        on = not r
        all_on = all_on and on
        if cfg.format == "json-lines":
            _print_record(
                {
                    "coords": [format_elem(c) for c in xy],
                    "residuals": [format_elem(r)],
                    "verdict": "on-conic" if on else "off-conic",
                    "value_decimal": None,
                }
            )
        else:
            tag = "on the conic" if on else "OFF the conic"
            print(
                f"point ({_coords_text(coords)}) -> ({_coords_text(xy)}): "
                f"residual {format_elem(r)}, {tag}"
            )
    return 0 if all_on else MATH_NEGATIVE


def _entry_record(entry, status: str) -> dict:
    rec = {"residuals": None, "verdict": status, "value_decimal": None}
    if isinstance(entry, Pcf):
        rec["pcf"] = str(entry)
    else:
        coords = entry if isinstance(entry, tuple) else (entry,)
        rec["coords"] = [format_elem(c) for c in coords]
    return rec


def cmd_search_table(args, cfg: CliConfig) -> int:
    try:
        name = TableName(args.name)
    except ValueError:
        known = ", ".join(t.value for t in TableName)
        raise ValueError(f"unknown table {args.name!r}; known tables: {known}")
    report = reproduce_table(name)
    if cfg.format == "json-lines":
        for entry in report.found:
            _print_record(_entry_record(entry, "match" if entry in report.expected else "extra"))
        for entry in report.missing:
            _print_record(_entry_record(entry, "missing"))
    else:
        print(report)
    return 0 if report.match else MATH_NEGATIVE


def cmd_search_ljunggren(args, cfg: CliConfig) -> int:
    bound = args.bound if args.bound is not None else cfg.ljunggren
    if bound <= 0:
        raise ValueError("bound must be positive")
    sols = ljunggren_oracle(bound)
    if cfg.format == "json-lines":
        for x, y in sols:
            _print_record(
                {
                    "coords": [str(x), str(y)],
                    "residuals": [str(x * x + 1 - 2 * y ** 4)],
                    "verdict": "solution",
                    "value_decimal": None,
                }
            )
    else:
        for x, y in sols:
            print(f"({x}, {y})")
        print(f"{len(sols)} solutions with |y| <= {bound}")
    return 0


def cmd_search_ecurve(args, cfg: CliConfig) -> int:
    pi = parse_elem(args.pi, cfg.d)
    kmax = args.kmax if args.kmax is not None else cfg.kmax
    if kmax <= 0:
        raise ValueError("kmax must be positive")
    pts = solve_e_curve(pi, kmax)
    if cfg.format == "json-lines":
        for a, b in pts:
            _print_record(
                {
                    "coords": [format_elem(a), format_elem(b)],
                    "residuals": [format_elem(e_curve_residual(pi, a, b))],
                    "verdict": "on-curve",
                    "value_decimal": None,
                }
            )
    else:
        for a, b in pts:
            print(f"({format_elem(a)}, {format_elem(b)})")
        print(f"{len(pts)} points with unit-scan exponent up to {kmax}")
    return 0


def cmd_skolem(args, cfg: CliConfig) -> int:
    if args.report == "rst":
        print(rst_table(args.nmax))
        return 0
    if args.report == "table":
        print(format_aprime_table(aprime_z_table()))
        return 0
    if args.report == "oryx":
        rep = oryx_check(args.jmax)
        print(rep)
        return 0 if rep.all_pass else MATH_NEGATIVE
    ks = l2_scan(args.kmax)
    print("exponents with unit-norm v-coefficient: {" + ", ".join(map(str, ks)) + "}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcflab",
        description="Exact arithmetic for periodic continued fractions over quadratic rings.",
    )
    parser.add_argument("--d", type=int, default=2, help="squarefree ambient discriminant")
    parser.add_argument(
        "--precision",
        type=int,
        default=None,
        help="decimal display digits (default: PCFLAB_PRECISION or 50)",
    )
    parser.add_argument(
        "--format", choices=("text", "json-lines"), default="text", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="decide convergence and report the exact value")
    p.add_argument("pcf", help='periodic continued fraction, e.g. "[1; 2]"')
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("dual", help="form the dual expansion and evaluate it")
    p.add_argument("pcf")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("variety", help="membership tests for quadratic-target families")
    vs = p.add_subparsers(dest="subcommand", required=True)
    pc = vs.add_parser("check", help="test points against the defining residuals")
    pc.add_argument("--type", required=True, help="N,k")
    pc.add_argument("--target", required=True, help="A,B,C")
    pc.add_argument("--point", required=True, action="append", help="comma-separated coordinates")
    pc.set_defaults(func=cmd_variety_check)

    p = sub.add_parser("fp", help="conic projection of family points")
    fs = p.add_subparsers(dest="subcommand", required=True)
    pp = fs.add_parser("project", help="project points and check the conic residual")
    pp.add_argument("--type", required=True, help="N,k")
    pp.add_argument("--target", required=True, help="A,B,C")
    pp.add_argument("--point", required=True, action="append")
    pp.set_defaults(func=cmd_fp_project)

    p = sub.add_parser("search", help="solution scans and embedded-table reproduction")
    ss = p.add_subparsers(dest="subcommand", required=True)
    pt = ss.add_parser("table", help="re-enumerate an embedded table and diff")
    pt.add_argument("name", help="table name, e.g. z22_03")
    pt.set_defaults(func=cmd_search_table)
    pl = ss.add_parser("ljunggren", help="brute scan of x^2 + 1 = 2 y^4")
    pl.add_argument("--bound", type=int, default=None)
    pl.set_defaults(func=cmd_search_ljunggren)
    pe = ss.add_parser("ecurve", help="unit-scan solver for (a^2 b + 1) b = pi")
    pe.add_argument("--pi", required=True)
    pe.add_argument("--kmax", type=int, default=None)
    pe.set_defaults(func=cmd_search_ecurve)

    p = sub.add_parser("skolem", help="2-adic valuation reports")
    ks = p.add_subparsers(dest="report", required=True)
    pr = ks.add_parser("rst", help="power-expansion coefficient table")
    pr.add_argument("--nmax", type=int, default=4)
    pr.set_defaults(func=cmd_skolem)
    pa = ks.add_parser("table", help="coefficient/norm table for the small exponent pairs")
    pa.set_defaults(func=cmd_skolem)
    po = ks.add_parser("oryx", help="norm-difference valuation scan")
    po.add_argument("--jmax", type=int, default=30)
    po.set_defaults(func=cmd_skolem)
    pl2 = ks.add_parser("l2", help="unit-norm coefficient scan in the second extension")
    pl2.add_argument("--kmax", type=int, default=20)
    pl2.set_defaults(func=cmd_skolem)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        precision = args.precision
        if precision is None:
            precision = int(os.environ.get("PCFLAB_PRECISION", "50"))
        cfg = CliConfig(d=args.d, precision=precision, format=args.format)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        return args.func(args, cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ZeroDivisionError, ArithmeticError) as exc:
        print(f"math error: {exc}", file=sys.stderr)
        return MATH_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
