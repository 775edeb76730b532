"""
Command-line front end.

Exit status: 0 on success or PASS, 1 when any check FAILs, 2 on usage or
parse errors.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .constructible import evaluate, euler_integral
from .csm import csm
from .expr import parse, serialize
from .solver import DEFAULT_SOLVER_MAX_AMBIENT, SubcategorySpec, integral_report, uniqueness_report
from .strata import MAX_AMBIENT_ENV, max_ambient
from .suites import SUITES, describe
from .varmaps import parse_map, pushforward_cf

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.strip().strip("{}").split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational_json(c: Fraction) -> list[int]:
    return [c.numerator, c.denominator]


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _add_common(p: argparse.ArgumentParser, json_path: bool = False):
    p.add_argument("--ambient", type=int, default=argparse.SUPPRESS,
                   help="dimension n of the ambient P^n (default: inferred from the expression)")
    if json_path:
        p.add_argument("--json", nargs="?", const="-", default=argparse.SUPPRESS, metavar="PATH",
                       help="emit the report as JSON, to PATH or stdout")
    else:
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    p.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                   help="print only the result")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csmkit",
        description="Euler calculus and Chern-Schwartz-MacPherson classes on coordinate strata of P^n.",
    )
    parser.add_argument("--ambient", type=int, default=None)
    parser.add_argument("--json", action="store_true", default=False)
    parser.add_argument("--quiet", action="store_true", default=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", help="Euler integral of a function")
    _add_common(p)
    p.add_argument("expr")

    p = sub.add_parser("csm", help="CSM class of a function")
    _add_common(p)
    p.add_argument("expr")

    p = sub.add_parser("push", help="pushforward along a map")
    _add_common(p)
    p.add_argument("--map", required=True, dest="map_descriptor",
                   help="pow:d | incl:i0,...,im | perm:p0,...,pn")
    p.add_argument("--target", type=int, default=None, help="target dimension of an inclusion")
    p.add_argument("expr")

    p = sub.add_parser("eval", help="value at a point with the given support")
    _add_common(p)
    p.add_argument("--support", required=True, type=_int_list)
    p.add_argument("expr")

    p = sub.add_parser("verify", help="run a verification suite")
    _add_common(p)
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--max-n", required=True, type=int)
    p.add_argument("--degrees", type=_int_list, default=None)

    p = sub.add_parser("solve", help="naturality solver and uniqueness report")
    _add_common(p, json_path=True)
    p.add_argument("--max-ambient", required=True, type=int)
    p.add_argument("--degrees", type=_int_list, default=[2, 3])
    p.add_argument("--no-inclusions", action="store_true")
    p.add_argument("--no-permutations", action="store_true")
    p.add_argument("--integral", action="store_true",
                   help="EXPERIMENTAL: also compute the integer solution lattice")
    return parser


def _function(args):
    return parse(args.expr, args.ambient)


def cmd_chi(args, out):
    value = euler_integral(_function(args))
    if args.json:
        out.write(_dump({"chi": _rational_json(value)}) + "\n")
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def cmd_csm(args, out):
    h = csm(_function(args))
    if args.json:
        out.write(_dump({"ambient": h.ambient.n, "class": h.to_json()}) + "\n")
        return EXIT_OK
    if not args.quiet:
        out.write("degree coefficient\n")
    for k, c in enumerate(h.coeffs):
        out.write(f"{k} {c}\n")
    return EXIT_OK


def cmd_push(args, out):
    f = _function(args)
    m = parse_map(args.map_descriptor, f.ambient.n, args.target)
    g = pushforward_cf(m, f)
    if args.json:
        out.write(_dump({"ambient": g.ambient.n, "map": m.descriptor, "function": g.to_json()}) + "\n")
    else:
        out.write(serialize(g) + "\n")
    return EXIT_OK


def cmd_eval(args, out):
    value = evaluate(_function(args), args.support)
    if args.json:
        out.write(_dump({"support": sorted(args.support), "value": _rational_json(value)}) + "\n")
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def cmd_verify(args, out):
    runner = SUITES[args.suite]
    cells = runner(args.max_n) if args.degrees is None else runner(args.max_n, tuple(args.degrees))
    failed = sum(1 for w in cells if not w.ok)
    if args.json:
        out.write(_dump({"suite": args.suite, "cells": [w.to_json() for w in cells],
                         "failed": failed, "total": len(cells)}) + "\n")
    else:
        if not args.quiet:
            for w in cells:
                out.write(describe(w) + "\n")
        verdict = "PASS" if not failed else "FAIL"
        out.write(f"{args.suite}: {len(cells) - failed}/{len(cells)} {verdict}\n")
    return EXIT_FAIL if failed else EXIT_OK


def _solver_cap() -> int:
    # the same environment override that raises the function cap lifts the solver cap
    if os.environ.get(MAX_AMBIENT_ENV) is None:
        return DEFAULT_SOLVER_MAX_AMBIENT
    return max_ambient()


def cmd_solve(args, out):
    spec = SubcategorySpec(
        args.max_ambient,
        power_degrees=frozenset(args.degrees),
        include_inclusions=not args.no_inclusions,
        include_permutations=not args.no_permutations,
        max_ambient=_solver_cap(),
    )
    report = uniqueness_report(spec)
    integral = integral_report(spec) if args.integral else None
    payload = report.to_json()
    if integral is not None:
        payload["integral"] = integral.to_json()
    target = args.json
    if target and target is not True and target != "-":
        with open(target, "w") as fh:
            fh.write(_dump(payload) + "\n")
    elif target:
        out.write(_dump(payload) + "\n")
        return EXIT_OK if report.passed else EXIT_FAIL
    counts = ", ".join(f"{k} {v}" for k, v in report.constraint_counts.items())
    lines = [
        f"spec: N={spec.N} power_degrees={','.join(map(str, sorted(spec.power_degrees))) or '-'} "
        f"inclusions={'on' if spec.include_inclusions else 'off'} "
        f"permutations={'on' if spec.include_permutations else 'off'}",
        f"unknowns: {report.unknown_count}",
        f"constraints: {report.constraint_count} ({counts})",
        f"dimension: {report.dimension} (expected {report.expected_dimension})",
        f"span equals mpc_0..mpc_{spec.N}: {'yes' if report.span_equal else 'no'}",
    ]
    if integral is not None:
        lines.append(
            f"integral lattice (experimental): rank {integral.lattice_rank}, "
            f"spanned by mpc over Z: {'yes' if integral.spanned_by_mpc else 'no'}"
        )
    lines += [f"failure: {f}" for f in report.failures]
    if args.quiet:
        lines = []
    lines.append(f"verdict: {report.verdict}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


COMMANDS = {
    "chi": cmd_chi,
    "csm": cmd_csm,
    "push": cmd_push,
    "eval": cmd_eval,
    "verify": cmd_verify,
    "solve": cmd_solve,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    # global flags may follow the subcommand; those override the ones before it
    try:
        return COMMANDS[args.command](args, out)
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
