"""Command-line surface.

Exit codes: 0 success, 1 usage or domain error, 2 expression syntax
error, 3 out-of-scope base/torsion request, 4 broken internal
invariant (always a bug).
"""

from __future__ import annotations

import argparse
import sys

from . import report as rpt
from .brauer import BrauerClass, residue_at
from .covers import (
    splitting_witness,
    unramified_cover_certificates,
    verify_splitting_witness,
)
from .distinguish import distinguish, enumerate_candidates
from .errors import NotSymbolRegular, ParseError, ScopeError
from .parser import parse_class, parse_ratfunc
from .points import ClosedPoint
from .poly import Poly, RationalFunction

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_SCOPE = 3
EXIT_INTERNAL = 4


def _common_flags(sub):
    sub.add_argument(
        "--base",
        default="q",
        help="q for the rationals (default), fq:<q> for the finite field of order q",
    )
    sub.add_argument("--p", type=int, default=2, help="prime torsion (default 2)")
    sub.add_argument(
        "--sweep",
        type=int,
        default=200,
        help="specialization sweep budget for distinguish (default 200)",
    )
    sub.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    sub.add_argument(
        "--seed",
        type=int,
        default=0,
        help="recorded in the report; all computations here are deterministic",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="brauercalc",
        description="Residue calculus for p-torsion Brauer classes over k(t).",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_ram = subs.add_parser("ram", help="ramification divisor and reciprocity status")
    p_ram.add_argument("cls", metavar="CLASS")
    _common_flags(p_ram)
    p_ram.set_defaults(run=cmd_ram)

    p_eq = subs.add_parser("equal", help="exact equality with a certificate")
    p_eq.add_argument("left", metavar="CLASS_A")
    p_eq.add_argument("right", metavar="CLASS_B")
    _common_flags(p_eq)
    p_eq.set_defaults(run=cmd_equal)

    p_dist = subs.add_parser("distinguish", help="layered inequivalence verdict")
    p_dist.add_argument("left", metavar="CLASS_A")
    p_dist.add_argument("right", metavar="CLASS_B")
    _common_flags(p_dist)
    p_dist.set_defaults(run=cmd_distinguish)

    p_enum = subs.add_parser(
        "enumerate", help="residue-compatible candidate classes (finite base only)"
    )
    p_enum.add_argument("cls", metavar="CLASS")
    _common_flags(p_enum)
    p_enum.set_defaults(run=cmd_enumerate)

    p_wit = subs.add_parser(
        "witness", help="splitting-cover datum for the residue at a rational point"
    )
    p_wit.add_argument("cls", metavar="CLASS")
    p_wit.add_argument("--at", required=True, help="rational value c; the point is t = c")
    p_wit.add_argument("--out", help="write the bare witness datum (JSON) to this file")
    _common_flags(p_wit)
    p_wit.set_defaults(run=cmd_witness)

    p_ver = subs.add_parser("verify-witness", help="re-check a stored witness datum")
    p_ver.add_argument("cls", metavar="CLASS")
    p_ver.add_argument("witness_file", metavar="WITNESS_FILE")
    _common_flags(p_ver)
    p_ver.set_defaults(run=cmd_verify_witness)

    return parser


def _parse_expr(args, text):
    base = rpt.parse_base(args.base)
    return parse_class(text, base, args.p)


def _base_inputs(args):
    return {"base": args.base, "p": args.p, "seed": args.seed}


def _rational_value(text, base):
    r = parse_ratfunc(text, base.field)
    if not r.is_constant:
        raise ValueError(f"expected a constant base-field value, got {text!r}")
    return r.constant_value()


def cmd_ram(args):
    expr = _parse_expr(args, args.cls)
    inputs = _base_inputs(args)
    inputs["class"] = expr.canonical()
    return rpt.Report("ram", inputs, rpt.ram_outcome(expr.cls))


def cmd_equal(args):
    left = _parse_expr(args, args.left)
    right = _parse_expr(args, args.right)
    inputs = _base_inputs(args)
    inputs["left"] = left.canonical()
    inputs["right"] = right.canonical()
    return rpt.Report("equal", inputs, rpt.equal_outcome(left.cls, right.cls))


def cmd_distinguish(args):
    left = _parse_expr(args, args.left)
    right = _parse_expr(args, args.right)
    inputs = _base_inputs(args)
    inputs["left"] = left.canonical()
    inputs["right"] = right.canonical()
    inputs["sweep"] = args.sweep
    verdict = distinguish(left.cls, right.cls, sweep=args.sweep)
    return rpt.Report("distinguish", inputs, rpt.distinguish_outcome(verdict))


def cmd_enumerate(args):
    expr = _parse_expr(args, args.cls)
    inputs = _base_inputs(args)
    inputs["class"] = expr.canonical()
    cand = enumerate_candidates(expr.cls)
    return rpt.Report("enumerate", inputs, rpt.enumerate_outcome(cand))


def cmd_witness(args):
    expr = _parse_expr(args, args.cls)
    base = expr.base
    cval = _rational_value(args.at, base)
    x = ClosedPoint.rational(base, cval)
    rc = residue_at(expr.cls, x)
    if rc.is_trivial():
        raise ValueError(f"the class is unramified at t = {args.at}; nothing to split")
    rep = rc.canonical_value()
    lin = RationalFunction(Poly(base.field, [-cval, base.field.one]))
    datum = splitting_witness(base, expr.p, rep, lin)
    residual = expr.cls - BrauerClass.make(expr.base, expr.p, [datum.symbol])
    if not residue_at(residual, x).is_trivial():
        raise AssertionError("witness symbol failed to absorb the residue")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rpt.witness_to_json(datum))
    inputs = _base_inputs(args)
    inputs["class"] = expr.canonical()
    inputs["at"] = args.at
    outcome = {
        "witness": rpt.witness_to_obj(datum),
        "residual_unramified_at_point": True,
        "written_to": args.out if args.out else None,
    }
    return rpt.Report("witness", inputs, outcome)


def cmd_verify_witness(args):
    expr = _parse_expr(args, args.cls)
    with open(args.witness_file, "r", encoding="utf-8") as fh:
        text = fh.read()
    datum = rpt.witness_from_json(text, expr.base)
    if datum.m != expr.p:
        raise ValueError(
            f"witness degree m = {datum.m} does not match --p {expr.p}"
        )
    if datum.kind == "splitting":
        wrep = verify_splitting_witness(expr.cls, datum)
    elif datum.kind == "unramified":
        wrep = unramified_cover_certificates(expr.cls, datum)
    else:
        raise ValueError(f"unknown witness kind {datum.kind!r}")
    inputs = _base_inputs(args)
    inputs["class"] = expr.canonical()
    inputs["witness_file"] = args.witness_file
    outcome = {"kind": datum.kind}
    outcome.update(rpt.witness_report_outcome(wrep))
    return rpt.Report("verify-witness", inputs, outcome)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code in (None, 0):
            return EXIT_OK
        return EXIT_USAGE
    try:
        report = args.run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ScopeError as exc:
        print(f"out of scope: {exc}", file=sys.stderr)
        return EXIT_SCOPE
    except NotSymbolRegular as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # exit 4 is the bug signal, never expected
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    text = report.to_json() if args.format == "json" else report.to_text()
    sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
