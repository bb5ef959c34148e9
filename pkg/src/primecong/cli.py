"""Command-line front end.

Exit codes: 0 success / all verdicts pass, 1 a mathematical failure,
2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys

from .bernoulli import bernoulli_number, bernoulli_polynomial
from .congruences import RPolicy, TheoremId, sweep, verify
from .exact import format_rational, parse_integer, parse_rational
from .primes import PrimeRange
from .primesums import FloorSumKind, evaluate

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

DEFAULT_PMAX_GUARD = 500

THEOREM_NAMES = {
    "theorem1": TheoremId.THEOREM1,
    "theorem2": TheoremId.THEOREM2,
    "eq-un": TheoremId.EQ_UN,
    "eq-three-minus-p": TheoremId.EQ_THREE_MINUS_P,
    "glaisher": TheoremId.GLAISHER_P2,
    "sun": TheoremId.SUN_P3,
    "wolstenholme": TheoremId.WOLSTENHOLME_P3,
    "grid": TheoremId.GRID_IDENTITY,
    "cube-root": TheoremId.CUBE_ROOT_IDENTITY,
}

SUM_KINDS = {
    "grid": FloorSumKind.GRID,
    "cube-root": FloorSumKind.CUBE_ROOT,
    "partial": FloorSumKind.PARTIAL_FERMAT,
    "S": FloorSumKind.S_Q,
    "T": FloorSumKind.T,
}


def theorem_arg(text: str) -> TheoremId:
    key = text.strip()
    if key in THEOREM_NAMES:
        return THEOREM_NAMES[key]
    try:
        return TheoremId(key.replace("-", "_"))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown theorem {text!r}; choose from {', '.join(THEOREM_NAMES)}"
        ) from None


def theorem_list_arg(text: str) -> list[TheoremId]:
    if text.strip() == "all":
        return list(TheoremId)
    return [theorem_arg(part) for part in text.split(",") if part.strip()]


def integer_arg(text: str) -> int:
    try:
        return parse_integer(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def non_negative_arg(text: str) -> int:
    n = integer_arg(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {n}")
    return n


def rational_arg(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primecong",
        description="Exact prime floor sums, Bernoulli values and congruence verdicts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bern = sub.add_parser("bernoulli", help="Bernoulli numbers and polynomial values")
    bern_sub = bern.add_subparsers(dest="mode", required=True)
    number = bern_sub.add_parser("number", help="print B_n")
    number.add_argument("n", type=non_negative_arg)
    poly = bern_sub.add_parser("poly", help="print B_n(x)")
    poly.add_argument("n", type=non_negative_arg)
    poly.add_argument("x", type=rational_arg)

    total = sub.add_parser("sum", help="brute and closed values of a floor sum")
    total.add_argument("--kind", required=True, choices=list(SUM_KINDS))
    total.add_argument("--p", required=True, type=integer_arg)
    total.add_argument("--q", type=integer_arg)
    total.add_argument("--r", type=integer_arg)
    total.set_defaults(subparser=total)

    ver = sub.add_parser("verify", help="verify one congruence")
    ver.add_argument("--theorem", required=True, type=theorem_arg)
    ver.add_argument("--p", required=True, type=integer_arg)
    ver.add_argument("--r", type=integer_arg)
    ver.add_argument("--format", choices=["text", "json"], default="text")
    ver.set_defaults(subparser=ver)

    sw = sub.add_parser("sweep", help="verify congruences over a range of primes")
    sw.add_argument("--theorems", required=True, type=theorem_list_arg,
                    help="'all' or a comma-separated list")
    sw.add_argument("--pmin", type=integer_arg, default=3)
    sw.add_argument("--pmax", required=True, type=integer_arg)
    sw.add_argument("--r-policy", choices=[p.value for p in RPolicy], default="all")
    sw.add_argument("--format", choices=["text", "csv", "json"], default="text")
    sw.add_argument("--out", help="output path (default: standard output)")
    sw.add_argument("--workers", type=integer_arg, default=1)
    sw.add_argument("--timestamp",
                    help="fixed timestamp for the JSON metadata (default: current UTC time)")
    sw.add_argument("--no-timestamp", action="store_true",
                    help="omit the timestamp from the JSON metadata")
    sw.add_argument("--explore-p2", action="store_true",
                    help="record theorem1 residues mod p^2 in the note column")
    sw.add_argument("--allow-large", action="store_true",
                    help=f"permit pmax above {DEFAULT_PMAX_GUARD}")
    sw.set_defaults(subparser=sw)
    return parser


def cmd_bernoulli(args, out) -> int:
    if args.mode == "number":
        value = bernoulli_number(args.n)
    else:
        value = bernoulli_polynomial(args.n, args.x)
    print(format_rational(value), file=out)
    return EXIT_OK


def cmd_sum(args, parser, out) -> int:
    kind = SUM_KINDS[args.kind]
    if kind is FloorSumKind.PARTIAL_FERMAT and args.r is None:
        parser.error("--r is required for --kind partial")
    if kind is FloorSumKind.S_Q and args.q is None:
        parser.error("--q is required for --kind S")
    try:
        result = evaluate(kind, args.p, q=args.q, r=args.r)
    except ValueError as exc:
        parser.error(str(exc))
    print(f"brute: {result.brute_value}", file=out)
    if result.closed_value is None:
        return EXIT_OK
    print(f"closed: {format_rational(result.closed_value)}", file=out)
    print("agree" if result.agree else "disagree", file=out)
    return EXIT_OK if result.agree else EXIT_FAIL


def cmd_verify(args, parser, out) -> int:
    try:
        verdict = verify(args.theorem, args.p, args.r)
    except ValueError as exc:
        parser.error(str(exc))
    if args.format == "json":
        print(json.dumps(verdict.as_json(), ensure_ascii=False), file=out)
    else:
        print(verdict.describe(), file=out)
    return EXIT_OK if verdict.passed else EXIT_FAIL


def cmd_sweep(args, parser, out) -> int:
    if args.pmin < 2 or args.pmax < args.pmin:
        parser.error("need 2 <= --pmin <= --pmax")
    if args.pmax > DEFAULT_PMAX_GUARD and not args.allow_large:
        parser.error(f"--pmax above {DEFAULT_PMAX_GUARD} needs --allow-large")
    if not args.theorems:
        parser.error("--theorems is empty")
    timestamp = None
    if not args.no_timestamp:
        timestamp = args.timestamp or datetime.datetime.now(datetime.timezone.utc).isoformat(
            timespec="seconds"
        )
    report = sweep(
        args.theorems,
        PrimeRange(args.pmin, args.pmax),
        args.r_policy,
        workers=max(1, args.workers),
        explore_p2=args.explore_p2,
        timestamp=timestamp,
    )
    if args.format == "csv":
        text = report.to_csv()
    elif args.format == "json":
        text = report.to_json()
    else:
        text = "".join(v.describe() + "\n" for v in report.verdicts)
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            out.write(text)
    except OSError as exc:
        print(f"primecong: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    print(report.summary(), file=sys.stderr if not args.out else out)
    return EXIT_OK if report.failures == 0 else EXIT_FAIL


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "bernoulli":
            return cmd_bernoulli(args, out)
        if args.command == "sum":
            return cmd_sum(args, args.subparser, out)
        if args.command == "verify":
            return cmd_verify(args, args.subparser, out)
        return cmd_sweep(args, args.subparser, out)
    except SystemExit as exc:
        return int(exc.code or 0)
