"""Command-line front end.

Subcommands: eval (DSL queries), table (sequence tables), verify (the identity
suite), cf (continued-fraction coefficients), hl (principal Hall-Littlewood
values).  Exit codes: 0 success, 1 verification failures, 2 usage or parse
errors, 3 I/O errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .dsl import DslError, eval_text
from .identities import DEFAULT_SEED, UnknownIdentityError, registered_ids, run_suite
from .lambdaring import hall_littlewood_principal, sfraction
from .poly import Coeff, PolyQQ
from .sequences import (
    catalan,
    large_narayana,
    narayana,
    narayana_hsequence,
    narayana_power_sum,
    schroeder,
    type_b_w,
)

TABLE_MAX_N_CAP = 200
CF_DEPTH_CAP = 20
HL_CAP = 30
SEED_ENV_VAR = "NARAYANA_LAB_SEED"

_POLY_TABLES = {
    "narayana": (0, narayana),
    "large-narayana": (0, large_narayana),
    "power-sum": (1, narayana_power_sum),
    "type-b": (0, type_b_w),
}
_INT_TABLES = {
    "catalan": catalan,
    "schroeder-small": lambda n: schroeder("small", n),
    "schroeder-large": lambda n: schroeder("large", n),
}
TABLE_NAMES = sorted(_POLY_TABLES | _INT_TABLES)


def _rational(text: str) -> Fraction:
    """Decimal integer or a/b rational; floats are rejected."""
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{SEED_ENV_VAR} must be a decimal integer, got {raw!r}"
        ) from None


def _coeff_str(c: Coeff) -> str:
    return str(c)


def _coeff_json(c: Coeff):
    return c if isinstance(c, int) else str(c)


def _usage_error(message: str) -> int:
    print(f"narayana-lab: error: {message}", file=sys.stderr)
    return 2


def _dump_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _cmd_eval(args) -> int:
    try:
        result = eval_text(args.expr)
    except DslError as exc:
        return _usage_error(f"cannot parse {args.expr!r}: {exc}")
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        return _usage_error(f"cannot evaluate {args.expr!r}: {exc}")
    if args.format == "text":
        print(result)
    elif args.format == "json":
        print(_dump_json({"expr": args.expr, "result": str(result)}))
    else:
        try:
            coeffs = result.q_coefficients()
        except ValueError as exc:
            return _usage_error(f"csv output needs a plain polynomial in q: {exc}")
        print(", ".join(_coeff_str(c) for c in coeffs))
    return 0


def _table_rows(name: str, max_n: int, at_q: Fraction | None):
    if name in _INT_TABLES:
        if at_q is not None:
            raise ValueError(f"--at-q does not apply to the integer table {name!r}")
        fn = _INT_TABLES[name]
        return [(n, fn(n)) for n in range(max_n + 1)]
    lo, fn = _POLY_TABLES[name]
    rows = []
    for n in range(lo, max_n + 1):
        value = fn(n)
        rows.append((n, value.eval(at_q=at_q) if at_q is not None else value))
    return rows


def _cmd_table(args) -> int:
    if args.max_n > TABLE_MAX_N_CAP:
        return _usage_error(f"--max-n capped at {TABLE_MAX_N_CAP}")
    if args.max_n < 0:
        return _usage_error("--max-n must be nonnegative")
    try:
        rows = _table_rows(args.name, args.max_n, args.at_q)
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.format == "text":
        for n, value in rows:
            print(f"{n}: {value}")
    elif args.format == "json":
        doc = {
            "name": args.name,
            "max_n": args.max_n,
            "at_q": str(args.at_q) if args.at_q is not None else None,
            "rows": [
                {"n": n}
                | (
                    {"coefficients": [_coeff_json(c) for c in value.q_coefficients()]}
                    if isinstance(value, PolyQQ)
                    else {"value": _coeff_json(value)}
                )
                for n, value in rows
            ],
        }
        print(_dump_json(doc))
    else:
        for n, value in rows:
            cells = (
                value.q_coefficients() if isinstance(value, PolyQQ) else [value]
            )
            print(", ".join([str(n)] + [_coeff_str(c) for c in cells]))
    return 0


def _cmd_verify(args) -> int:
    try:
        report = run_suite(
            ids=args.id or None, max_n=args.max_n, seed=args.seed, jobs=args.jobs
        )
    except UnknownIdentityError as exc:
        return _usage_error(str(exc))
    except ValueError as exc:
        return _usage_error(str(exc))
    payload = _dump_json(report.to_document())
    if args.report:
        try:
            with open(args.report, "w", encoding="utf-8") as fh:
                fh.write(payload + "\n")
        except OSError as exc:
            print(f"narayana-lab: cannot write report: {exc}", file=sys.stderr)
            return 3
        counts = report.counts
        print(f"verify: {counts['pass']} pass, {counts['fail']} fail -> {args.report}")
    else:
        print(payload)
    return 0 if report.ok else 1


def _cmd_cf(args) -> int:
    if not 1 <= args.depth <= CF_DEPTH_CAP:
        return _usage_error(f"--depth must be within 1..{CF_DEPTH_CAP}")
    coeffs = sfraction(narayana_hsequence(), args.depth)
    if args.format == "text":
        print(", ".join(str(c) for c in coeffs))
    elif args.format == "json":
        print(_dump_json({"depth": args.depth, "coefficients": [str(c) for c in coeffs]}))
    else:
        for i, c in enumerate(coeffs, start=1):
            print(f"{i}, {c}")
    return 0


def _cmd_hl(args) -> int:
    if not 1 <= args.r <= HL_CAP or not 1 <= args.n <= HL_CAP:
        return _usage_error(f"--r and --n must be within 1..{HL_CAP}")
    value = hall_littlewood_principal(args.r, args.n)
    if args.format == "text":
        print(value)
    elif args.format == "json":
        print(_dump_json({"r": args.r, "n": args.n, "result": str(value)}))
    else:
        print(", ".join(_coeff_str(c) for c in value.q_coefficients()))
    return 0


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default: text)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="narayana-lab",
        description="Exact Narayana/Catalan/Schroeder combinatorics and an "
        "identity verification suite.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a specialization query")
    p_eval.add_argument("expr", help="query, e.g. 'h2[3 - 3*q]' or 'P{3,4}'")
    _add_format(p_eval)
    p_eval.set_defaults(handler=_cmd_eval)

    p_table = sub.add_parser("table", help="print a sequence table")
    p_table.add_argument("name", choices=TABLE_NAMES)
    p_table.add_argument("--max-n", type=int, required=True, dest="max_n")
    p_table.add_argument(
        "--at-q", type=_rational, default=None, dest="at_q",
        help="evaluate polynomial rows at an exact rational",
    )
    _add_format(p_table)
    p_table.set_defaults(handler=_cmd_table)

    p_verify = sub.add_parser("verify", help="run the identity suite")
    p_verify.add_argument(
        "--id", action="append", default=[], metavar="ID",
        help="restrict to one identity (repeatable); default all "
        f"({len(registered_ids())} registered)",
    )
    p_verify.add_argument("--max-n", type=int, default=12, dest="max_n")
    p_verify.add_argument(
        "--seed", type=int, default=None,
        help=f"schedule seed (default: ${SEED_ENV_VAR} or {DEFAULT_SEED})",
    )
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--report", default=None, help="write the JSON report here")
    p_verify.set_defaults(handler=_cmd_verify)

    p_cf = sub.add_parser("cf", help="continued-fraction coefficients")
    p_cf.add_argument("--depth", type=int, required=True)
    _add_format(p_cf)
    p_cf.set_defaults(handler=_cmd_cf)

    p_hl = sub.add_parser("hl", help="principal Hall-Littlewood value")
    p_hl.add_argument("--r", type=int, required=True)
    p_hl.add_argument("--n", type=int, required=True)
    _add_format(p_hl)
    p_hl.set_defaults(handler=_cmd_hl)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "verify":
        if args.seed is None:
            try:
                args.seed = _default_seed()
            except argparse.ArgumentTypeError as exc:
                return _usage_error(str(exc))
        if args.jobs < 1:
            return _usage_error("--jobs must be at least 1")
    return args.handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
