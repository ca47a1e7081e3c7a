"""Command-line front end.

All numerals are unsigned decimal on the way in and out; ``--format``
switches results to radix digit lists.  Exit status is 0 on success, 1 on
a precondition failure (or fuzz mismatch) and 2 when an internal
invariant fails.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from math import gcd

from . import oracle
from .applications import dmod, exact_div, hensel_code, par_mul, rational_period
from .digits import DigitVec, from_decimal_string, to_decimal_string
from .engine import ParTrace
from .errors import InvariantViolation, PPIError
from .fuzz import DEFAULT_RADIXES, DIVISION_ALGORITHMS, run_fuzz
from .par_division import BACKENDS, par_modiv, par_ppi_v1, par_ppi_v2
from .seq_division import ModDivProblem

RADIX_ENV = "PPIMOD_RADIX"
ALGORITHMS = ("seqmodiv", "ppi", "parmodiv", "parppi1", "parppi2", "oracle")
PARALLEL = {"parmodiv": par_modiv, "parppi1": par_ppi_v1, "parppi2": par_ppi_v2}
FORMATS = ("decimal", "digits-lsf", "digits-msf", "trace-record")


def _default_radix() -> int:
    raw = os.environ.get(RADIX_ENV)
    if not raw:
        return 10
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: {RADIX_ENV}={raw!r} is not an integer")


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _render(x: DigitVec, fmt: str) -> str:
    if fmt == "digits-lsf":
        return " ".join(map(str, x.digits)) or "0"
    if fmt == "digits-msf":
        return " ".join(map(str, reversed(x.digits))) or "0"
    return to_decimal_string(x)


def _numerals(args) -> tuple[DigitVec, DigitVec]:
    return from_decimal_string(args.u, args.radix), from_decimal_string(args.v, args.radix)


def cmd_modiv(args) -> int:
    u, v = _numerals(args)
    p = ModDivProblem(u, v, args.s)
    trace: ParTrace | None = None
    if args.alg == "oracle":
        x = DigitVec.from_int(oracle.oracle_modiv(int(u), int(v), args.radix, args.s), args.radix)
    elif args.alg in PARALLEL:
        x, trace = PARALLEL[args.alg](p, backend=args.backend, checked=args.checked)
    else:
        x = DIVISION_ALGORITHMS[args.alg](p, args.checked)
    if args.format == "trace-record":
        if trace is None:
            print(f"error: --format trace-record needs a parallel algorithm, not {args.alg}", file=sys.stderr)
            return 1
        print(to_decimal_string(x))
        print(trace.to_record())
    else:
        print(_render(x, args.format))
    return 0


def cmd_ediv(args) -> int:
    u, v = _numerals(args)
    print(_render(exact_div(u, v, checked=args.checked), args.format))
    return 0


def cmd_dmod(args) -> int:
    u, v = _numerals(args)
    res = dmod(u, v, checked=args.checked)
    print(f"x={to_decimal_string(res.x)} w={to_decimal_string(res.w)} sign={res.sign_char} r={res.r}")
    return 0


def cmd_mul(args) -> int:
    u, v = _numerals(args)
    prod, trace = par_mul(u, v, checked=args.checked)
    if args.format == "trace-record":
        print(to_decimal_string(prod))
        print(trace.to_record())
    else:
        print(_render(prod, args.format))
    return 0


def cmd_hensel(args) -> int:
    u, v = _numerals(args)
    code = hensel_code(u, v, args.s)
    print(" ".join(map(str, code.digits)))
    return 0


def cmd_period(args) -> int:
    u, v = _numerals(args)
    res = rational_period(u, v, args.cap)
    print(f"t={res.t} T={to_decimal_string(res.T)}")
    return 0


def cmd_fuzz(args) -> int:
    radixes = tuple(args.radix_list) if args.radix_list else DEFAULT_RADIXES
    report = run_fuzz(args.count, radixes, args.max_s, args.seed, checked=args.checked)
    for line in report.mismatches:
        print(f"MISMATCH {line}")
    print(f"{len(report.mismatches)} mismatches")
    return 0 if not report.mismatches else 1


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    beta = args.radix
    for alg in args.alg or ["parppi2"]:
        for s in args.sizes:
            if alg == "parmul":
                u = DigitVec.from_int(rng.randrange(beta ** (s - 1), beta**s), beta)
                v = DigitVec.from_int(rng.randrange(beta ** (s - 1), beta**s), beta)
                _, trace = par_mul(u, v)
            else:
                # full-length numerator so the trace covers all s digits
                u = rng.randrange(1, beta**s)
                u += 1 if u % beta == 0 else 0
                v = rng.randrange(1, beta**s)
                while gcd(v % beta, beta) != 1:
                    v = rng.randrange(1, beta**s)
                p = ModDivProblem.of(u, v, beta, s)
                _, trace = PARALLEL[alg](p, backend=args.backend)
            print(trace.to_record())
    return 0


def build_parser() -> argparse.ArgumentParser:
    radix = _default_radix()
    parser = argparse.ArgumentParser(
        prog="ppimod", description="LSF modular division and its applications."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, numerals=True, fmt=True):
        if numerals:
            sp.add_argument("u", help="dividend / numerator (decimal)")
            sp.add_argument("v", help="divisor / denominator (decimal)")
        sp.add_argument("--radix", type=int, default=radix, help=f"radix beta (default {radix})")
        sp.add_argument("--checked", action="store_true", help="assert internal invariants")
        if fmt:
            sp.add_argument("--format", choices=FORMATS, default="decimal")

    sp = sub.add_parser("modiv", help="(u / v) mod radix**s")
    common(sp)
    sp.add_argument("--s", type=int, required=True, help="number of output digits")
    sp.add_argument("--alg", choices=ALGORITHMS, default="parppi2")
    sp.add_argument("--backend", choices=BACKENDS, default="kernel")
    sp.set_defaults(func=cmd_modiv)

    sp = sub.add_parser("ediv", help="exact quotient u / v")
    common(sp)
    sp.set_defaults(func=cmd_ediv)

    sp = sub.add_parser("dmod", help="modular quotient and digit modulus")
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_dmod)

    sp = sub.add_parser("mul", help="product by alternated-carry add-and-shift")
    common(sp)
    sp.set_defaults(func=cmd_mul)

    sp = sub.add_parser("hensel", help="Hensel code: s digits of u/v, LSF")
    common(sp, fmt=False)
    sp.add_argument("--s", type=int, required=True)
    sp.set_defaults(func=cmd_hensel)

    sp = sub.add_parser("period", help="period of the expansion of u/v")
    common(sp, fmt=False)
    sp.add_argument("--cap", type=int, default=10**6, help="largest period length searched")
    sp.set_defaults(func=cmd_period)

    sp = sub.add_parser("fuzz", help="differential test of all division algorithms")
    sp.add_argument("count", type=int)
    sp.add_argument(
        "--radix", dest="radix_list", type=int, action="append",
        help="radix to draw from (repeatable; default 2,3,10,257,65536)",
    )
    sp.add_argument("--max-s", type=int, default=64)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--checked", action="store_true")
    sp.set_defaults(func=cmd_fuzz)

    sp = sub.add_parser("bench", help="parallel trace records per size")
    sp.add_argument("--sizes", type=_int_list, default=[], help="comma-separated s values")
    sp.add_argument(
        "--alg", action="append", choices=sorted(PARALLEL) + ["parmul"], help="repeatable"
    )
    sp.add_argument("--radix", type=int, default=radix)
    sp.add_argument("--backend", choices=BACKENDS, default="kernel")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "s", 1) < 1:
        print("error: --s must be at least 1", file=sys.stderr)
        return 1
    if args.command == "fuzz" and args.count < 1:
        print("error: count must be at least 1", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 2
    except (PPIError, oracle.OracleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
