"""Command-line front end.

Exit status: 0 on success (audit-only discrepancies included), 1 when an
asserted identity fails or an equivalence audit finds a mixed class, 2 on a
usage error or a violated precondition.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .arith import OddPrime, legendre, primes_between
from .charsums import char_sum, interval_sum, legendre_product_interval
from .classnum import class_number, mordell_parity
from .errors import LegprodError
from .regions import (
    REGIONS,
    LinearForm,
    QuadraticForm,
    product_linear_square,
    product_linear_triangle,
    region_product,
    value_product_square,
    value_product_triangle,
)
from .registry import (
    CATALOG,
    default_jobs,
    equivalence_audit,
    list_theorems,
    mixed_classes,
    reports_to_csv,
    verify_many,
)


# -- argument types -----------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _form(text: str) -> QuadraticForm:
    coeffs = _int_list(text)
    if len(coeffs) != 3:
        raise argparse.ArgumentTypeError(f"a form is a,b,c, got {text!r}")
    try:
        return QuadraticForm(*coeffs)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _linear(text: str) -> LinearForm:
    coeffs = _int_list(text)
    if len(coeffs) != 2:
        raise argparse.ArgumentTypeError(f"a linear form is s,eps, got {text!r}")
    try:
        return LinearForm(*coeffs)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _prime_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}") from None


def _interval(text: str) -> tuple[Fraction, Fraction]:
    lo, sep, hi = text.partition(",")
    try:
        if not sep:
            raise ValueError
        return Fraction(lo), Fraction(hi)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected lo,hi as fractions of p, got {text!r}") from None


def _param(text: str) -> tuple[str, str]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected name=value, got {text!r}")
    return name.strip(), value.strip()


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        n = 0
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


# -- helpers ---------------------------------------------------------------------


def _primes(args) -> list[int]:
    if getattr(args, "prime", None) is not None:
        return [int(OddPrime(args.prime))]
    lo, hi = args.primes
    if lo <= 3 or lo > hi:
        raise LegprodError(f"--primes must satisfy 3 < lo <= hi, got {lo}..{hi}")
    return primes_between(lo, hi)


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_out(args, header: list[str], rows: list[list], single: bool = False) -> str:
    """Format a small table as text, json or csv."""
    if args.format == "json":
        records = [dict(zip(header, r)) for r in rows]
        return json.dumps(records[0] if single and len(records) == 1 else records, indent=2) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if single and len(rows) == 1 and len(header) == 2:
        return f"{rows[0][1]}\n"
    return "".join(" ".join(f"{h}={v}" for h, v in zip(header, r)) + "\n" for r in rows)


# -- commands ----------------------------------------------------------------------


def cmd_legendre(args) -> int:
    rows = [[p, legendre(args.a, p)] for p in _primes(args)]
    _emit(args, _rows_out(args, ["p", "legendre"], rows, single=args.prime is not None))
    return 0


def cmd_product(args) -> int:
    rows = []
    for p in _primes(args):
        if args.linear is not None:
            if args.values:
                raise LegprodError("--values is only available for quadratic forms")
            if args.region == "square":
                r = product_linear_square(args.linear, p, "naive" if args.method == "naive" else "prefix")
            else:
                r = product_linear_triangle(args.linear, p)
            rows.append([p, r.value, r.terms_skipped])
        elif args.values:
            fn = value_product_triangle if args.region == "triangle" else value_product_square
            rows.append([p, fn(args.form, p, "naive" if args.method == "naive" else "log")])
        else:
            r = region_product(args.form, args.region, p, args.method)
            rows.append([p, r.value, r.terms_skipped])
    header = ["p", "value"] if args.values else ["p", "value", "skipped"]
    if args.format == "text":
        text = "".join(" ".join(f"{h}={v}" for h, v in zip(header, row)) + "\n" for row in rows)
        if args.prime is not None:
            text = " ".join(f"{h} {v}" for h, v in zip(header[1:], rows[0][1:])) + "\n"
        _emit(args, text)
    else:
        _emit(args, _rows_out(args, header, rows, single=args.prime is not None))
    return 0


def cmd_charsum(args) -> int:
    rows = [[p, char_sum(args.shifts, p)] for p in _primes(args)]
    _emit(args, _rows_out(args, ["p", "F"], rows, single=args.prime is not None))
    return 0


def cmd_intervals(args) -> int:
    p = int(OddPrime(args.prime))
    if args.n is None and not args.interval:
        raise LegprodError("give --n and/or --interval")
    rows = []
    if args.n is not None:
        for r in range(1, args.n + 1):
            rows.append([f"S_{r}^{args.n}", interval_sum(r, args.n, p)])
    for lo, hi in args.interval or []:
        rows.append([f"({lo},{hi})", legendre_product_interval(lo, hi, p)])
    _emit(args, _rows_out(args, ["quantity", "value"], rows))
    return 0


def cmd_classnum(args) -> int:
    if args.disc is not None:
        _emit(args, _rows_out(args, ["D", "h"], [[args.disc, class_number(args.disc)]], single=True))
        return 0
    if args.prime is None:
        raise LegprodError("give --disc or --prime")
    p = int(OddPrime(args.prime))
    if p % 4 == 3:
        h = class_number(-p)
        header, row = ["p", "D", "h", "mordell_parity"], [p, -p, h, mordell_parity(p)]
    else:
        header, row = ["p", "D", "h"], [p, -4 * p, class_number(-4 * p)]
    _emit(args, _rows_out(args, header, [row]))
    return 0


def _theorem_ids(spec: str) -> list[str]:
    if spec == "all":
        return list(CATALOG)
    return [t.strip() for t in spec.split(",") if t.strip()]


def _report_text(reports, max_failures: int) -> str:
    lines = []
    for r in reports:
        lines.append(r.summary())
        for f in r.failures[:max_failures]:
            lines.append(f"    p={f.p} params={json.dumps(f.params, sort_keys=True)} claimed={f.claimed} computed={f.computed}")
        if len(r.failures) > max_failures:
            lines.append(f"    ... {len(r.failures) - max_failures} more")
    return "\n".join(lines) + "\n"


def _write_reports(args, reports, single: bool) -> None:
    if args.format == "json":
        payload = reports[0].to_dict() if single else [r.to_dict() for r in reports]
        _emit(args, json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        _emit(args, reports_to_csv(reports))
    else:
        _emit(args, _report_text(reports, args.max_failures))


def cmd_verify(args) -> int:
    ids = _theorem_ids(args.theorem)
    lo, hi = args.primes
    params = dict(args.param or [])
    jobs = args.jobs or default_jobs()
    reports = verify_many(ids, lo, hi, params, jobs=jobs, timing=args.timing)
    _write_reports(args, reports, single=args.theorem != "all" and len(ids) == 1)
    return 1 if any(r.failed for r in reports) else 0


def cmd_audit(args) -> int:
    lo, hi = args.primes
    jobs = args.jobs or default_jobs()
    report = equivalence_audit(args.form, args.region, args.modulus, hi, lo, jobs=jobs, timing=args.timing)
    _write_reports(args, [report], single=True)
    if args.format == "text":
        sys.stderr.write(f"mixed classes: {mixed_classes(report)}\n")
    return 1 if report.failures else 0


def cmd_list(args) -> int:
    rows = [list(t) for t in list_theorems()]
    if args.format == "text":
        _emit(args, "".join(f"{i:<20} {k:<9} {d}\n" for i, k, d in rows))
    else:
        _emit(args, _rows_out(args, ["id", "kind", "description"], rows))
    return 0


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="legprod",
        description="Legendre-symbol products over half-range regions, character sums, class numbers, and identity sweeps.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--output", help="write to this file instead of standard output")

    def prime_args(p, required=True):
        g = p.add_mutually_exclusive_group(required=required)
        g.add_argument("--prime", type=int)
        g.add_argument("--primes", type=_prime_range, metavar="LO..HI")

    p = sub.add_parser("legendre", help="Legendre symbol (a/p)")
    p.add_argument("a", type=int)
    prime_args(p)
    common(p)
    p.set_defaults(func=cmd_legendre)

    p = sub.add_parser("product", help="symbol or value product over the triangle or square")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--form", type=_form, metavar="A,B,C")
    g.add_argument("--linear", type=_linear, metavar="S,EPS")
    p.add_argument("--region", choices=REGIONS, default="triangle")
    p.add_argument("--values", action="store_true", help="product of the values mod p instead of the symbols")
    p.add_argument("--method", choices=("grouped", "naive"), default="grouped")
    prime_args(p)
    common(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("charsum", help="complete character sum F_p(a_1,...,a_r)")
    p.add_argument("--shifts", type=_int_list, required=True, metavar="A1,A2,...")
    prime_args(p)
    common(p)
    p.set_defaults(func=cmd_charsum)

    p = sub.add_parser("intervals", help="interval sums S_r^n and interval symbol products")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--n", type=_positive, help="print S_1^n .. S_n^n")
    p.add_argument("--interval", type=_interval, action="append", metavar="LO,HI",
                   help="product over integers in (LO*p, HI*p); repeatable")
    common(p)
    p.set_defaults(func=cmd_intervals)

    p = sub.add_parser("classnum", help="class numbers h(D), h(-p), h(-4p)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--disc", type=int)
    g.add_argument("--prime", type=int)
    common(p)
    p.set_defaults(func=cmd_classnum)

    p = sub.add_parser("verify", help="sweep catalog identities over a prime range")
    p.add_argument("--theorem", required=True, metavar="ID|all|ID,ID")
    p.add_argument("--primes", type=_prime_range, required=True, metavar="LO..HI")
    p.add_argument("--param", type=_param, action="append", metavar="NAME=VALUE")
    p.add_argument("--jobs", type=_positive, help="worker processes (default: $LEGPROD_JOBS or CPU count)")
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in reports")
    p.add_argument("--max-failures", type=int, default=10, help="failure lines per report in text output")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", help="equivalence audit of a form over a prime range")
    p.add_argument("--form", type=_form, required=True, metavar="A,B,C")
    p.add_argument("--region", choices=REGIONS, default="triangle")
    p.add_argument("--modulus", type=int)
    p.add_argument("--primes", type=_prime_range, default=(5, 3000), metavar="LO..HI")
    p.add_argument("--jobs", type=_positive)
    p.add_argument("--timing", action="store_true")
    p.add_argument("--max-failures", type=int, default=10)
    common(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("list", help="list catalog entries")
    common(p)
    p.set_defaults(func=cmd_list)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LegprodError as e:
        sys.stderr.write(f"legprod {args.command}: error: {e}\n")
        return 2


def run(argv: Sequence[str]) -> int:
    """Like :func:`main` but also maps argparse usage errors to status 2 instead of exiting."""
    try:
        return main(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
