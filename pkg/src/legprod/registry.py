"""Catalog of closed-form identities and the sweep engine that checks them.

Every entry maps a prime to a list of checks.  A *pointwise* check carries a
claimed and a computed value that must agree.  A *class* check carries only a
computed value plus a class key; the claim is that all primes sharing a key
(within one parameter setting) give the same value.  This is how periodicity
and "equivalent as functions of p" are made testable.

Entries are either ``asserted`` (a failure is a bug somewhere) or ``audit``
(literal readings of statements suspected to be misprinted; mismatches are
reported as discrepancies and never fail a run).
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Any, Callable, Iterable, Mapping, NamedTuple, Optional, Sequence

import numpy as np

from .arith import inverse, is_biquadratic_residue, legendre, primes_between, smallest_nonresidue
from .charsums import (
    cubic_sum,
    interval_sum,
    legendre_product_interval,
    shift_param_k,
    shift_param_kprime,
    transform_sides,
)
from .classnum import class_number, mordell_parity
from .errors import (
    BadFormModulus,
    BadModulus,
    BadParameter,
    DegenerateShift,
    EmptyRange,
    UnknownTheorem,
)
from .regions import (
    LinearForm,
    QuadraticForm,
    count_double,
    count_upper_left,
    nonresidue_count_gauss,
    product_linear_square,
    product_square,
    product_triangle,
    region_product,
    value_product_square,
    value_product_triangle,
)
from .tables import tables

ASSERTED = "asserted"
AUDIT = "audit"


class Check(NamedTuple):
    params: dict
    claimed: Any
    computed: Any
    key: Any = None  # set for class checks


@dataclass(frozen=True)
class Failure:
    p: int
    params: dict
    claimed: Any
    computed: Any

    def to_dict(self) -> dict:
        return {"p": self.p, "params": self.params, "claimed": self.claimed, "computed": self.computed}


@dataclass
class VerificationReport:
    theorem: str
    kind: str
    lo: int
    hi: int
    checked: int = 0
    skipped: int = 0
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    params: dict = field(default_factory=dict)
    elapsed: Optional[float] = None

    @property
    def status(self) -> str:
        if not self.failures:
            return "PASS"
        return "FAIL" if self.kind == ASSERTED else "DISCREPANCIES"

    @property
    def failed(self) -> bool:
        return self.status == "FAIL"

    def to_dict(self) -> dict:
        d = {
            "theorem": self.theorem,
            "kind": self.kind,
            "range": [self.lo, self.hi],
            "params": self.params,
            "checked": self.checked,
            "skipped": self.skipped,
            "cases": self.cases,
            "failures": [f.to_dict() for f in self.failures],
            "status": self.status,
        }
        if self.elapsed is not None:
            d["elapsed"] = round(self.elapsed, 3)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def csv_rows(self) -> list[list]:
        return [
            [self.theorem, f.p, json.dumps(f.params, sort_keys=True), json.dumps(f.claimed), json.dumps(f.computed)]
            for f in self.failures
        ]

    def summary(self) -> str:
        return (
            f"{self.theorem:<16} {self.status:<13} primes {self.lo}..{self.hi}  "
            f"checked={self.checked} skipped={self.skipped} cases={self.cases} failures={len(self.failures)}"
        )


CSV_HEADER = ["theorem", "p", "params", "claimed", "computed"]


def reports_to_csv(reports: Iterable[VerificationReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        w.writerows(r.csv_rows())
    return buf.getvalue()


# -- parameter parsing ------------------------------------------------------


def _as_int(v) -> int:
    try:
        return int(v)
    except (TypeError, ValueError):
        raise BadParameter(f"expected an integer, got {v!r}") from None


def _as_range(v) -> tuple[int, int]:
    if isinstance(v, str):
        lo, sep, hi = v.partition("..")
        if not sep:
            raise BadParameter(f"expected a range lo..hi, got {v!r}")
        v = (lo, hi)
    lo, hi = (_as_int(x) for x in v)
    if lo > hi:
        raise BadParameter(f"empty parameter range {lo}..{hi}")
    return lo, hi


def _as_forms(v) -> tuple[QuadraticForm, ...]:
    if isinstance(v, str):
        v = [chunk.split(",") for chunk in v.split(";") if chunk.strip()]
    out = []
    for item in v:
        if isinstance(item, QuadraticForm):
            out.append(item)
            continue
        coeffs = [_as_int(x) for x in item]
        if len(coeffs) != 3:
            raise BadParameter(f"a form needs three coefficients a,b,c, got {item!r}")
        out.append(QuadraticForm(*coeffs))
    return tuple(out)


def _as_fracs(v) -> tuple[Fraction, ...]:
    if isinstance(v, str):
        v = [x for x in v.split(";") if x.strip()]
    try:
        return tuple(Fraction(x) for x in v)
    except (ValueError, ZeroDivisionError):
        raise BadParameter(f"expected rationals v/u, got {v!r}") from None


def _frac_str(t: Fraction) -> str:
    return str(t)


# -- small helpers ----------------------------------------------------------


def _sign(e: int) -> int:
    """(-1)^e for any integer e, negative exponents included."""
    return -1 if e % 2 else 1


def _chi(a: int, p: int) -> int:
    return legendre(a, p)


def _frac_mod(t: Fraction, p: int) -> Optional[int]:
    """t mod p, or None when p divides the denominator."""
    if t.denominator % p == 0:
        return None
    return t.numerator * inverse(t.denominator, p) % p


def _prod(lo, hi, p: int) -> int:
    return legendre_product_interval(Fraction(lo), Fraction(hi), p)


def _nr_parity_sign(s: int, p: int) -> int:
    return _sign(nonresidue_count_gauss(s, p))


def _h(p: int) -> int:
    return class_number(-p) if p % 4 == 3 else class_number(-4 * p)


def _literal_interval_product(lo: Fraction, hi: Fraction, p: int) -> int:
    """Product of (a/p) over integers lo < a < hi, endpoints taken literally."""
    first = lo.__floor__() + 1
    last = hi.__ceil__() - 1
    if last < first:
        return 1
    out = 1
    for a in range(first, last + 1):
        out *= legendre(a, p)
    return out


def _odd_radical(n: int) -> int:
    n = abs(n)
    while n and n % 2 == 0:
        n //= 2
    r, q = 1, 3
    while q * q <= n:
        if n % q == 0:
            r *= q
            while n % q == 0:
                n //= q
        q += 2
    return r * n if n > 1 else r


def _nonzero_product(*xs: int) -> int:
    out = 1
    for x in xs:
        if x:
            out *= abs(x)
    return out


def default_modulus(f: QuadraticForm, region: str) -> int:
    """Residue-class modulus used to key equivalence audits.

    Triangle: 8|disc * 4c sigma| widened by the odd primes of a and b + 2c.
    Square: 8|4ac * b^2 * disc|.  Zero factors are omitted.
    """
    if region == "triangle":
        m = 8 * _nonzero_product(f.disc, 4 * f.c * f.sigma)
        for x in (f.a, f.b + 2 * f.c):
            m = lcm(m, _odd_radical(x))
    elif region == "square":
        m = 8 * _nonzero_product(4 * f.a * f.c, f.b * f.b, f.disc)
    else:
        raise ValueError(f"unknown region {region!r}")
    return max(m, 8)


def _cubic_at(t: Fraction, p: int) -> Optional[int]:
    """F_p(0,1,t) or None when t is undefined or collides with 0, 1 mod p."""
    k = _frac_mod(t, p)
    if k is None or k in (0, 1):
        return None
    return cubic_sum(k, p)


def _l35_closed_form(p: int) -> int:
    r, e = p % 20, (p - 1) // 4
    if r in (1, 9):
        return -pow(5, e, p) % p
    if r in (13, 17):
        return pow(-5, e, p)
    if r in (3, 7):
        return _sign((p - 10) // 20) % p
    return _sign((p - 5) // 10) % p


# -- entry type -------------------------------------------------------------

Evaluator = Callable[[int, dict], list[Check]]


@dataclass(frozen=True)
class Entry:
    id: str
    description: str
    kind: str
    evaluate: Evaluator
    applies: Callable[[int, dict], bool] = lambda p, params: True
    params: Mapping[str, tuple[Any, Callable]] = field(default_factory=dict)

    def resolve(self, given: Optional[Mapping[str, Any]] = None) -> dict:
        given = dict(given or {})
        unknown = sorted(set(given) - set(self.params))
        if unknown:
            known = ", ".join(sorted(self.params)) or "none"
            raise BadParameter(f"{self.id} does not take parameter(s) {', '.join(unknown)} (known: {known})")
        return {name: parse(given.get(name, default)) for name, (default, parse) in self.params.items()}


CATALOG: dict[str, Entry] = {}


def _register(entry: Entry) -> None:
    CATALOG[entry.id] = entry


# -- counting identities ----------------------------------------------------


def _all_j_check(p: int, bad_j: np.ndarray) -> Check:
    # one check per prime: claimed = every j agrees, computed = how many do
    params = {"j": f"2..{p - 1}"}
    if len(bad_j):
        params["bad_j"] = [int(j) for j in bad_j[:10]]
    return Check(params, p - 2, p - 2 - len(bad_j))


def _t21(p, params):
    t = tables(p)
    j = np.arange(2, p)
    sizes = t.triangle_counts[2:p]
    sign = 1 if p % 8 in (1, 3) else -1
    claimed = sign * t.chi[j - 1].astype(np.int64)
    computed = np.where(sizes % 2 == 1, -1, 1)
    return [_all_j_check(p, np.nonzero(claimed != computed)[0] + 2)]


_register(Entry(
    "T2.1",
    "(j-1/p) = (-1)^|M_p(j)| for p = 1,3 mod 8 and -(-1)^|M_p(j)| for p = 5,7 mod 8, all j in [2, p-1]",
    ASSERTED,
    _t21,
))


def _l22(p, params):
    t = tables(p)
    sizes = t.l_set_sizes[2:p]
    want = ((p * p - 1) // 8) % 2
    return [_all_j_check(p, np.nonzero(sizes % 2 != want)[0] + 2)]


_register(Entry(
    "L2.2",
    "|L_p(j)| = (p^2-1)/8 mod 2 for all j in [2, p-1]",
    ASSERTED,
    _l22,
))

DEFAULT_FORMS = "1,1,1;1,-1,1;1,0,1;2,5,2;1,4,1;1,-1,-1;3,-2,5;5,-2,-1;2,-3,7;4,0,-1"


def _t23_count(p, params):
    chi = tables(p).chi
    x = np.arange(2, p)
    odd_rows = chi[x - 1] == (-1 if p % 8 in (1, 3) else 1)
    checks = []
    for f in params["forms"]:
        fx = (f.a + f.b * x + f.c * x * x) % p
        n = int(np.count_nonzero(odd_rows & (chi[fx] == -1)))
        checks.append(Check({"form": str(f)}, _sign(n), product_triangle(f, p).value))
    return checks


_register(Entry(
    "T2.3-count",
    "triangle product = (-1)^#{x in [2,p-1]: (x-1/p) marks an odd row of M_p, (f(1,x)/p) = -1}",
    ASSERTED,
    _t23_count,
    params={"forms": (DEFAULT_FORMS, _as_forms)},
))


def _t24_count(p, params):
    chi = tables(p).chi
    h = (p - 1) // 2
    x = np.arange(1, p)
    odd_rows = chi[x] == -_sign(h)
    checks = []
    for f in params["forms"]:
        fx = (f.a + f.b * x + f.c * x * x) % p
        n = int(np.count_nonzero(odd_rows & (chi[fx] == -1)))
        checks.append(Check({"form": str(f)}, _sign(n), product_square(f, p).value))
    return checks


_register(Entry(
    "T2.4-count",
    "square product = (-1)^#{x in [1,p-1]: (x/p) = -(-1)^((p-1)/2), (f(1,x)/p) = -1} (Gauss lemma row count)",
    ASSERTED,
    _t24_count,
    params={"forms": (DEFAULT_FORMS, _as_forms)},
))


# -- equivalence and periodicity -------------------------------------------


def _t23i(p, params):
    checks = []
    for f in params["forms"]:
        try:
            k = shift_param_k(f, p)
        except BadFormModulus:
            continue
        m = default_modulus(f, "triangle")
        checks.append(Check({"form": str(f)}, None, product_triangle(f, p).value, (p % m, cubic_sum(k, p) % 16)))
    return checks


_register(Entry(
    "T2.3i",
    "triangle product is constant on classes (p mod M, F_p(0,1,k) mod 16), k = -disc/(4c sigma), p not dividing c sigma",
    ASSERTED,
    _t23i,
    params={"forms": (DEFAULT_FORMS, _as_forms)},
))


def _t24i(p, params):
    checks = []
    for f in params["forms"]:
        try:
            k = shift_param_kprime(f, p)
        except BadFormModulus:
            continue
        m = default_modulus(f, "square")
        checks.append(Check({"form": str(f)}, None, product_square(f, p).value, (p % m, cubic_sum(k, p) % 16)))
    return checks


_register(Entry(
    "T2.4i",
    "square product is constant on classes (p mod M, F_p(0,1,k') mod 16), k' = b^2/(4ac), p not dividing ac",
    ASSERTED,
    _t24i,
    params={"forms": (DEFAULT_FORMS, _as_forms)},
))


def _t24iii(p, params):
    checks = []
    for f in params["forms"]:
        if f.b != 0:
            raise BadParameter(f"form {f} has a cross term; this entry takes forms a i^2 + c j^2")
        m = default_modulus(f, "square")
        checks.append(Check({"form": str(f)}, None, product_square(f, p).value, (p % m,)))
    return checks


_register(Entry(
    "T2.4iii",
    "square product of a i^2 + c j^2 is periodic in p (constant on p mod M)",
    ASSERTED,
    _t24iii,
    params={"forms": ("1,0,1;1,0,2;3,0,-1;2,0,5;1,0,-1", _as_forms)},
))


def _t24ii_plus(p, params):
    lo, hi = params["s"]
    checks = []
    for s in range(max(lo, 2), min(hi, p - 2) + 1):
        if s % p in (0, 1, p - 1):
            continue
        computed = product_square(QuadraticForm.from_factors(1, 1, s, 1), p).value
        cs = _chi(s, p)
        e = (1 + _chi(s - 1, p)) // 2 if p % 4 == 1 else (3 + _chi(s - 1, p)) // 2
        checks.append(Check({"s": s}, cs ** e, computed))
    return checks


def _t24ii_plus_printed(p, params):
    lo, hi = params["s"]
    checks = []
    for s in range(max(lo, 2), min(hi, p - 2) + 1):
        if s % p in (0, 1, p - 1):
            continue
        computed = product_square(QuadraticForm.from_factors(1, 1, s, 1), p).value
        checks.append(Check({"s": s}, _chi(s, p) ** ((3 + _chi(s - 1, p)) // 2), computed))
    return checks


def _t24ii_minus(p, params):
    lo, hi = params["s"]
    checks = []
    for s in range(max(lo, 2), min(hi, p - 2) + 1):
        if s % p in (0, 1, p - 1):
            continue
        computed = product_square(QuadraticForm.from_factors(1, 1, s, -1), p).value
        claimed = _chi(-1, p) * _chi(-s, p) ** ((1 + _chi(-s - 1, p)) // 2)
        checks.append(Check({"s": s}, claimed, computed))
    return checks


_register(Entry(
    "T2.4ii-plus",
    "square product of (i+j)(si+j) = (s/p)^e with e = [1+((s-1)/p)]/2 for p = 1 mod 4 and [3+((s-1)/p)]/2 for p = 3 mod 4",
    ASSERTED,
    _t24ii_plus,
    params={"s": ("2..50", _as_range)},
))
_register(Entry(
    "T2.4ii-minus",
    "square product of (i+j)(si-j) = (-1/p) (-s/p)^([1+((-s-1)/p)]/2)",
    ASSERTED,
    _t24ii_minus,
    params={"s": ("2..50", _as_range)},
))


# -- character sum transformations -----------------------------------------


def _l31(p, params):
    lo, hi = params["m"]
    ns = (1, smallest_nonresidue(p))
    checks = []
    for m in range(max(lo, 2), min(hi, p - 2) + 1):
        try:
            for n in ns:
                sides = transform_sides(m, p, n)
                parts = ("i-inverse", "i-reflect", "ii", "iii") if n == 1 else ("iii",)
                for part in parts:
                    lhs, rhs = sides[part]
                    checks.append(Check({"m": m, "n": n, "part": part}, rhs, lhs))
        except DegenerateShift:
            continue
    return checks


def _l31_printed(p, params):
    lo, hi = params["m"]
    checks = []
    for m in range(max(lo, 2), min(hi, p - 2) + 1):
        try:
            for n in (1, smallest_nonresidue(p)):
                lhs, rhs = transform_sides(m, p, n)["iii-minus-one"]
                checks.append(Check({"m": m, "n": n, "part": "iii"}, rhs, lhs))
        except DegenerateShift:
            continue
    return checks


_register(Entry(
    "L3.1",
    "F(0,1,m) = (m/p)F(0,1,1/m) = (-1/p)F(0,1,1-m); F(0,1,m^2) = (m/p)F(0,1,(m+1)^2/4m); "
    "sum_y ((y^2+n)/p)((y^2+nm)/p) = -1 + (n/p)F(0,1,m), for n = 1 and the least nonresidue",
    ASSERTED,
    _l31,
    params={"m": ("2..1000000000", _as_range)},
))


# -- explicit evaluations for quadratic forms ------------------------------


def _c32(p, params):
    f = QuadraticForm(1, 0, 1)
    claimed = _sign((p - 5) // 8) if p % 4 == 1 else _sign((p + 1) // 8)
    return [
        Check({"part": "value"}, claimed % p, value_product_triangle(f, p)),
        Check({"part": "equivalence"}, None, product_triangle(f, p).value, (p % 16, cubic_sum(2, p) % 16)),
    ]


_register(Entry(
    "C3.2",
    "product of i^2+j^2 over the triangle = (-1)^floor((p-5)/8) mod p (p = 1 mod 4), (-1)^floor((p+1)/8) (p = 3 mod 4); "
    "symbol product constant on (p mod 16, F(0,1,2) mod 16)",
    ASSERTED,
    _c32,
))

DEFAULT_T_VALUES = ";".join(
    sorted({str(Fraction(v, u)) for v in range(-9, 10) for u in range(-9, 10) if u}, key=Fraction)
)


def _t33i(p, params, printed=False):
    checks = []
    for t in params["t"]:
        tr = _frac_mod(t, p)
        if tr is None:
            continue
        computed = product_triangle(QuadraticForm(1, -1, tr), p).value
        diag = 1 - 4 * tr if printed else 4 * tr - 1
        claimed = -1 if p % 8 in (5, 7) and _chi(diag, p) == -1 else 1
        checks.append(Check({"t": _frac_str(t)}, claimed, computed))
    return checks


_register(Entry(
    "T3.3i",
    "triangle product of i^2 - ij + t j^2 = -1 iff p = 5,7 mod 8 and ((4t-1)/p) = -1",
    ASSERTED,
    _t33i,
    params={"t": (DEFAULT_T_VALUES, _as_fracs)},
))


def _t33ii(p, params):
    lo, hi = params["s"]
    checks = []
    for s in range(max(lo, 2), hi + 1):
        if (s * (s * s - 1)) % p == 0:
            continue
        m = 16 * s * (s * s - 1)
        checks.append(Check({"s": s, "part": "F(0,1,s^2)"}, None, cubic_sum(s * s, p) % 16, (p % m,)))
        prod = product_triangle(QuadraticForm(s * s, 0, -1), p).value
        checks.append(Check({"s": s, "part": "product"}, None, prod, (p % m,)))
    return checks


_register(Entry(
    "T3.3ii",
    "F(0,1,s^2) mod 16 and the triangle product of s^2 i^2 - j^2 are periodic in p (modulus 16 s(s^2-1))",
    ASSERTED,
    _t33ii,
    params={"s": ("2..6", _as_range)},
))


def _equivalence_family(p, params, base: Fraction, shifts_key: str, forms_key: str, square_form=None):
    m = params["modulus"]
    f_base = _cubic_at(base, p)
    checks = []
    if f_base is None:
        return checks
    checks.append(Check({"part": "periodic", "shift": _frac_str(base)}, None, f_base % 16, (p % m,)))
    key = (p % m, f_base % 16)
    for t in params[shifts_key]:
        ft = _cubic_at(t, p)
        if ft is not None:
            checks.append(Check({"part": "shift", "shift": _frac_str(t)}, None, ft % 16, key))
    for f in params[forms_key]:
        v = product_triangle(f, p).value
        checks.append(Check({"part": "triangle", "form": str(f)}, None, v, key))
        checks.append(Check({"part": "periodic", "form": str(f)}, None, v, (p % m,)))
    if square_form is not None:
        v = product_square(square_form, p).value
        checks.append(Check({"part": "square", "form": str(square_form)}, None, v, key))
    return checks


def _t34(p, params):
    return _equivalence_family(p, params, Fraction(4), "shifts", "forms")


_register(Entry(
    "T3.4",
    "F(0,1,n) mod 16 for n = 4,-3,9,-8,1/4,3/4,4/3,-1/3 and the triangle products of "
    "i^2+-ij+j^2, 2i^2+-5ij+2j^2, 4i^2-j^2, 9i^2-j^2, 3i^2+j^2, 8i^2+j^2 are constant on "
    "(p mod M, F(0,1,4) mod 16); F(0,1,4) mod 16 and the products are periodic mod M",
    ASSERTED,
    _t34,
    params={
        "modulus": (48, _as_int),
        "shifts": ("4;-3;9;-8;1/4;3/4;4/3;-1/3", _as_fracs),
        "forms": ("1,1,1;1,-1,1;2,5,2;2,-5,2;4,0,-1;9,0,-1;3,0,1;8,0,1", _as_forms),
    },
))


def _t36(p, params):
    return _equivalence_family(p, params, Fraction(5), "shifts", "forms", QuadraticForm(1, -1, -1))


_register(Entry(
    "T3.6",
    "F(0,1,n) mod 16 for n = 5,-4,1/5,4/5,5/4,-1/4, the triangle products of i^2+ij-j^2, "
    "i^2+-3ij+j^2, 4i^2+j^2, i^2+4j^2, 5i^2-j^2, i^2-5j^2 and the square product of "
    "i^2-ij-j^2 are constant on (p mod M, F(0,1,5) mod 16); periodic mod M",
    ASSERTED,
    _t36,
    params={
        "modulus": (80, _as_int),
        "shifts": ("5;-4;1/5;4/5;5/4;-1/4", _as_fracs),
        "forms": ("1,1,-1;1,3,1;1,-3,1;4,0,1;1,0,4;5,0,-1;1,0,-5", _as_forms),
    },
))


def _l35(p, params):
    f = QuadraticForm(1, -1, -1)
    return [Check({"residue": p % 20}, _l35_closed_form(p), value_product_square(f, p))]


def _l35_triangle(p, params):
    f = QuadraticForm(1, -1, -1)
    return [Check({"residue": p % 20}, _l35_closed_form(p), value_product_triangle(f, p))]


_not_five = lambda p, params: p != 5  # noqa: E731

_register(Entry(
    "L3.5",
    "product of i^2-ij-j^2 over the square [1,(p-1)/2]^2 mod p: -5^((p-1)/4) (p = 1,9 mod 20), "
    "(-5)^((p-1)/4) (13,17), (-1)^floor((p-10)/20) (3,7), (-1)^floor((p-5)/10) (11,19); p != 5",
    ASSERTED,
    _l35,
    _not_five,
))


def _r35_derived(p, params):
    f = QuadraticForm(1, -1, -1)
    return [Check({"residue": p % 40}, _chi(_l35_closed_form(p), p), product_square(f, p).value)]


def _r35_printed(p, params):
    f = QuadraticForm(1, -1, -1)
    claimed = -1 if p % 40 in (13, 31, 37, 39) else 1
    return [Check({"residue": p % 40}, claimed, product_square(f, p).value)]


_register(Entry(
    "R3.5-derived",
    "square symbol product of i^2-ij-j^2 = Legendre symbol of the L3.5 closed form "
    "(-1 exactly for p = 3,7,13,19,37,39 mod 40); p != 5",
    ASSERTED,
    _r35_derived,
    _not_five,
))


def _c74(p, params):
    v = product_triangle(QuadraticForm(1, 4, 1), p).value
    return [Check({}, 1 if is_biquadratic_residue(2, p) else -1, v)]


_register(Entry(
    "C7.4-k3",
    "for p = 17 mod 24, the triangle product of i^2+4ij+j^2 is +1 iff 2 is a biquadratic residue",
    ASSERTED,
    _c74,
    lambda p, params: p % 24 == 17,
))


# -- linear forms and class numbers ----------------------------------------


def _l41i(p, params):
    computed = product_linear_square(LinearForm(1, 1), p).value
    claimed = _chi(2, p) if p % 4 == 1 else _chi(2, p) * _sign((class_number(-p) + 1) // 2)
    return [Check({}, claimed, computed)]


_register(Entry(
    "L4.1i",
    "square product of i+j = (2/p) (p = 1 mod 4), (2/p)(-1)^((h(-p)+1)/2) (p = 3 mod 4)",
    ASSERTED,
    _l41i,
))


def _l41ii(p, params):
    computed = product_linear_square(LinearForm(1, -1), p).value
    h = (p - 1) // 2
    return [Check({}, _chi(-1, p) ** (h * (h - 1) // 2 % 2), computed)]


def _l41ii_printed(p, params):
    computed = product_linear_square(LinearForm(1, -1), p).value
    return [Check({}, 1 if p % 8 == 5 else -1, computed)]


_register(Entry(
    "L4.1ii",
    "product of (i-j/p) over i != j in [1,(p-1)/2] = (-1/p)^(h(h-1)/2), h = (p-1)/2; -1 exactly for p = 7 mod 8",
    ASSERTED,
    _l41ii,
))


def _l41_mordell(p, params):
    h = class_number(-p)
    return [
        Check({"part": "h odd"}, 1, h % 2),
        Check({"part": "parity"}, (h + 1) // 2 % 2, mordell_parity(p)),
        Check({"part": "product (0,p/2)"}, _sign((h + 1) // 2), _prod(0, Fraction(1, 2), p)),
    ]


_register(Entry(
    "L4.1-mordell",
    "p = 3 mod 4: h(-p) is odd and the nonresidue count in (0,p/2) has the parity of (h(-p)+1)/2",
    ASSERTED,
    _l41_mordell,
    lambda p, params: p % 4 == 3,
))


def _s_values(params, p) -> Iterable[int]:
    lo, hi = params["s"]
    for s in range(lo, hi + 1):
        if s % p not in (0, 1, p - 1):
            yield s


def _t42_plus(p, params, printed=False):
    checks = []
    for s in _s_values(params, p):
        sign_n = _nr_parity_sign(s, p)
        if p % 4 == 1:
            claimed = (_chi(2, p) if printed else _chi(2 * s, p)) * sign_n
        else:
            claimed = _chi(2 * s, p) * sign_n * _sign((class_number(-p) + 1) // 2)
        checks.append(Check({"s": s}, claimed, product_linear_square(LinearForm(s, 1), p).value))
    return checks


def _t42_minus(p, params):
    checks = []
    for s in _s_values(params, p):
        sign_n = _nr_parity_sign(s, p)
        claimed = _chi(s, p) * sign_n if p % 4 == 1 else -_chi(2, p) * sign_n
        checks.append(Check({"s": s}, claimed, product_linear_square(LinearForm(s, -1), p).value))
    return checks


_register(Entry(
    "T4.2-plus",
    "square product of si+j = (2s/p)(-1)^#N_p(s) (p = 1 mod 4), (2s/p)(-1)^(#N_p(s)+(h(-p)+1)/2) (p = 3 mod 4)",
    ASSERTED,
    _t42_plus,
    params={"s": ("2..10", _as_range)},
))
_register(Entry(
    "T4.2-minus",
    "square product of si-j = (s/p)(-1)^#N_p(s) (p = 1 mod 4), -(2/p)(-1)^#N_p(s) (p = 3 mod 4)",
    ASSERTED,
    _t42_minus,
    params={"s": ("2..10", _as_range)},
))


def _t42_four(p, params):
    computed = product_linear_square(LinearForm(4, -1), p).value
    claimed = _sign((p - 1) // 4) if p % 4 == 1 else _sign(p // 8)
    return [Check({}, claimed, computed)]


_register(Entry(
    "T4.2-4i-j",
    "square product of 4i-j = (-1)^((p-1)/4) (p = 1 mod 4), (-1)^floor(p/8) (p = 3 mod 4)",
    ASSERTED,
    _t42_four,
))


def _t43(p, params):
    k, r = divmod(p, 8)
    claimed = {1: 1, 5: -1, 3: _sign(k), 7: _sign(k + 1)}[r]
    n4 = _nr_parity_sign(4, p)
    via_intervals = _prod(Fraction(1, 8), Fraction(1, 4), p) * _prod(Fraction(3, 8), Fraction(1, 2), p)
    return [Check({"part": "table"}, claimed, n4), Check({"part": "intervals"}, via_intervals, n4)]


_register(Entry(
    "T4.3",
    "(-1)^#N_p(4) = 1, -1, (-1)^k, (-1)^(k+1) for p = 1, 5, 3, 7 + 8k",
    ASSERTED,
    _t43,
))


def _l44(p, params):
    h4 = class_number(-4 * p)
    quarter = _prod(0, Fraction(1, 4), p)
    if p % 8 == 1:
        return [
            Check({"part": "h(-4p) mod 4"}, 0, h4 % 4),
            Check({"part": "product (0,p/4)"}, _sign((p - 1) // 8 + h4 // 4), quarter),
        ]
    return [
        Check({"part": "h(-4p) mod 4"}, 2, h4 % 4),
        Check({"part": "product (0,p/4)"}, _sign((p - 5) // 8 + (h4 - 2) // 4), quarter),
    ]


_register(Entry(
    "L4.4",
    "p = 1 mod 8: 4 | h(-4p), product over (0,p/4) = (-1)^((p-1)/8+h(-4p)/4); "
    "p = 5 mod 8: h(-4p) = 2 mod 4, product = (-1)^((p-5)/8+(h(-4p)-2)/4)",
    ASSERTED,
    _l44,
    lambda p, params: p % 4 == 1,
))


def _l45(p, params):
    if p % 8 == 3:
        return [Check({"sum": "S_1^4"}, 0, interval_sum(1, 4, p))]
    return [Check({"sum": "S_2^4"}, 0, interval_sum(2, 4, p))]


_register(Entry(
    "L4.5",
    "S_1^4 = 0 for p = 3 mod 8 and S_2^4 = 0 for p = 7 mod 8",
    ASSERTED,
    _l45,
    lambda p, params: p % 4 == 3,
))


def _c46(p, params):
    k = p // 8
    n2 = _nr_parity_sign(2, p)
    quarter = _prod(0, Fraction(1, 4), p)
    if p % 4 == 1:
        return [Check({"part": "i"}, _chi(2, p) * quarter, n2)]
    hp = class_number(-p)
    if p % 8 == 3:
        return [
            Check({"part": "ii product (0,p/4)"}, _sign(k), quarter),
            Check({"part": "ii N_p(2)"}, _sign(k + (hp + 1) // 2), n2),
            Check({"part": "ii (0,p/8) u (3p/8,p/2)"}, 1,
                  _prod(0, Fraction(1, 8), p) * _prod(Fraction(3, 8), Fraction(1, 2), p)),
        ]
    return [
        Check({"part": "iii product (0,p/4)"}, _sign(k + 1 + (hp + 1) // 2), quarter),
        Check({"part": "iii N_p(2)"}, _sign(k + 1), n2),
        Check({"part": "iii (p/8,3p/8)"}, 1, _prod(Fraction(1, 8), Fraction(3, 8), p)),
    ]


_register(Entry(
    "C4.6",
    "(-1)^#N_p(2) and the products over (0,p/4), (0,p/8) u (3p/8,p/2), (p/8,3p/8) by p mod 8",
    ASSERTED,
    _c46,
))


def _c47(p, params, printed=False):
    k, r = divmod(p, 8)
    quarter = _prod(0, Fraction(1, 4), p)
    h = _h(p)
    plus = product_linear_square(LinearForm(2, 1), p).value
    minus = product_linear_square(LinearForm(2, -1), p).value
    if r == 1:
        row_plus = row_minus = _sign(k + h // 4)
    elif r == 5:
        row_minus = _sign(k + (h - 2) // 4)
        row_plus = row_minus if printed else -row_minus
    elif r == 3:
        row_plus, row_minus = _sign(k), _sign(k + (h + 1) // 2)
    else:
        row_plus, row_minus = _sign(k + 1 + (h + 1) // 2), _sign(k)
    interval_claim = quarter if printed or r != 5 else -quarter
    return [
        Check({"part": "2i+j interval"}, interval_claim, plus),
        Check({"part": "2i+j table"}, row_plus, plus),
        Check({"part": "2i-j N_p(2)"}, _chi(-2, p) * _nr_parity_sign(2, p), minus),
        Check({"part": "2i-j table"}, row_minus, minus),
    ]


_register(Entry(
    "C4.7",
    "square products of 2i+-j: 2i+j = (2/p)^[p=5 mod 8] times the product over (0,p/4), 2i-j = (-2/p)(-1)^#N_p(2), "
    "and the class-number table by p mod 8 (with a sign flip on the 2i+j row for p = 5 mod 8)",
    ASSERTED,
    _c47,
))


def _t47(p, params, printed=False):
    n8 = _nr_parity_sign(8, p)
    upper = _prod(Fraction(1, 4), Fraction(1, 2), p)
    if p % 8 == 7:
        claimed = 1
    elif p % 8 == 5 and not printed:
        claimed = -upper
    else:
        claimed = upper
    return [Check({"residue": p % 8}, claimed, n8)]


_register(Entry(
    "T4.7",
    "(-1)^#N_p(8) = 1 (p = 7 mod 8), minus the product over (p/4,p/2) (p = 5 mod 8), that product otherwise",
    ASSERTED,
    _t47,
))


def _l48(p, params):
    if p % 40 in (3, 27):
        return [Check({"sum": "S_1^10"}, 0, interval_sum(1, 10, p))]
    total = interval_sum(1, 10, p) + interval_sum(3, 10, p) + interval_sum(5, 10, p)
    return [Check({"sum": "S_1^10+S_3^10+S_5^10"}, 0, total)]


_register(Entry(
    "L4.8",
    "S_1^10 = 0 for p = 3,27 mod 40; S_1^10 + S_3^10 + S_5^10 = 0 for p = 7,23 mod 40 (p > 10)",
    ASSERTED,
    _l48,
    lambda p, params: p > 10 and p % 40 in (3, 27, 7, 23),
))


def _t49(p, params, printed=False):
    n5 = _nr_parity_sign(5, p)
    r = p % 20
    tenth = _prod(0, Fraction(1, 10), p)
    checks = [Check({"part": "definition"},
                    _prod(Fraction(1, 10), Fraction(1, 5), p) * _prod(Fraction(3, 10), Fraction(2, 5), p), n5)]
    if r in (9, 13):
        checks.append(Check({"part": "i"}, tenth, n5))
    elif r in (1, 17):
        checks.append(Check({"part": "i"}, _chi(2, p) * tenth, n5))
    else:
        rest = _prod(Fraction(1, 10), Fraction(1, 2), p)
        a, b = (5, 10) if printed else (10, 5)
        factor = a if r in (3, 19) else b
        checks.append(Check({"part": "ii"}, _chi(factor, p) * rest, n5))
    if r == 3:
        checks.append(Check({"part": "iii"}, 1, tenth))
    elif r == 7:
        checks.append(Check({"part": "iii"}, _chi(2, p), tenth))
    return checks


_register(Entry(
    "T4.9",
    "(-1)^#N_p(5) from the definition of E_p(5): product over (0,p/10) [times (2/p) for p = 1,17 mod 20] when p = 1 mod 4; "
    "(10/p) resp. (5/p) times the product over (p/10,p/2) for p = 3,19 resp. 7,11 mod 20; "
    "product over (0,p/10) = 1 (p = 3 mod 20), (2/p) (p = 7 mod 20)",
    ASSERTED,
    _t49,
    lambda p, params: p != 5,
))


def _l410(p, params):
    if p % 12 == 11:
        return [Check({"sum": "S_2^6"}, 0, interval_sum(2, 6, p))]
    return [Check({"sum": "S_1^6+S_3^6"}, 0, interval_sum(1, 6, p) + interval_sum(3, 6, p))]


_register(Entry(
    "L4.10",
    "S_2^6 = 0 for p = 11 mod 12; S_1^6 + S_3^6 = 0 for p = 7 mod 12",
    ASSERTED,
    _l410,
    lambda p, params: p % 12 in (7, 11),
))


def _t410(p, params):
    n3 = _nr_parity_sign(3, p)
    third = _prod(0, Fraction(1, 3), p)
    upper = _prod(Fraction(1, 3), Fraction(1, 2), p)
    claimed = {
        1: _chi(2, p) * third,
        5: third,
        7: -upper,
        11: _chi(2, p) * upper,
    }[p % 12]
    return [
        Check({"part": "definition"}, _prod(Fraction(1, 6), Fraction(1, 3), p), n3),
        Check({"part": "table"}, claimed, n3),
    ]


_register(Entry(
    "T4.10",
    "(-1)^#N_p(3) = product over (p/6,p/3) = (2/p)P(0,p/3), P(0,p/3), -P(p/3,p/2), (2/p)P(p/3,p/2) for p = 1,5,7,11 mod 12",
    ASSERTED,
    _t410,
))


def _l411(p, params, printed=False):
    s = [None] + [interval_sum(r, 12, p) for r in range(1, 13)]
    r = p % 24
    if r == 1:
        return [Check({"part": "i S2=S4=S6"}, True, s[2] == s[4] == s[6]),
                Check({"part": "i S3=S5"}, True, s[3] == s[5])]
    if r == 19:
        return [Check({"part": "ii S2+S4+S6"}, 0, s[2] + s[4] + s[6])]
    if r == 23:
        return [Check({"part": "iii S2+S6"}, 0, s[2] + s[6]), Check({"part": "iii S4"}, 0, s[4])]
    if r == 7:
        return [Check({"part": "iv S1+S3+S5"}, 0, s[1] + s[3] + s[5])]
    checks = [Check({"part": "v S2=S5"}, True, s[2] == s[5])]
    if printed:
        checks.append(Check({"part": "v S_2^4"}, 0, interval_sum(2, 4, p)))
        checks.append(Check({"part": "v S4+S5+S6"}, 0, s[4] + s[5] + s[6]))
    else:
        checks.append(Check({"part": "v S_1^4"}, 0, interval_sum(1, 4, p)))
        checks.append(Check({"part": "v S1+S2+S3"}, 0, s[1] + s[2] + s[3]))
    return checks


_l411_applies = lambda p, params: p > 12 and p % 24 in (1, 7, 11, 19, 23)  # noqa: E731

_register(Entry(
    "L4.11",
    "twelfth-interval sums S_r^12: S2=S4=S6, S3=S5 (p = 1 mod 24); S2+S4+S6 = 0 (19); S2+S6 = S4 = 0 (23); "
    "S1+S3+S5 = 0 (7); S2 = S5 and S_1^4 = S1+S2+S3 = 0 (11); p > 12",
    ASSERTED,
    _l411,
    _l411_applies,
))


def _t412(p, params):
    n6 = _nr_parity_sign(6, p)
    mid = _prod(Fraction(1, 4), Fraction(1, 3), p)
    checks = [
        Check({"part": "definition"},
              _prod(Fraction(1, 12), Fraction(1, 6), p) * mid * _prod(Fraction(5, 12), Fraction(1, 2), p), n6),
        Check({"part": "i"}, mid if p % 4 == 1 else _chi(3, p) * mid, n6),
    ]
    k, r = divmod(p, 24)
    if r == 1:
        checks.append(Check({"part": "ii"}, _prod(0, Fraction(1, 12), p), n6))
    elif r in (19, 23):
        checks.append(Check({"part": "ii"}, _sign(k + 1), n6))
    elif r == 7:
        checks.append(Check({"part": "ii"}, _sign(k) * _prod(0, Fraction(1, 2), p), n6))
    elif r == 11:
        checks.append(Check({"part": "ii"}, _sign(k + 1) * _prod(0, Fraction(1, 2), p), n6))
    return checks


_register(Entry(
    "T4.12",
    "(-1)^#N_p(6) = P(p/4,p/3) times (3/p) when p = 3 mod 4; by p mod 24 (p = 1,19,23,7,11 + 24k): "
    "P(0,p/12), (-1)^(k+1), (-1)^(k+1), (-1)^k P(0,p/2), (-1)^(k+1) P(0,p/2)",
    ASSERTED,
    _t412,
))


# -- audit entries: literal readings ----------------------------------------


def _r24_conj71(p, params):
    bracket = _chi(-1, p) + _chi(2, p) + _chi(6, p) + (1 if p % 3 == 1 else -1)
    checks = []
    for sign, f in ((1, QuadraticForm(2, 5, 2)), (-1, QuadraticForm(2, -5, 2))):
        claimed = Fraction(_chi(sign, p) * bracket, 2)
        claimed = int(claimed) if claimed.denominator == 1 else str(claimed)
        checks.append(Check({"form": str(f)}, claimed, product_triangle(f, p).value))
    return checks


_register(Entry(
    "R2.4-conj71",
    "literal: triangle product of 2i^2+-5ij+2j^2 = (1/2)(+-1/p)[(-1/p)+(2/p)+(6/p)+(p/3)]",
    AUDIT,
    _r24_conj71,
))

_register(Entry(
    "R3.5",
    "literal: square symbol product of i^2-ij-j^2 = -1 exactly for p = 13,31,37,39 mod 40; p != 5",
    AUDIT,
    _r35_printed,
    _not_five,
))


def _t23_row_counts(p, params):
    """Raw row counts of the two extra triangles, against (j/p) and (j(j-2)/p)."""
    checks = []
    lo, hi = params["j"]
    for j in range(max(lo, 2), min(hi, p - 1) + 1):
        checks.append(Check({"j": j, "count": "upper-left"}, _chi(j, p), _sign(count_upper_left(j, p))))
        checks.append(Check({"j": j, "count": "double"}, _chi(j * (j - 2), p), _sign(count_double(j, p))))
    return checks


_register(Entry(
    "R2.3-counts",
    "exploratory: (-1)^count for the upper-left and double-width triangle rows set against (j/p) and (j(j-2)/p)",
    AUDIT,
    _t23_row_counts,
    params={"j": ("2..40", _as_range)},
))

_register(Entry(
    "T2.4ii-plus-printed",
    "literal: square product of (i+j)(si+j) = (s/p)^([3+((s-1)/p)]/2) for every p",
    AUDIT,
    _t24ii_plus_printed,
    params={"s": ("2..50", _as_range)},
))
_register(Entry(
    "L3.1iii-printed",
    "literal: sum_y ((y^2+n)/p)((y^2+nm)/p) = -1 + (-1/p)F(0,1,m) for n = 1 and the least nonresidue",
    AUDIT,
    _l31_printed,
    params={"m": ("2..1000000000", _as_range)},
))
_register(Entry(
    "T3.3i-printed",
    "literal: triangle product of i^2-ij+tj^2 = -1 iff p = 5,7 mod 8 and ((1-4t)/p) = -1",
    AUDIT,
    lambda p, params: _t33i(p, params, printed=True),
    params={"t": (DEFAULT_T_VALUES, _as_fracs)},
))
_register(Entry(
    "L3.5-triangle",
    "literal: the L3.5 closed forms against the product of i^2-ij-j^2 over the triangle; p != 5",
    AUDIT,
    _l35_triangle,
    _not_five,
))
_register(Entry(
    "L4.1ii-printed",
    "literal: product of (i-j/p) over i != j = 1 for p = 5 mod 8, -1 otherwise",
    AUDIT,
    _l41ii_printed,
))
_register(Entry(
    "T4.2-plus-printed",
    "literal: square product of si+j = (2/p)(-1)^#N_p(s) for p = 1 mod 4",
    AUDIT,
    lambda p, params: _t42_plus(p, params, printed=True),
    lambda p, params: p % 4 == 1,
    params={"s": ("2..10", _as_range)},
))
_register(Entry(
    "C4.7-printed",
    "literal: 2i+j product = product over (0,p/4) and the printed class-number table",
    AUDIT,
    lambda p, params: _c47(p, params, printed=True),
))
_register(Entry(
    "T4.7-printed",
    "literal: (-1)^#N_p(8) = 1 (p = 7 mod 8), product over (p/4,p/2) otherwise",
    AUDIT,
    lambda p, params: _t47(p, params, printed=True),
))
_register(Entry(
    "T4.9-printed",
    "literal: (5/p) for p = 3,19 mod 20 and (10/p) for p = 7,11 mod 20 in front of the product over (p/10,p/2)",
    AUDIT,
    lambda p, params: _t49(p, params, printed=True),
    lambda p, params: p != 5,
))


def _t49_intervals(p, params):
    n5 = _nr_parity_sign(5, p)
    literal = _prod(Fraction(1, 10), Fraction(1, 5), p) * _prod(Fraction(3, 10), Fraction(4, 5), p)
    return [Check({"region": "(p/10,p/5) u (3p/10,4p/5)"}, literal, n5)]


_register(Entry(
    "T4.9-intervals",
    "literal: (-1)^#N_p(5) = product over (p/10,p/5) u (3p/10,4p/5)",
    AUDIT,
    _t49_intervals,
    lambda p, params: p != 5,
))


def _t412_intervals(p, params):
    n6 = _nr_parity_sign(6, p)
    lit = _literal_interval_product
    checks = [Check({"part": "i", "interval": "(p/4,3/p)"},
                    lit(Fraction(p, 4), Fraction(3, p), p) * (1 if p % 4 == 1 else _chi(3, p)), n6)]
    k, r = divmod(p, 24)
    if r == 1:
        checks.append(Check({"part": "ii", "interval": "(0,12/p)"}, lit(Fraction(0), Fraction(12, p), p), n6))
    elif r in (7, 11):
        sign = _sign(k) if r == 7 else _sign(k + 1)
        checks.append(Check({"part": "ii", "interval": "(0,2/p)"}, sign * lit(Fraction(0), Fraction(2, p), p), n6))
    return checks


_register(Entry(
    "T4.12-intervals",
    "literal: the intervals (p/4,3/p), (0,12/p), (0,2/p) read as written",
    AUDIT,
    _t412_intervals,
))
_register(Entry(
    "L4.11-printed",
    "literal: for p = 11 mod 24, S_2^4 = S4+S5+S6 = 0 (twelfth-interval sums)",
    AUDIT,
    lambda p, params: _l411(p, params, printed=True),
    lambda p, params: p > 12 and p % 24 == 11,
))


# -- sweep engine -----------------------------------------------------------


def list_theorems() -> list[tuple[str, str, str]]:
    """(id, kind, description) for every catalog entry, in catalog order."""
    return [(e.id, e.kind, e.description) for e in CATALOG.values()]


def get_entry(theorem: str) -> Entry:
    try:
        return CATALOG[theorem]
    except KeyError:
        raise UnknownTheorem(f"unknown theorem id {theorem!r}; run `legprod list` for the catalog") from None


def prime_range(lo: int, hi: int) -> list[int]:
    if lo <= 3 or lo > hi:
        raise EmptyRange(f"prime range must satisfy 3 < lo <= hi, got {lo}..{hi}")
    primes = primes_between(lo, hi)
    if not primes:
        raise EmptyRange(f"no primes in {lo}..{hi}")
    return primes


def _evaluate_chunk(theorem: str, primes: Sequence[int], given: Mapping[str, Any]):
    entry = CATALOG[theorem]
    params = entry.resolve(given)
    out = []
    for p in primes:
        out.append((p, entry.evaluate(p, params) if entry.applies(p, params) else None))
    return out


def _merge(report: VerificationReport, results) -> VerificationReport:
    classes: dict = {}
    for p, checks in sorted(results, key=lambda r: r[0]):
        if checks is None:
            report.skipped += 1
            continue
        report.checked += 1
        for c in checks:
            report.cases += 1
            if c.key is None:
                if c.claimed != c.computed:
                    report.failures.append(Failure(p, dict(c.params), c.claimed, c.computed))
                continue
            ident = (json.dumps(c.params, sort_keys=True), tuple(c.key))
            first_p, first_v = classes.setdefault(ident, (p, c.computed))
            if first_v != c.computed:
                params = dict(c.params, **{"class": list(c.key), "first_prime": first_p})
                report.failures.append(Failure(p, params, first_v, c.computed))
    return report


def _chunks(primes: Sequence[int], jobs: int) -> list[list[int]]:
    # interleave so every chunk gets a similar mix of small and large primes
    n = max(1, min(len(primes), 4 * jobs))
    return [list(primes[i::n]) for i in range(n)]


def default_jobs() -> int:
    env = os.environ.get("LEGPROD_JOBS")
    if env:
        jobs = int(env)
        if jobs < 1:
            raise BadParameter(f"LEGPROD_JOBS must be >= 1, got {jobs}")
        return jobs
    return os.cpu_count() or 1


def _public_params(entry: Entry, given: Mapping[str, Any]) -> dict:
    return {k: (v if isinstance(v, (int, str)) else str(v)) for k, v in sorted(dict(given).items())}


def verify_many(
    theorems: Sequence[str],
    prime_lo: int,
    prime_hi: int,
    params: Optional[Mapping[str, Any]] = None,
    jobs: int = 1,
    timing: bool = False,
) -> list[VerificationReport]:
    """Run several entries over the same prime range with one worker pool.

    ``params`` is applied to every entry that declares the parameter; an entry
    that declares none of them simply ignores the mapping when several entries
    are run, but a single entry rejects unknown names.
    """
    if jobs < 1:
        raise BadParameter(f"jobs must be >= 1, got {jobs}")
    entries = [get_entry(t) for t in theorems]
    primes = prime_range(prime_lo, prime_hi)
    params = dict(params or {})
    per_entry = []
    for e in entries:
        given = params if len(entries) == 1 else {k: v for k, v in params.items() if k in e.params}
        e.resolve(given)  # fail fast on bad parameters
        per_entry.append(given)

    reports = []
    if jobs == 1:
        for e, given in zip(entries, per_entry):
            start = time.perf_counter()
            results = _evaluate_chunk(e.id, primes, given)
            rep = _merge(VerificationReport(e.id, e.kind, prime_lo, prime_hi, params=_public_params(e, given)), results)
            if timing:
                rep.elapsed = time.perf_counter() - start
            reports.append(rep)
        return reports

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending = []
        for e, given in zip(entries, per_entry):
            start = time.perf_counter()
            futures = [pool.submit(_evaluate_chunk, e.id, chunk, given) for chunk in _chunks(primes, jobs)]
            pending.append((e, given, futures, start))
        for e, given, futures, start in pending:
            results = [r for fut in futures for r in fut.result()]
            rep = _merge(VerificationReport(e.id, e.kind, prime_lo, prime_hi, params=_public_params(e, given)), results)
            if timing:
                rep.elapsed = time.perf_counter() - start
            reports.append(rep)
    return reports


def verify(
    theorem: str,
    prime_lo: int,
    prime_hi: int,
    params: Optional[Mapping[str, Any]] = None,
    jobs: int = 1,
    timing: bool = False,
) -> VerificationReport:
    """Check one catalog entry for every prime in [prime_lo, prime_hi]."""
    return verify_many([theorem], prime_lo, prime_hi, params, jobs, timing)[0]


def _audit_chunk(f: QuadraticForm, region: str, modulus: int, primes: Sequence[int]):
    out = []
    for p in primes:
        try:
            k = shift_param_k(f, p) if region == "triangle" else shift_param_kprime(f, p)
        except BadFormModulus:
            out.append((p, None))
            continue
        value = region_product(f, region, p).value
        out.append((p, [Check({}, None, value, (p % modulus, cubic_sum(k, p) % 16))]))
    return out


def equivalence_audit(
    f: QuadraticForm,
    region: str,
    modulus: Optional[int] = None,
    prime_hi: int = 3000,
    prime_lo: int = 5,
    jobs: int = 1,
    timing: bool = False,
) -> VerificationReport:
    """Group primes by (p mod modulus, F_p(0,1,k) mod 16) and flag classes with two product values.

    k is the triangle shift -disc/(4c sigma) or the square shift b^2/(4ac);
    primes dividing c sigma (resp. ac) are skipped.  ``modulus`` defaults to
    :func:`default_modulus`.
    """
    if region not in ("triangle", "square"):
        raise ValueError(f"unknown region {region!r}; expected triangle or square")
    if modulus is None:
        modulus = default_modulus(f, region)
    if modulus < 2:
        raise BadModulus(f"modulus must be >= 2, got {modulus}")
    primes = prime_range(prime_lo, prime_hi)
    start = time.perf_counter()
    if jobs == 1:
        results = _audit_chunk(f, region, modulus, primes)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_audit_chunk, f, region, modulus, c) for c in _chunks(primes, jobs)]
            results = [r for fut in futures for r in fut.result()]
    report = VerificationReport(
        f"equivalence:{region}:{f}", ASSERTED, prime_lo, prime_hi, params={"modulus": modulus}
    )
    _merge(report, results)
    if timing:
        report.elapsed = time.perf_counter() - start
    return report


def mixed_classes(report: VerificationReport) -> int:
    """Number of distinct classes that received a conflicting value."""
    return len({json.dumps(f.params.get("class")) + json.dumps(
        {k: v for k, v in f.params.items() if k not in ("class", "first_prime")}, sort_keys=True)
        for f in report.failures if "class" in f.params})
