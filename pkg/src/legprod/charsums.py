"""Complete character sums of shifted products and partial interval sums."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .arith import inverse, legendre, smallest_nonresidue
from .errors import BadFormModulus, DegenerateShift, DuplicateShift
from .regions import QuadraticForm
from .tables import tables


def _symbol_sum(values: np.ndarray, p: int) -> int:
    return int(tables(p).chi[values].sum(dtype=np.int64))


def shifted_product_sum(shifts: Sequence[int], p: int) -> int:
    """sum_{y=1}^{p} ((y+a_1)...(y+a_r) / p) with no distinctness check."""
    y = np.arange(1, p + 1, dtype=np.int64) % p
    acc = np.ones(p, dtype=np.int64)
    for a in shifts:
        acc = acc * ((y + a % p) % p) % p
    return _symbol_sum(acc, p)


def char_sum(shifts: Sequence[int], p: int) -> int:
    """F_p(a_1, ..., a_r): the sum runs over y = 1..p inclusive.

    Raises DuplicateShift if two shifts are congruent mod p.
    """
    if not shifts:
        raise ValueError("at least one shift is required")
    reduced = [a % p for a in shifts]
    if len(set(reduced)) != len(reduced):
        raise DuplicateShift(f"shifts {list(shifts)} are not pairwise incongruent mod {p}")
    return shifted_product_sum(reduced, p)


def cubic_sum(k: int, p: int) -> int:
    """sum_{y=1}^{p-1} (y(y+1)(y+k)/p), defined for every k (equals F_p(0,1,k) when k != 0, 1)."""
    return shifted_product_sum((0, 1, k), p)


def shift_param_k(f: QuadraticForm, p: int) -> int:
    """k = -disc / (4 c sigma) mod p."""
    d = 4 * f.c * f.sigma
    if d % p == 0:
        raise BadFormModulus(f"p={p} divides c*sigma = {f.c * f.sigma}")
    return -f.disc * inverse(d, p) % p


def shift_param_kprime(f: QuadraticForm, p: int) -> int:
    """k' = b^2 / (4ac) mod p."""
    d = 4 * f.a * f.c
    if d % p == 0:
        raise BadFormModulus(f"p={p} divides a*c = {f.a * f.c}")
    return f.b * f.b * inverse(d, p) % p


def _cubic(m: int, p: int) -> int:
    m %= p
    if m in (0, 1):
        raise DegenerateShift(f"shift {m} collides with 0 or 1 modulo {p}")
    return shifted_product_sum((0, 1, m), p)


def transform_sides(m: int, p: int, n: Optional[int] = None) -> dict[str, tuple[int, int]]:
    """Left and right sides of the three F_p(0,1,m) transformation identities.

    Keys: ``"i-inverse"``  F(0,1,m) vs (m/p) F(0,1,1/m);
    ``"i-reflect"`` F(0,1,m) vs (-1/p) F(0,1,1-m);
    ``"ii"`` F(0,1,m^2) vs (m/p) F(0,1,(m+1)^2/4m);
    ``"iii"`` sum_{y=0}^{p-1} ((y^2+n)/p)((y^2+nm)/p) vs -1 + (n/p) F(0,1,m);
    ``"iii-minus-one"`` the same sum vs -1 + (-1/p) F(0,1,m), which only
    agrees when (n/p) = (-1/p).
    """
    m %= p
    if m in (0, 1, p - 1):
        raise DegenerateShift(f"m={m} makes a transformed shift collide with 0 or 1 modulo {p}")
    n = 1 if n is None else n
    if n % p == 0:
        raise ValueError(f"p={p} divides n={n}")
    f_m = _cubic(m, p)
    sign_m = legendre(m, p)
    minus_one = legendre(-1, p)
    sides = {
        "i-inverse": (f_m, sign_m * _cubic(inverse(m, p), p)),
        "i-reflect": (f_m, minus_one * _cubic(1 - m, p)),
        "ii": (_cubic(m * m, p), sign_m * _cubic((m + 1) ** 2 * inverse(4 * m, p), p)),
    }
    y = np.arange(p, dtype=np.int64)
    sq = y * y % p
    chi = tables(p).chi
    lhs = int((chi[(sq + n) % p].astype(np.int64) * chi[(sq + n * m) % p]).sum())
    sides["iii"] = (lhs, -1 + legendre(n, p) * f_m)
    sides["iii-minus-one"] = (lhs, -1 + minus_one * f_m)
    return sides


def f_transform_check(m: int, p: int, n: Optional[int] = None) -> tuple[bool, bool, bool]:
    """Equality flags for identities (i), (ii), (iii); see :func:`transform_sides`."""
    sides = transform_sides(m, p, n)
    eq = {k: a == b for k, (a, b) in sides.items()}
    return (eq["i-inverse"] and eq["i-reflect"], eq["ii"], eq["iii"])


def default_transform_ns(p: int) -> tuple[int, ...]:
    return (1, smallest_nonresidue(p))


def interval_bounds(lo: Fraction, hi: Fraction, p: int) -> tuple[int, int]:
    """First and last integer a with lo*p < a < hi*p."""
    lo, hi = Fraction(lo), Fraction(hi)
    first = (lo * p).__floor__() + 1
    last = (hi * p).__ceil__() - 1
    return first, last


def interval_sum(r: int, n: int, p: int) -> int:
    """S_r^n = sum of (a/p) over integers (r-1)p/n < a < rp/n."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    if n >= p:
        raise ValueError(f"need n < p, got n={n}, p={p}")
    first, last = interval_bounds(Fraction(r - 1, n), Fraction(r, n), p)
    if last < first:
        return 0
    t = tables(p)
    count = last - first + 1
    nr = t.count_nonresidues(first, count)
    return count - 2 * nr


def legendre_product_interval(lo, hi, p: int) -> int:
    """Product of (a/p) over integers a in (lo*p, hi*p), with 0 <= lo < hi <= 1."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not 0 <= lo < hi <= 1:
        raise ValueError(f"need 0 <= lo < hi <= 1, got ({lo}, {hi})")
    first, last = interval_bounds(lo, hi, p)
    if last < first:
        return 1
    nr = tables(p).count_nonresidues(first, last - first + 1)
    return -1 if nr & 1 else 1
