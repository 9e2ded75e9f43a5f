"""Legendre-symbol and value products over half-range lattice regions.

Two regions are supported, both built from the half range H = {1, ..., (p-1)/2}:

* the triangle ``0 < i < j < p/2``
* the square ``H x H``

Terms with ``p | f(i, j)`` are always excluded, so symbol products are +-1.
Every product has a ``naive`` path (plain double loop, the oracle) and a
vectorized fast path.  For quadratic forms the fast path groups pairs by the
ratio ``x = j/i mod p``: since ``f(i, ix) = i^2 f(1, x)``, every pair in a
group contributes the same symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .arith import legendre
from .errors import SDivisible
from .tables import tables

REGIONS = ("triangle", "square")


@dataclass(frozen=True)
class QuadraticForm:
    """f(i, j) = a i^2 + b ij + c j^2, used exactly as given (never reduced)."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0 and self.c == 0:
            raise ValueError("the zero form is not allowed")

    @classmethod
    def from_factors(cls, m: int, n: int, u: int, v: int) -> "QuadraticForm":
        """The product (m i + n j)(u i + v j)."""
        return cls(m * u, m * v + n * u, n * v)

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def sigma(self) -> int:
        return self.a + self.b + self.c

    def __call__(self, i: int, j: int) -> int:
        return self.a * i * i + self.b * i * j + self.c * j * j

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c}"


@dataclass(frozen=True)
class LinearForm:
    """f(i, j) = s i + eps j with eps = +-1."""

    s: int
    eps: int = 1

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError(f"eps must be +1 or -1, got {self.eps}")

    def __call__(self, i: int, j: int) -> int:
        return self.s * i + self.eps * j

    def __str__(self) -> str:
        return f"{self.s},{self.eps}"


class RegionProductResult(NamedTuple):
    value: int
    terms_skipped: int


def _half(p: int) -> int:
    return (p - 1) // 2


def _pairs(region: str, p: int):
    h = _half(p)
    if region == "triangle":
        return ((i, j) for i in range(1, h + 1) for j in range(i + 1, h + 1))
    if region == "square":
        return ((i, j) for i in range(1, h + 1) for j in range(1, h + 1))
    raise ValueError(f"unknown region {region!r}; expected one of {REGIONS}")


def _check_j(j: int, p: int) -> None:
    if not 2 <= j <= p - 1:
        raise ValueError(f"j must lie in [2, p-1], got j={j} for p={p}")


# -- counting sets ---------------------------------------------------------


def m_set_size(j: int, p: int) -> int:
    """|M_p(j)| = #{i in H : i < {ij}_p < p/2}."""
    _check_j(j, p)
    return sum(1 for i in range(1, _half(p) + 1) if i < i * j % p and 2 * (i * j % p) < p)


def l_set_size(j: int, p: int) -> int:
    """|L_p(j)| = #{i in H : {i(j-1)}_p < p/2 < {ij}_p}."""
    _check_j(j, p)
    return sum(
        1 for i in range(1, _half(p) + 1) if 2 * (i * (j - 1) % p) < p < 2 * (i * j % p)
    )


def count_upper_left(j: int, p: int) -> int:
    """#{i in H : {ij}_p < {ij}_p + i < p/2}."""
    _check_j(j, p)
    return sum(1 for i in range(1, _half(p) + 1) if 2 * (i * j % p + i) < p)


def count_double(j: int, p: int) -> int:
    """#{i in H : 2i < {ij}_p}."""
    _check_j(j, p)
    return sum(1 for i in range(1, _half(p) + 1) if 2 * i < i * j % p)


def gauss_set(s: int, p: int) -> frozenset[int]:
    """E_p(s) = {0 < i < p/2 : {is}_p > p/2}, straight from the definition."""
    if s % p == 0:
        raise SDivisible(f"p={p} divides s={s}")
    return frozenset(i for i in range(1, _half(p) + 1) if 2 * (i * s % p) > p)


def nonresidue_count_gauss(s: int, p: int) -> int:
    """#N_p(s): how many elements of E_p(s) are quadratic nonresidues."""
    if s % p == 0:
        raise SDivisible(f"p={p} divides s={s}")
    t = tables(p)
    i = np.arange(1, t.half + 1)
    return int(np.count_nonzero(t.chi[i[t.gauss_mask(s)]] == -1))


# -- symbol products of quadratic forms -----------------------------------


def _form_values_at_ratios(f: QuadraticForm, p: int) -> np.ndarray:
    x = np.arange(p, dtype=np.int64)
    return (f.a % p + (f.b % p) * x % p + (f.c % p) * (x * x % p) % p) % p


def _grouped_symbol_product(f: QuadraticForm, p: int, counts: np.ndarray) -> RegionProductResult:
    fx = _form_values_at_ratios(f, p)
    chi = tables(p).chi[fx]
    odd = int(counts[chi == -1].sum()) & 1
    return RegionProductResult(-1 if odd else 1, int(counts[fx == 0].sum()))


def _naive_symbol_product(f, region: str, p: int) -> RegionProductResult:
    value, skipped = 1, 0
    for i, j in _pairs(region, p):
        s = legendre(f(i, j), p)
        if s == 0:
            skipped += 1
        else:
            value *= s
    return RegionProductResult(value, skipped)


def product_triangle(f: QuadraticForm, p: int, method: str = "grouped") -> RegionProductResult:
    """Product of (f(i,j)/p) over 0 < i < j < p/2, skipping p | f(i,j)."""
    if method == "naive":
        return _naive_symbol_product(f, "triangle", p)
    return _grouped_symbol_product(f, p, tables(p).triangle_counts)


def product_square(f: QuadraticForm, p: int, method: str = "grouped") -> RegionProductResult:
    """Product of (f(i,j)/p) over i, j in [1, (p-1)/2], skipping p | f(i,j)."""
    if method == "naive":
        return _naive_symbol_product(f, "square", p)
    return _grouped_symbol_product(f, p, tables(p).square_counts)


def region_product(f: QuadraticForm, region: str, p: int, method: str = "grouped"):
    if region == "triangle":
        return product_triangle(f, p, method)
    if region == "square":
        return product_square(f, p, method)
    raise ValueError(f"unknown region {region!r}; expected one of {REGIONS}")


# -- symbol products of linear forms --------------------------------------


def product_linear_square(l: LinearForm, p: int, method: str = "prefix") -> RegionProductResult:
    """Product of ((s i + eps j)/p) over the square, skipping p | s i + eps j.

    The fast path notes that for fixed i the values s i + eps j, j in H, sweep
    a run of (p-1)/2 consecutive residues, so nonresidues are counted from a
    prefix table in O(1) per row.
    """
    if method == "naive":
        return _naive_symbol_product(l, "square", p)
    t = tables(p)
    h = t.half
    i = np.arange(1, h + 1, dtype=np.int64)
    if l.eps == 1:
        start = (l.s % p) * i % p + 1
    else:
        start = (l.s % p) * i % p - h
    start %= p
    nr = t.nr_prefix[start + h] - t.nr_prefix[start]
    # 0 lies in the run iff the run wraps past p-1 or starts at 0
    zeros = int(np.count_nonzero((start == 0) | (start + h > p)))
    return RegionProductResult(-1 if int(nr.sum()) & 1 else 1, zeros)


def product_linear_triangle(l: LinearForm, p: int) -> RegionProductResult:
    return _naive_symbol_product(l, "triangle", p)


# -- value products (mod p) ------------------------------------------------


def _naive_value_product(f: QuadraticForm, region: str, p: int) -> int:
    acc = 1
    for i, j in _pairs(region, p):
        v = f(i, j) % p
        if v:
            acc = acc * v % p
    return acc


def _log_value_product(f: QuadraticForm, region: str, p: int) -> int:
    # multiply by adding discrete logarithms
    t = tables(p)
    g, logs, _ = t.discrete_log
    h = t.half
    total = 0
    j = np.arange(1, h + 1, dtype=np.int64)
    rows = max(1, (1 << 21) // max(h, 1))
    for i0 in range(1, h + 1, rows):
        i = np.arange(i0, min(h, i0 + rows - 1) + 1, dtype=np.int64)[:, None]
        jj = np.broadcast_to(j[None, :], (i.shape[0], h))
        v = (f.a % p) * (i * i % p) % p + (f.b % p) * (i * jj % p) % p + (f.c % p) * (jj * jj % p) % p
        v %= p
        keep = v != 0
        if region == "triangle":
            keep &= jj > i
        elif region != "square":
            raise ValueError(f"unknown region {region!r}")
        total += int(logs[v[keep]].sum() % (p - 1))
    return pow(g, total % (p - 1), p)


def value_product_triangle(f: QuadraticForm, p: int, method: str = "log") -> int:
    """Product of the values f(i,j) mod p over the triangle, skipping multiples of p."""
    if method == "naive":
        return _naive_value_product(f, "triangle", p)
    return _log_value_product(f, "triangle", p)


def value_product_square(f: QuadraticForm, p: int, method: str = "log") -> int:
    """Product of the values f(i,j) mod p over the square, skipping multiples of p."""
    if method == "naive":
        return _naive_value_product(f, "square", p)
    return _log_value_product(f, "square", p)
