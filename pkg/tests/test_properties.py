from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from legprod import (
    QuadraticForm,
    char_sum,
    euler_criterion,
    gauss_set,
    interval_sum,
    least_abs_residue,
    legendre,
    legendre_product_interval,
    primes_between,
    product_square,
    product_triangle,
    rational_residue,
)
from legprod.regions import region_product

PRIMES = primes_between(5, 500)
primes = st.sampled_from(PRIMES)
coeff = st.integers(-20, 20)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), primes)
def test_legendre_multiplicative_and_euler(a, b, p):
    assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)
    assert legendre(a, p) == euler_criterion(a, p)
    assert legendre(a + p, p) == legendre(a, p)


@given(st.integers(-10**6, 10**6), primes)
def test_least_abs_residue_range(x, p):
    r = least_abs_residue(x, p)
    assert -p < 2 * r < p and (r - x) % p == 0


@given(st.integers(-1000, 1000), st.integers(-1000, 1000), primes)
def test_rational_residue_solves(v, u, p):
    if u % p and v % p:
        w = rational_residue(v, u, p)
        assert 1 <= w < p and (w * u - v) % p == 0


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=3), st.integers(-100, 100), primes)
def test_char_sum_shift_invariance(shifts, t, p):
    if len({a % p for a in shifts}) == len(shifts):
        assert char_sum([a + t for a in shifts], p) == char_sum(shifts, p)


@settings(max_examples=60)
@given(st.data())
def test_gauss_lemma_and_partition(data):
    p = data.draw(st.sampled_from(primes_between(5, 5000)))
    s = data.draw(st.integers(2, p - 2))
    e = gauss_set(s, p)
    assert (-1) ** len(e) == legendre(s, p)
    assert e.isdisjoint(gauss_set(-s, p))
    assert e | gauss_set(-s, p) == frozenset(range(1, (p - 1) // 2 + 1))


@settings(max_examples=60)
@given(st.integers(2, 12), st.sampled_from(primes_between(13, 5000)))
def test_gauss_set_interval_description(s, p):
    expected = set()
    for k in range(1, s // 2 + 1):
        lo, hi = Fraction(2 * k - 1, 2 * s) * p, Fraction(2 * k, 2 * s) * p
        expected |= {a for a in range(1, (p - 1) // 2 + 1) if lo < a < hi}
    assert gauss_set(s, p) == expected


@settings(max_examples=80)
@given(coeff, coeff, coeff, st.sampled_from(primes_between(5, 130)), st.sampled_from(["triangle", "square"]))
def test_grouped_equals_naive(a, b, c, p, region):
    if (a, b, c) != (0, 0, 0):
        f = QuadraticForm(a, b, c)
        r = region_product(f, region, p)
        assert r == region_product(f, region, p, "naive")
        assert r.value in (-1, 1)


@given(coeff, coeff, coeff, coeff, primes)
def test_factored_matches_expanded(m, n, u, v, p):
    if (m * u, m * v + n * u, n * v) != (0, 0, 0):
        f = QuadraticForm.from_factors(m, n, u, v)
        g = QuadraticForm(m * u, m * v + n * u, n * v)
        assert product_triangle(f, p) == product_triangle(g, p)
        assert product_square(f, p) == product_square(g, p)


@given(coeff, coeff, coeff, st.integers(1, 30), primes)
def test_square_product_scaling(a, b, c, lam, p):
    # scaling f by lam multiplies the square product by (lam/p)^(#terms)
    if (a, b, c) == (0, 0, 0) or lam % p == 0:
        return
    f, g = QuadraticForm(a, b, c), QuadraticForm(lam * a, lam * b, lam * c)
    rf, rg = product_square(f, p), product_square(g, p)
    terms = ((p - 1) // 2) ** 2 - rf.terms_skipped
    assert rg.value == rf.value * legendre(lam, p) ** terms


@given(st.integers(1, 12), primes)
def test_interval_sums_total_zero(n, p):
    if n < p:
        assert sum(interval_sum(r, n, p) for r in range(1, n + 1)) == 0


@given(st.fractions(0, 1), st.fractions(0, 1), st.fractions(0, 1), primes)
def test_interval_product_splits(x, y, z, p):
    a, b, c = sorted((x, y, z))
    if a < b < c:
        whole = legendre_product_interval(a, c, p)
        parts = legendre_product_interval(a, b, p) * legendre_product_interval(b, c, p)
        mid = b * p
        extra = legendre(int(mid), p) if mid.denominator == 1 and 0 < mid < p else 1
        assert whole == parts * extra
