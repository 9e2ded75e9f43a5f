import random

import pytest

from legprod import (
    LinearForm,
    QuadraticForm,
    count_double,
    count_upper_left,
    gauss_set,
    l_set_size,
    m_set_size,
    nonresidue_count_gauss,
    primes_between,
    product_linear_square,
    product_square,
    product_triangle,
    value_product_square,
    value_product_triangle,
)
from legprod.errors import SDivisible
from legprod.regions import product_linear_triangle, region_product
from legprod.tables import tables
from oracles import legendre_by_squares, symbol_product_brute, value_product_brute


def test_form_derived_fields():
    f = QuadraticForm(2, 5, 2)
    assert (f.disc, f.sigma, str(f)) == (9, 9, "2,5,2")
    assert QuadraticForm.from_factors(2, 1, 1, 2) == f
    assert f(1, 2) == 2 + 10 + 8


def test_form_rejects_zero():
    with pytest.raises(ValueError):
        QuadraticForm(0, 0, 0)


def test_linear_form_eps():
    with pytest.raises(ValueError):
        LinearForm(2, 0)


@pytest.mark.parametrize("j, p, expected", [(2, 7, 1), (6, 7, 0), (2, 5, 1)])
def test_m_set_size(j, p, expected):
    assert m_set_size(j, p) == expected


@pytest.mark.parametrize("j, p, expected", [(2, 7, 2), (2, 5, 1)])
def test_l_set_size(j, p, expected):
    assert l_set_size(j, p) == expected


def test_l_set_size_last_column():
    # exhaustive: i=1,2,3 give {6i}_7 = 6,5,4 and {5i}_7 = 5,3,1; only i=2,3 qualify
    assert l_set_size(6, 7) == 2
    assert l_set_size(6, 7) % 2 == (49 - 1) // 8 % 2


@pytest.mark.parametrize("j", [0, 1, 7, 8])
def test_column_range(j):
    with pytest.raises(ValueError):
        m_set_size(j, 7)


def test_count_double_and_upper_left():
    assert count_double(2, 7) == 0
    assert count_double(6, 7) == 2  # i=1: 2<6, i=2: 4<5, i=3: 6<4 fails
    # {2i}_5 for i=1,2 is 2,4; 2+1 < 2.5 fails, 4+2 fails
    assert count_upper_left(2, 5) == 0
    assert count_upper_left(4, 11) == sum(1 for i in range(1, 6) if 2 * (4 * i % 11 + i) < 11)


@pytest.mark.parametrize("p", primes_between(5, 120))
def test_fast_counts_match_definitions(p):
    t = tables(p)
    for j in range(2, p):
        assert t.triangle_counts[j] == m_set_size(j, p)
        assert t.l_set_sizes[j] == l_set_size(j, p)


def test_gauss_set_examples():
    assert gauss_set(2, 7) == {2, 3}
    assert gauss_set(3, 7) == {2}
    assert gauss_set(1, 101) == frozenset()
    assert nonresidue_count_gauss(2, 7) == 1
    assert nonresidue_count_gauss(2, 5) == 1
    assert nonresidue_count_gauss(1, 29) == 0


def test_gauss_set_rejects_multiple_of_p():
    with pytest.raises(SDivisible):
        gauss_set(14, 7)
    with pytest.raises(SDivisible):
        nonresidue_count_gauss(0, 7)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 101, 211])
def test_nonresidue_count_matches_gauss_set(p):
    for s in range(2, p - 1):
        assert nonresidue_count_gauss(s, p) == sum(1 for i in gauss_set(s, p) if legendre_by_squares(i, p) == -1)


def test_product_triangle_examples():
    assert product_triangle(QuadraticForm(1, 0, 1), 5) == (1, 1)
    assert product_triangle(QuadraticForm(1, 0, 1), 7) == (-1, 0)


def test_product_triangle_eisenstein_form_at_11():
    # closed form with t = 1: -1 iff p = 5,7 mod 8 and (-3/p) = -1; 11 = 3 mod 8
    r = product_triangle(QuadraticForm(1, -1, 1), 11)
    assert r.value == symbol_product_brute((1, -1, 1), "triangle", 11) == 1


def test_product_square_examples():
    assert product_square(QuadraticForm(2, 1, -1), 5).value == 1
    assert product_square(QuadraticForm(2, 1, -1), 5).terms_skipped == 1
    assert product_square(QuadraticForm(1, -1, -1), 13).value == -1
    assert product_square(QuadraticForm(0, 1, 0), 7).value == 1


@pytest.mark.parametrize("region", ["triangle", "square"])
@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 97, 101])
def test_grouped_matches_naive_and_brute(region, p):
    rng = random.Random(p)
    for _ in range(6):
        coeffs = tuple(rng.randint(-7, 7) for _ in range(3))
        if coeffs == (0, 0, 0):
            continue
        f = QuadraticForm(*coeffs)
        fast = region_product(f, region, p)
        assert fast == region_product(f, region, p, "naive")
        assert fast.value == symbol_product_brute(coeffs, region, p)


def test_region_product_unknown_region():
    with pytest.raises(ValueError):
        region_product(QuadraticForm(1, 0, 1), "disk", 7)


def test_factored_equals_expanded():
    for p in primes_between(5, 150):
        expanded = QuadraticForm(2, 5, 2)
        factored = QuadraticForm.from_factors(2, 1, 1, 2)
        assert product_triangle(expanded, p) == product_triangle(factored, p)
        assert product_square(expanded, p) == product_square(factored, p)


def test_perfect_square_form_is_trivial():
    for p in primes_between(5, 200):
        assert product_square(QuadraticForm(1, 2, 1), p).value == 1


@pytest.mark.parametrize("s, eps, p, expected", [(2, -1, 5, 1), (1, 1, 5, -1), (1, -1, 5, 1)])
def test_product_linear_square_examples(s, eps, p, expected):
    assert product_linear_square(LinearForm(s, eps), p).value == expected


@pytest.mark.parametrize("p", primes_between(5, 160))
def test_linear_prefix_matches_naive(p):
    for s in range(-5, 12):
        for eps in (1, -1):
            l = LinearForm(s, eps)
            assert product_linear_square(l, p) == product_linear_square(l, p, "naive")


def test_linear_triangle_by_enumeration():
    p = 13
    expected = 1
    for i in range(1, 7):
        for j in range(i + 1, 7):
            expected *= legendre_by_squares(3 * i - j, p) or 1
    assert product_linear_triangle(LinearForm(3, -1), p).value == expected


def test_value_product_examples():
    assert value_product_triangle(QuadraticForm(1, 0, 1), 5) == 1
    assert value_product_triangle(QuadraticForm(1, 0, 1), 13) == 12
    assert value_product_square(QuadraticForm(1, -1, -1), 11) == 1


@pytest.mark.parametrize("p", [5, 7, 11, 13, 29, 31, 61, 67, 101])
def test_value_products_match_brute(p):
    for coeffs in [(1, 0, 1), (1, -1, -1), (2, 5, 2), (3, -2, 5), (0, 1, 0)]:
        f = QuadraticForm(*coeffs)
        for region, fn in (("triangle", value_product_triangle), ("square", value_product_square)):
            want = value_product_brute(coeffs, region, p)
            assert fn(f, p) == want
            assert fn(f, p, "naive") == want
