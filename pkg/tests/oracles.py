"""Slow, obviously-correct reference implementations used as test oracles."""

from math import gcd


def squares_mod(p):
    return {x * x % p for x in range(1, p)}


def legendre_by_squares(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if a in squares_mod(p) else -1


def is_prime_trial(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def class_number_brute(D):
    """Count reduced primitive forms by scanning a generous box of (a, b)."""
    n = -D
    count = 0
    for a in range(1, n + 1):
        for b in range(-a, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or gcd(gcd(a, b), c) != 1:
                continue
            if (b < 0 and (-b == a or a == c)) or b == -a:
                continue
            count += 1
    return count


def char_sum_brute(shifts, p):
    total = 0
    for y in range(1, p + 1):
        prod = 1
        for a in shifts:
            prod *= y + a
        total += legendre_by_squares(prod, p)
    return total


def pairs(region, p):
    h = (p - 1) // 2
    for i in range(1, h + 1):
        for j in range(1, h + 1):
            if region == "square" or i < j:
                yield i, j


def symbol_product_brute(coeffs, region, p):
    a, b, c = coeffs
    value = 1
    for i, j in pairs(region, p):
        value *= legendre_by_squares(a * i * i + b * i * j + c * j * j, p) or 1
    return value


def value_product_brute(coeffs, region, p):
    a, b, c = coeffs
    acc = 1
    for i, j in pairs(region, p):
        v = (a * i * i + b * i * j + c * j * j) % p
        if v:
            acc = acc * v % p
    return acc
