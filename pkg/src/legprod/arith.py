"""Scalar modular arithmetic over an odd prime modulus.

Python integers are unbounded, so products never overflow; the supported
prime range is nevertheless documented as ``p < 2**62`` to match the
deterministic Miller-Rabin witness set below.
"""

from __future__ import annotations

from math import isqrt

from .errors import DenominatorDivisible, NotAnOddPrime, NumeratorDivisible, WrongResidueClass

SUPPORTED_LIMIT = 1 << 62

# Deterministic for n < 3.3e24 (Sorenson & Webster), which covers 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic primality test (trial division, then Miller-Rabin)."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class OddPrime(int):
    """An int known to be a prime greater than 3."""

    def __new__(cls, value: int):
        value = int(value)
        if value <= 3 or not is_prime(value):
            raise NotAnOddPrime(f"{value} is not a prime greater than 3")
        if value >= SUPPORTED_LIMIT:
            raise NotAnOddPrime(f"{value} is outside the supported range p < 2**62")
        return super().__new__(cls, value)


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi, by a bytearray sieve."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, isqrt(hi) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytes(len(range(q * q, hi + 1, q)))
    return [n for n in range(max(lo, 2), hi + 1) if sieve[n]]


def _jacobi(a: int, n: int) -> int:
    # binary reciprocity algorithm; n odd and positive
    a %= n
    result = 1
    while a:
        while not a & 1:
            a >>= 1
            if n & 7 in (3, 5):
                result = -result
        a, n = n, a
        if a & 3 == 3 and n & 3 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} for an odd prime p."""
    return _jacobi(a, p)


def euler_criterion(a: int, p: int) -> int:
    """(a/p) via a^((p-1)/2) mod p. Slower; kept as an independent check."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def least_residue(x: int, p: int) -> int:
    return x % p


def least_abs_residue(x: int, p: int) -> int:
    """The representative of x mod p lying in (-p/2, p/2)."""
    r = x % p
    return r - p if 2 * r > p else r


def inverse(u: int, p: int) -> int:
    if u % p == 0:
        raise DenominatorDivisible(f"{u} is not invertible modulo {p}")
    return pow(u, -1, p)


def rational_residue(v: int, u: int, p: int) -> int:
    """The least positive w with w*u = v (mod p), written v/u.

    Raises DenominatorDivisible when p | u and NumeratorDivisible when
    p | v (the answer would be p itself, never a usable symbol argument).
    """
    if u % p == 0:
        raise DenominatorDivisible(f"p={p} divides the denominator {u}")
    if v % p == 0:
        raise NumeratorDivisible(f"p={p} divides the numerator {v}")
    return v * pow(u, -1, p) % p


def mod_pow(b: int, e: int, p: int) -> int:
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(b, e, p)


def is_biquadratic_residue(a: int, p: int) -> bool:
    """Whether x^4 = a (mod p) is solvable, for p = 1 (mod 4) and p not dividing a."""
    if p % 4 != 1:
        raise WrongResidueClass(f"biquadratic criterion needs p = 1 (mod 4), got p={p}")
    if a % p == 0:
        raise ValueError(f"p={p} divides {a}")
    return pow(a, (p - 1) // 4, p) == 1


def primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group mod p."""
    m = p - 1
    factors = []
    q = 2
    while q * q <= m:
        if m % q == 0:
            factors.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    return 1  # p == 2


def smallest_nonresidue(p: int) -> int:
    n = 2
    while legendre(n, p) != -1:
        n += 1
    return n
