"""Class numbers of imaginary quadratic orders by reduced-form enumeration."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt

from .errors import BadDiscriminant, WrongResidueClass
from .tables import tables


def check_discriminant(D: int) -> int:
    if D >= 0 or D % 4 not in (0, 1):
        raise BadDiscriminant(f"{D} is not a negative discriminant (D < 0, D = 0 or 1 mod 4)")
    return D


def reduced_forms(D: int) -> list[tuple[int, int, int]]:
    """Reduced primitive forms (A, B, C) of discriminant D.

    Reduced means |B| <= A <= C with B >= 0 whenever |B| = A or A = C; such
    forms satisfy A <= sqrt(|D|/3).
    """
    check_discriminant(D)
    forms = []
    n = -D
    for A in range(1, isqrt(n // 3) + 1):
        # B has the parity of D
        for B in range(-A + 1 if (A + 1 + D) % 2 == 0 else -A + 2, A + 1, 2):
            num = B * B - D
            if num % (4 * A):
                continue
            C = num // (4 * A)
            if C < A or (C == A and B < 0):
                continue
            if gcd(gcd(A, B), C) != 1:
                continue
            forms.append((A, B, C))
    return forms


@lru_cache(maxsize=4096)
def class_number(D: int) -> int:
    """h(D), the number of reduced primitive positive-definite forms of discriminant D."""
    return len(reduced_forms(D))


def h_neg_p(p: int) -> int:
    """h(-p) for p = 3 (mod 4)."""
    if p % 4 != 3:
        raise WrongResidueClass(f"h(-p) needs p = 3 (mod 4), got p={p}")
    return class_number(-p)


def h_neg_4p(p: int) -> int:
    """h(-4p) for p = 1 (mod 4)."""
    if p % 4 != 1:
        raise WrongResidueClass(f"h(-4p) needs p = 1 (mod 4), got p={p}")
    return class_number(-4 * p)


def mordell_parity(p: int) -> int:
    """Parity of the number of nonresidues k with 0 < k < p/2, for p = 3 (mod 4)."""
    if p % 4 != 3:
        raise WrongResidueClass(f"Mordell parity needs p = 3 (mod 4), got p={p}")
    return tables(p).count_nonresidues(1, (p - 1) // 2) & 1
