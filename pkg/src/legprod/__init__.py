"""Legendre-symbol products over half-range lattice regions, the character
sums and class numbers they reduce to, and a sweep harness that checks each
closed-form evaluation prime by prime."""

from .arith import (
    OddPrime,
    euler_criterion,
    inverse,
    is_biquadratic_residue,
    is_prime,
    least_abs_residue,
    least_residue,
    legendre,
    mod_pow,
    primes_between,
    rational_residue,
)
from .charsums import (
    char_sum,
    cubic_sum,
    f_transform_check,
    interval_sum,
    legendre_product_interval,
    shift_param_k,
    shift_param_kprime,
)
from .classnum import class_number, h_neg_4p, h_neg_p, mordell_parity
from .regions import (
    LinearForm,
    QuadraticForm,
    RegionProductResult,
    count_double,
    count_upper_left,
    gauss_set,
    l_set_size,
    m_set_size,
    nonresidue_count_gauss,
    product_linear_square,
    product_square,
    product_triangle,
    value_product_square,
    value_product_triangle,
)
from .registry import (
    VerificationReport,
    default_modulus,
    equivalence_audit,
    list_theorems,
    mixed_classes,
    verify,
    verify_many,
)

__version__ = "0.1.0"
