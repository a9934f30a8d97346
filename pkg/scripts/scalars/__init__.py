"""
Exact coefficient arithmetic for all algebras.

Scalars live in the fraction field of Z[a, q] with a the square root of p;
CoefficientRing lets engines run symbolically or at a specialization.
"""

from .field import (
    A,
    P,
    POLY_RING,
    Q,
    SCALAR_FIELD,
    Scalar,
    canonical,
    format_polynomial,
    format_scalar,
    parse_scalar,
    scalar,
    scalar_arith,
)
from .specialization import (
    PRIME,
    RATIONAL,
    Specialization,
    TwoPointResult,
    derive_seed,
    random_specialization,
    specialize,
    two_point,
    with_resampling,
)
from .rings import CoefficientRing

__all__ = [
    'A',
    'P',
    'POLY_RING',
    'Q',
    'SCALAR_FIELD',
    'Scalar',
    'canonical',
    'format_polynomial',
    'format_scalar',
    'parse_scalar',
    'scalar',
    'scalar_arith',
    'PRIME',
    'RATIONAL',
    'Specialization',
    'TwoPointResult',
    'derive_seed',
    'random_specialization',
    'specialize',
    'two_point',
    'with_resampling',
    'CoefficientRing',
]
