"""
Ideals, quotients and semisimplicity of P_n(p, q) at specialized points.
"""

from .ideals import (
    FF,
    I_IDEAL,
    IDEALS,
    J_IDEAL,
    BasisCoordinates,
    QuotientReport,
    expected_quotient,
    ideal_at,
    ideal_closure,
    ideal_seeds,
    quotient_dimension,
    verify_quotient_consequences,
)
from .semisimple import (
    SemisimplicityCertificate,
    generic_semisimplicity,
    gram_determinant,
    gram_rank,
    regular_traces,
    semisimplicity_certificate,
)
from .subspace import Subspace, rank

__all__ = [
    'FF',
    'I_IDEAL',
    'IDEALS',
    'J_IDEAL',
    'BasisCoordinates',
    'QuotientReport',
    'expected_quotient',
    'ideal_at',
    'ideal_closure',
    'ideal_seeds',
    'quotient_dimension',
    'verify_quotient_consequences',
    'SemisimplicityCertificate',
    'generic_semisimplicity',
    'gram_determinant',
    'gram_rank',
    'regular_traces',
    'semisimplicity_certificate',
    'Subspace',
    'rank',
]
