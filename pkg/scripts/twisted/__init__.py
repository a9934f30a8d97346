"""
Twisted monoid algebras over the party and partition monoids: the party
algebra, the set-partition algebra, the partition algebra and the
Temperley-Lieb algebra.
"""

from .algebra import (
    ALPHA,
    ARCS,
    BETA,
    DIAGRAM_CARRIER,
    KINDS,
    PARTY_CARRIER,
    TwistedElement,
    Twisting,
    boundary_partitions,
    identity_element,
    twisted_multiply,
)
from .presentation import (
    RELATION_SETS,
    SET_TWISTING,
    Relation,
    carrier_elements,
    cocycle_check,
    index_bindings,
    evaluate_word,
    generator_element,
    verify_presentation,
)

__all__ = [
    'ALPHA',
    'ARCS',
    'BETA',
    'DIAGRAM_CARRIER',
    'KINDS',
    'PARTY_CARRIER',
    'TwistedElement',
    'Twisting',
    'boundary_partitions',
    'identity_element',
    'twisted_multiply',
    'RELATION_SETS',
    'SET_TWISTING',
    'Relation',
    'carrier_elements',
    'cocycle_check',
    'index_bindings',
    'evaluate_word',
    'generator_element',
    'verify_presentation',
]
