"""
The partition monoid: diagrams over {1..2n}, concatenation with
middle-component counting, generator families and submonoid closure.
"""

from .closure import closure, monoid_closure
from .diagram import ConcatResult, Diagram, concat, is_planar, is_uniform, top_bottom_partitions
from .generators import (
    FAMILIES,
    GENERATOR_KINDS,
    family_generators,
    generator,
    generator_family,
    party_diagram,
    permutation_diagram,
)
from .ramified import RamifiedPair, ramified_product
from .render import render, render_ramified

__all__ = [
    'closure',
    'monoid_closure',
    'ConcatResult',
    'Diagram',
    'concat',
    'is_planar',
    'is_uniform',
    'top_bottom_partitions',
    'FAMILIES',
    'GENERATOR_KINDS',
    'family_generators',
    'generator',
    'generator_family',
    'party_diagram',
    'permutation_diagram',
    'RamifiedPair',
    'ramified_product',
    'render',
    'render_ramified',
]
