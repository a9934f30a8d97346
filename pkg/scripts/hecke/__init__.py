"""
The Party-Hecke algebra P_n(p, q): coprime-pair basis, generator actions,
products by rewriting, alternative generator systems and relation suites.
"""

from .checks import associativity_check, confluence_check, degeneration_check, functoriality_check
from .element import AlgebraElement, BasisKey, format_key, identity_key
from .engine import (
    HeckeEngine,
    basis_keys,
    coprime,
    coprime_reduce,
    gen_element,
    get_engine,
    mul_basis_by_F,
    mul_basis_by_G,
    multiply,
    random_reduced_word,
    word_to_element,
)
from .suites import RelationSuite, SuiteRelation, load_suites, suite_names, verify_relation_suite
from .words import GeneratorWord, Letter

__all__ = [
    'associativity_check',
    'confluence_check',
    'degeneration_check',
    'functoriality_check',
    'AlgebraElement',
    'BasisKey',
    'format_key',
    'identity_key',
    'HeckeEngine',
    'basis_keys',
    'coprime',
    'coprime_reduce',
    'gen_element',
    'get_engine',
    'mul_basis_by_F',
    'mul_basis_by_G',
    'multiply',
    'random_reduced_word',
    'word_to_element',
    'RelationSuite',
    'SuiteRelation',
    'load_suites',
    'suite_names',
    'verify_relation_suite',
    'GeneratorWord',
    'Letter',
]
