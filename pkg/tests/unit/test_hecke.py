"""
Unit tests for the Party-Hecke rewriting engine.
"""

import random

import pytest

from combinatorics import Permutation, SetPartition, party_monoid_order
from errors import BoundExceededError, DimensionMismatchError, IndexRangeError, ParseError
from hecke import (
    AlgebraElement,
    GeneratorWord,
    HeckeEngine,
    Letter,
    associativity_check,
    basis_keys,
    confluence_check,
    coprime,
    coprime_reduce,
    degeneration_check,
    format_key,
    functoriality_check,
    gen_element,
    get_engine,
    identity_key,
    mul_basis_by_F,
    mul_basis_by_G,
    multiply,
    random_reduced_word,
    suite_names,
    verify_relation_suite,
    word_to_element,
)
from scalars import CoefficientRing


def _word(text, n):
    return GeneratorWord.parse(text, n)


class TestBasis:
    """Coprime pairs index the basis."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_basis_size(self, n):
        assert len(basis_keys(n)) == party_monoid_order(n)

    def test_coprime(self):
        assert coprime(SetPartition.parse('1 3|2'), Permutation.parse('2 1 3'))
        assert not coprime(SetPartition.parse('1 2|3'), Permutation.parse('2 1 3'))

    def test_format_key(self):
        assert format_key(identity_key(3)) == '[1|2|3][1 2 3]'


class TestWords:
    """Generator word syntax."""

    def test_parse_forms(self):
        word = _word('G1 Ginv(2) F(1,3)', 3)
        assert word.letters == (Letter('G', (1,)), Letter('Ginv', (2,)), Letter('F', (1, 3)))
        assert str(word) == 'G(1) Ginv(2) F(1,3)'

    def test_empty_word(self):
        assert len(_word('1', 3)) == 0
        assert str(_word('', 3)) == '1'

    def test_binding(self):
        assert GeneratorWord.parse('G(i) F(j)', 4, {'i': 1, 'j': 3}).letters == (
            Letter('G', (1,)), Letter('F', (3,)))

    def test_unbound_variable(self):
        with pytest.raises(ParseError):
            _word('G(i)', 3)

    def test_unknown_letter(self):
        with pytest.raises(ParseError):
            _word('X1', 3)

    @pytest.mark.parametrize("text", ['G3', 'F(2,2)', 'H(1,2)', 'G(0)'])
    def test_index_range(self, text):
        with pytest.raises(IndexRangeError):
            _word(text, 3)


class TestRewriting:
    """Generator actions on coprime pairs."""

    def test_tie_strips_transposition(self, symbolic_ring):
        r = symbolic_ring
        reduced = coprime_reduce(SetPartition.full(2), Permutation.simple(1, 2), ring=r)
        assert reduced == AlgebraElement.basis((SetPartition.full(2), Permutation.identity(2)), r, r.p * r.q)

    def test_quadratic_relation(self, symbolic_ring):
        r = symbolic_ring
        square = word_to_element(_word('G1 G1', 2), r)
        assert square.to_dict() == {'[1|2][1 2]': 'a^2*q^2', '[1 2][1 2]': 'a^4 - a^2'}

    def test_ascent_appends(self, symbolic_ring):
        key = (SetPartition.identity(3), Permutation.simple(1, 3))
        result = mul_basis_by_G(key, 2, symbolic_ring)
        expected = (SetPartition.identity(3), Permutation.simple(1, 3) * Permutation.simple(2, 3))
        assert result.terms == {expected: symbolic_ring.one}

    def test_dual_tie(self, symbolic_ring):
        result = mul_basis_by_F(identity_key(3), (1, 3), symbolic_ring)
        assert result == AlgebraElement.basis((SetPartition.pair(1, 3, 3), Permutation.identity(3)), symbolic_ring)

    def test_tie_idempotent_up_to_q2(self, symbolic_ring):
        r = symbolic_ring
        f = gen_element(Letter('F', (1,)), 3, r)
        assert multiply(f, f) == f.scale(r.q * r.q)

    def test_inverse_generator(self, symbolic_ring):
        word = word_to_element(_word('G1 Ginv1', 2), symbolic_ring)
        assert word == AlgebraElement.one(2, symbolic_ring)

    def test_left_and_right_actions_agree(self, engine3):
        x = engine3.word_to_element(_word('F1 G2 G1', 3))
        g = engine3.gen_element(Letter('G', (2,)))
        f = engine3.gen_element(Letter('F', (1,)))
        assert engine3.apply_left(x, 'G', 2) == engine3.multiply(g, x)
        assert engine3.apply_left(x, 'F', 1) == engine3.multiply(f, x)
        assert engine3.apply_right(x, 'G', 2) == engine3.multiply(x, g)

    def test_bad_index(self, symbolic_ring):
        with pytest.raises(IndexRangeError):
            mul_basis_by_G(identity_key(3), 3, symbolic_ring)
        with pytest.raises(IndexRangeError):
            mul_basis_by_F(identity_key(3), (2, 2), symbolic_ring)


class TestEngine:
    """Engine sharing, bounds and element arithmetic."""

    def test_engines_are_shared(self):
        assert get_engine(3) is get_engine(3)
        assert get_engine(3) is not get_engine(3, CoefficientRing.polynomial())

    def test_positive_degree(self):
        with pytest.raises(IndexRangeError):
            HeckeEngine(0)

    def test_degree_mismatch(self, symbolic_ring):
        with pytest.raises(DimensionMismatchError):
            multiply(AlgebraElement.one(2, symbolic_ring), AlgebraElement.one(3, symbolic_ring))

    def test_structure_table_bound(self):
        with pytest.raises(BoundExceededError):
            HeckeEngine(5, CoefficientRing.polynomial()).structure_table()

    def test_structure_table_size(self):
        table = HeckeEngine(2, CoefficientRing.polynomial()).structure_table()
        assert len(table) == 9

    def test_element_arithmetic(self, symbolic_ring):
        one = AlgebraElement.one(2, symbolic_ring)
        assert (one - one).is_zero()
        assert str(one - one) == '0'
        assert -one + one == AlgebraElement.zero(2, symbolic_ring)

    def test_random_reduced_word(self):
        perm = Permutation.parse('4 3 1 2')
        word = random_reduced_word(perm, random.Random(2))
        assert len(word) == perm.length
        rebuilt = Permutation.identity(4)
        for k in word:
            rebuilt = rebuilt * Permutation.simple(k, 4)
        assert rebuilt == perm


class TestChecks:
    """Engine-wide property checks."""

    def test_associativity_exhaustive(self):
        report = associativity_check(2)
        assert report.passed
        assert report.results[-1].detail == '27 triples checked'

    def test_associativity_sampled(self):
        assert associativity_check(3, samples=100, seed=1).passed

    @pytest.mark.slow
    def test_associativity_exhaustive_n3(self):
        report = associativity_check(3)
        assert report.passed
        assert report.results[-1].detail == '4096 triples checked'

    def test_confluence(self):
        assert confluence_check(4, trials=25, seed=3).passed

    @pytest.mark.slow
    def test_confluence_n5(self):
        report = confluence_check(5, trials=300, seed=8)
        assert report.passed
        assert report.results[-1].detail == '300 trials'

    def test_degeneration(self):
        assert degeneration_check(3).passed

    def test_functoriality(self, prime_point):
        assert functoriality_check(3, samples=30, seed=5, spec=prime_point).passed


class TestSuites:
    """Relation suites."""

    def test_suite_names(self):
        assert {'defining', 'lemmas', 'dual', 'virtual'} <= set(suite_names())

    def test_defining_relations(self):
        report = verify_relation_suite('defining', 3)
        assert report.passed, [r.name for r in report.failures]

    def test_bt_image_quadratic_acts_on_ties(self):
        report = verify_relation_suite('bt-image', 3)
        assert report.passed, [r.name for r in report.failures]
        quadratic = [r for r in report.results if r.name.startswith('g_i^2e_i = (v-1)g_ie_i + u e_i')]
        assert len(quadratic) == 2
        assert all(r.passed for r in quadratic)

    def test_alternate_virtual_point_fails(self):
        report = verify_relation_suite('virtual', 3, alternate=True)
        assert not report.passed
        assert any(r.name.startswith('V_i^2 = 1') for r in report.failures)

    def test_unknown_suite(self):
        with pytest.raises(IndexRangeError):
            verify_relation_suite('nonexistent', 3)

    def test_degree_bounds(self):
        with pytest.raises(IndexRangeError):
            verify_relation_suite('defining', 1)
        with pytest.raises(BoundExceededError):
            verify_relation_suite('defining', 6)
