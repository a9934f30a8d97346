"""
Unit tests for the party monoid and the tied symmetric monoid.
"""

import itertools
import random

import pytest

from combinatorics import Permutation, SetPartition, bell, partition_count, party_monoid_order, tied_monoid_order
from diagrams import closure, concat, family_generators, generator
from errors import BoundExceededError, IndexRangeError, NonUniformDiagramError, ParseError
from party import (
    PARTY,
    TIED,
    PartyElement,
    TiedSymElement,
    enumerate_party,
    enumerate_tied,
    from_diagram,
    green_classes,
    group_closed,
    is_coprime,
    maximal_subgroup,
    party_closure,
    party_inverse,
    party_multiply,
    party_normalize,
    party_subgroup_order,
    ramified_check,
    shape,
    subgroup_orders,
    tied_multiply,
    tied_subgroup_order,
    tied_to_party,
    to_diagram,
    to_ramified,
)


def _element(partition: str, perm: str) -> PartyElement:
    p = Permutation.parse(perm)
    return party_normalize(SetPartition.parse(partition, p.n), p)


class TestNormalize:
    """Coprime representatives."""

    def test_strips_inversion_inside_block(self):
        element = _element('1 2|3', '2 1 3')
        assert element == PartyElement(SetPartition.parse('1 2|3'), Permutation.identity(3))

    def test_keeps_inversion_across_blocks(self):
        perm = Permutation.parse('2 1 3')
        assert is_coprime(SetPartition.parse('1 3|2'), perm)
        assert _element('1 3|2', '2 1 3').perm == perm

    def test_choice_of_inversion_does_not_matter(self):
        partition = SetPartition.full(3)
        perm = Permutation.parse('3 2 1')
        expected = party_normalize(partition, perm)
        for seed in range(5):
            assert party_normalize(partition, perm, rng=random.Random(seed)) == expected
        assert expected.perm == Permutation.identity(3)

    def test_parse(self):
        assert PartyElement.parse('[1 2|3][2 1 3]') == _element('1 2|3', '1 2 3')
        assert str(PartyElement.parse('[1 3|2][2 1 3]')) == '[1 3|2][2 1 3]'

    def test_parse_rejects(self):
        with pytest.raises(ParseError):
            PartyElement.parse('1 2|3 2 1 3')


class TestPartyMultiply:
    """Products of coprime pairs."""

    def test_tie_absorbs_transposition(self):
        f1 = _element('1 2|3', '1 2 3')
        s1 = _element('1|2|3', '2 1 3')
        assert party_multiply(f1, s1) == f1
        assert party_multiply(s1, f1) == f1

    def test_adjacent_ties_merge(self):
        f1 = _element('1 2|3', '1 2 3')
        f2 = _element('1|2 3', '1 2 3')
        assert party_multiply(f1, f2) == _element('1 2 3', '1 2 3')

    def test_conjugated_tie(self):
        s1 = _element('1|2|3', '2 1 3')
        f2 = _element('1|2 3', '1 2 3')
        product = party_multiply(party_multiply(s1, f2), s1)
        assert product == _element('1 3|2', '1 2 3')

    def test_inverse(self):
        for g in enumerate_party(3):
            g_star = party_inverse(g)
            assert party_multiply(party_multiply(g, g_star), g) == g
            assert party_multiply(party_multiply(g_star, g), g_star) == g_star


class TestEnumeration:
    """Exhaustive and generated elements agree with the counting formula."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_party_order(self, n):
        assert len(enumerate_party(n)) == party_monoid_order(n)

    def test_closure_matches_enumeration(self):
        assert set(party_closure(3)) == set(enumerate_party(3))

    def test_tied_order(self):
        assert len(enumerate_tied(3)) == tied_monoid_order(3) == 30

    def test_tied_quotient_is_onto(self):
        assert {tied_to_party(e) for e in enumerate_tied(3)} == set(enumerate_party(3))

    def test_tied_quotient_is_multiplicative(self):
        elements = enumerate_tied(3)
        failures = [
            (g, h) for g, h in itertools.product(elements, repeat=2)
            if tied_to_party(tied_multiply(g, h)) != party_multiply(tied_to_party(g), tied_to_party(h))
        ]
        assert len(elements) ** 2 == 900
        assert failures == []

    def test_shape(self):
        assert shape(_element('1 3|2', '1 2 3')).parts == (2, 1)


class TestDiagrams:
    """Party elements as uniform diagrams."""

    def test_round_trip(self):
        for g in enumerate_party(3):
            assert from_diagram(to_diagram(g)) == g

    def test_diagram_map_is_multiplicative(self):
        elements = enumerate_party(3)
        failures = [
            (g, h) for g, h in itertools.product(elements, repeat=2)
            if concat(to_diagram(g), to_diagram(h)).diagram != to_diagram(party_multiply(g, h))
        ]
        assert len(elements) ** 2 == 256
        assert failures == []

    def test_diagram_closure_matches(self):
        diagrams = closure(family_generators('party', 3))
        assert {from_diagram(d) for d in diagrams} == set(enumerate_party(3))

    def test_non_uniform(self):
        with pytest.raises(NonUniformDiagramError):
            from_diagram(generator('t_i', (1,), 2))


class TestGreen:
    """Green's relations by strongly connected components."""

    @pytest.mark.parametrize("monoid", [PARTY, TIED])
    def test_j_classes_indexed_by_shape(self, monoid):
        assert len(green_classes(monoid, 3, 'J')) == partition_count(3)

    @pytest.mark.parametrize("relation", ['L', 'R'])
    def test_party_one_sided_classes(self, relation):
        classes = green_classes(PARTY, 3, relation)
        assert len(classes) == bell(3)
        assert sum(len(c) for c in classes) == party_monoid_order(3)

    def test_j_classes_are_unions_of_shapes(self):
        for members in green_classes(PARTY, 3, 'J'):
            assert len({shape(g) for g in members}) == 1

    def test_classes_follow_enumeration_order(self):
        # the stream starts with the one-block partition, alone in its class
        first = green_classes(PARTY, 3, 'J')[0]
        assert first == [PartyElement(SetPartition.full(3), Permutation.identity(3))]

    def test_unknown_relation(self):
        with pytest.raises(IndexRangeError):
            green_classes(PARTY, 3, 'H')

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            green_classes(TIED, 5, 'J')


class TestMaximalSubgroups:
    """Brute-force maximal subgroups against the product formulas."""

    @pytest.mark.parametrize("monoid", [PARTY, TIED])
    def test_formula(self, monoid):
        for idempotent, observed, expected in subgroup_orders(monoid, 4):
            assert observed == expected, str(idempotent)

    def test_full_block(self):
        full = SetPartition.full(3)
        assert len(maximal_subgroup(PARTY, full)) == party_subgroup_order((3,)) == 1
        assert len(maximal_subgroup(TIED, full)) == tied_subgroup_order((3,)) == 6

    def test_closed_under_product(self):
        e = SetPartition.parse('1 2|3 4')
        assert group_closed(maximal_subgroup(PARTY, e), party_multiply)
        assert group_closed(maximal_subgroup(TIED, e), tied_multiply)


class TestRamified:
    """Tied elements as pairs of diagrams."""

    def test_identity(self):
        pair = to_ramified(TiedSymElement.identity(2))
        assert pair.fine == pair.coarse

    def test_check(self):
        report = ramified_check(3)
        assert report.passed
        assert report.metadata['elements'] == 30
