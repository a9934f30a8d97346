"""
Unit tests for the tensor representation.
"""

import pytest

from combinatorics import Permutation, SetPartition
from errors import BoundExceededError, DimensionMismatchError, IndexRangeError
from hecke import AlgebraElement, identity_key
from tensor import (
    FLAT,
    SparseMatrix,
    TensorIndex,
    all_indices,
    certified_rank,
    column_sample,
    dimension,
    faithfulness_rank,
    multiplicativity_check,
    op_F,
    op_G,
    ordinal,
    pair_matrix,
    represent,
    verify_matrix_relations,
)


class TestSpace:
    """Basis vectors of the tensor power."""

    def test_dimension(self):
        assert dimension(3, 2) == 64
        assert len(list(all_indices(2, 2))) == 16

    def test_ordinal_follows_enumeration(self):
        assert [ordinal(index, 2) for index in all_indices(2, 2)] == list(range(16))

    def test_swap(self):
        index = TensorIndex.from_factors([(1, 2), (2, 1), (2, 2)])
        assert index.swap(2).factors == ((1, 2), (2, 2), (2, 1))
        assert str(index) == 'v1^2 v2^1 v2^2'

    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            TensorIndex((1, 2), (1,))

    def test_validate(self):
        with pytest.raises(IndexRangeError):
            TensorIndex((1, 3), (1, 1)).validate(2)

    def test_column_sample(self):
        assert len(column_sample(3, 2)) == 64
        sample = column_sample(4, 2, seed=1, limit=20)
        assert len(sample) == 20
        assert sample == column_sample(4, 2, seed=1, limit=20)


class TestOperators:
    """Generator matrices."""

    def test_shapes(self, symbolic_ring):
        g = op_G(1, 3, 2, symbolic_ring)
        f = op_F(2, 3, 2, symbolic_ring)
        assert g.is_monomial()
        assert f.is_diagonal()
        assert len(g.columns) == 64

    def test_coefficients(self, symbolic_ring):
        r = symbolic_ring
        g = op_G(1, 2, 2, r)
        high_low = TensorIndex.from_factors([(2, 1), (1, 1)])
        low_high = TensorIndex.from_factors([(1, 1), (2, 1)])
        same_lower = TensorIndex.from_factors([(1, 1), (1, 2)])
        assert g.column(high_low) == {low_high: r.p * r.q}
        assert g.column(low_high) == {high_low: r.q}
        assert g.column(same_lower) == {same_lower.swap(1): r.q * r.a}

    def test_tie_acts_on_equal_factors(self, symbolic_ring):
        r = symbolic_ring
        f = op_F(1, 2, 2, r)
        equal = TensorIndex.from_factors([(2, 1), (2, 1)])
        assert f.column(equal) == {equal: r.q * r.q}
        assert f.column(TensorIndex.from_factors([(2, 1), (1, 1)])) == {}

    def test_bad_index(self):
        with pytest.raises(IndexRangeError):
            op_G(3, 3, 2)
        with pytest.raises(IndexRangeError):
            op_F(1, 3, 2, table='other')


class TestRelations:
    """Defining relations as matrix identities."""

    def test_consistent_table(self):
        report = verify_matrix_relations(3, 2)
        assert report.passed, [r.name for r in report.failures]

    def test_flat_table_fails(self):
        report = verify_matrix_relations(3, 2, table=FLAT)
        assert not report.passed
        assert any(r.name.startswith('GF = pqF') for r in report.failures)

    def test_dimension_bound(self):
        with pytest.raises(BoundExceededError):
            verify_matrix_relations(7, 2)


class TestRepresent:
    """psi on elements."""

    def test_identity(self, symbolic_ring):
        one = AlgebraElement.one(2, symbolic_ring)
        assert represent(one, 2) == SparseMatrix.identity(symbolic_ring, all_indices(2, 2))

    def test_generator_images(self, symbolic_ring):
        g_key = (SetPartition.identity(2), Permutation.simple(1, 2))
        f_key = (SetPartition.full(2), Permutation.identity(2))
        assert pair_matrix(g_key, 2, symbolic_ring) == op_G(1, 2, 2, symbolic_ring)
        assert pair_matrix(f_key, 2, symbolic_ring) == op_F(1, 2, 2, symbolic_ring)

    def test_column_restriction(self, symbolic_ring):
        columns = list(all_indices(2, 2))[:3]
        matrix = represent(AlgebraElement.basis(identity_key(2), symbolic_ring), 2, columns=columns)
        assert set(matrix.columns) == set(columns)

    def test_multiplicative(self, prime_point):
        assert multiplicativity_check(3, 2, prime_point, samples=15, seed=2).passed


class TestRank:
    """Faithfulness ranks."""

    def test_rank_n3(self, prime_point):
        assert faithfulness_rank(3, 2, prime_point) == 16

    def test_rank_needs_enough_dimensions(self, prime_point):
        with pytest.raises(BoundExceededError):
            faithfulness_rank(5, 2, prime_point)

    def test_certified_rank(self):
        result = certified_rank(2, 2, seed=4)
        assert result.agree
        assert result.value == 3
