"""
Unit tests for echelon subspaces, ideal quotients and the trace form.
"""

import pytest
from sympy.polys.domains import QQ

from errors import BoundExceededError, DimensionMismatchError, IndexRangeError, IterationCapError
from hecke import get_engine
from quotients import (
    FF,
    I_IDEAL,
    J_IDEAL,
    BasisCoordinates,
    Subspace,
    expected_quotient,
    gram_determinant,
    gram_rank,
    generic_semisimplicity,
    ideal_at,
    ideal_closure,
    ideal_seeds,
    quotient_dimension,
    rank,
    semisimplicity_certificate,
    verify_quotient_consequences,
)
from scalars import CoefficientRing


class TestSubspace:
    """Reduced row echelon insertion."""

    def test_rows_stay_fully_reduced(self):
        space = Subspace(3, QQ)
        space.insert({0: QQ(1), 1: QQ(1)})
        space.insert({1: QQ(2)})
        assert space.dimension == 2
        assert space.rows[0] == {0: QQ(1)}
        assert space.rows[1] == {1: QQ(1)}
        assert space.pivots == [0, 1]

    def test_dependent_vector(self):
        space = Subspace(3, QQ)
        space.insert({0: QQ(1), 2: QQ(3)})
        assert space.insert({0: QQ(2), 2: QQ(6)}) == {}
        assert space.contains({0: QQ(-1), 2: QQ(-3)})
        assert not space.contains({2: QQ(1)})

    def test_rank(self):
        vectors = [{0: QQ(1)}, {1: QQ(1)}, {0: QQ(1), 1: QQ(1)}]
        assert rank(vectors, 2, QQ) == 2

    def test_position_out_of_range(self):
        with pytest.raises(DimensionMismatchError):
            Subspace(2, QQ).insert({2: QQ(1)})


class TestIdeals:
    """Two-sided ideals at prime-field points."""

    @pytest.mark.parametrize("ideal, expected", [(FF, 15), (I_IDEAL, 6), (J_IDEAL, 5)])
    def test_quotient_n3(self, ideal, expected):
        report = quotient_dimension(ideal, 3, seed=0)
        assert report.agree
        assert report.quotient_dimension == expected
        assert report.passed
        assert report.to_dict()['ambient'] == 16

    def test_expected_quotients(self):
        assert expected_quotient(FF, 2) == 3
        assert expected_quotient(FF, 4) == 114
        assert expected_quotient(I_IDEAL, 2) is None
        assert expected_quotient(I_IDEAL, 4) == 24
        assert expected_quotient(J_IDEAL, 4) == 14

    def test_no_seeds_below_three(self, prime_point):
        engine = get_engine(2, CoefficientRing.specialized(prime_point))
        assert ideal_seeds(FF, engine) == []
        assert ideal_at(FF, 2, prime_point).dimension == 0

    def test_adjacent_seeds(self, prime_point):
        engine = get_engine(4, CoefficientRing.specialized(prime_point))
        assert len(ideal_seeds(J_IDEAL, engine)) == 4
        assert len(ideal_seeds(FF, engine)) == 1

    def test_seed_element_is_basis_product(self, prime_point):
        engine = get_engine(3, CoefficientRing.specialized(prime_point))
        (seed,) = ideal_seeds(FF, engine)
        assert len(seed.terms) == 1
        coords = BasisCoordinates(3)
        assert len(coords) == 16
        assert coords.element(coords.vector(seed), engine.ring) == seed

    def test_bounds(self):
        with pytest.raises(IndexRangeError):
            quotient_dimension('K', 3)
        with pytest.raises(BoundExceededError):
            quotient_dimension(FF, 6)
        with pytest.raises(BoundExceededError):
            quotient_dimension(I_IDEAL, 5)

    def test_iteration_cap(self, prime_point):
        engine = get_engine(3, CoefficientRing.specialized(prime_point))
        with pytest.raises(IterationCapError):
            ideal_closure(ideal_seeds(FF, engine), cap=1)

    def test_closure_needs_seeds(self):
        with pytest.raises(IndexRangeError):
            ideal_closure([])

    def test_symbolic_seed_needs_point(self):
        seed = get_engine(3).one()
        with pytest.raises(IndexRangeError):
            ideal_closure(seed)

    def test_unit_generates_everything(self, prime_point):
        assert ideal_closure(get_engine(3).one(), spec=prime_point).dimension == 16


class TestConsequences:
    """Consequences of the Hecke-type and Temperley-Lieb-type quotients."""

    @pytest.mark.parametrize("which", [I_IDEAL, J_IDEAL])
    def test_consequences_hold(self, which, prime_point):
        report = verify_quotient_consequences(which, 3, spec=prime_point)
        assert report.passed, [r.name for r in report.failures]

    def test_only_i_and_j(self):
        with pytest.raises(IndexRangeError):
            verify_quotient_consequences(FF, 3)
        with pytest.raises(IndexRangeError):
            verify_quotient_consequences(I_IDEAL, 2)


class TestTraceForm:
    """Gram ranks and certificates."""

    def test_degenerate_point_is_semisimple(self, degenerate_point):
        assert gram_rank(3, degenerate_point) == 16
        certificate = semisimplicity_certificate(3, degenerate_point)
        assert certificate.semisimple_at_point
        assert certificate.to_dict()['advisory'] is False

    def test_prime_point_is_advisory(self, prime_point):
        certificate = semisimplicity_certificate(2, prime_point)
        assert certificate.to_dict()['advisory'] is True
        assert not certificate.semisimple_at_point

    def test_generic(self):
        certificates = generic_semisimplicity(2, seed=1)
        assert len(certificates) == 3
        assert all(c.gram_rank == 3 for c in certificates)

    def test_determinant(self):
        assert gram_determinant(2) != '0'
        with pytest.raises(BoundExceededError):
            gram_determinant(3)

    def test_certificate_bound(self, degenerate_point):
        with pytest.raises(BoundExceededError):
            semisimplicity_certificate(5, degenerate_point)
