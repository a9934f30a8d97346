"""
Unit tests for exact scalars, specializations and coefficient rings.
"""

import random
from fractions import Fraction

import pytest
from sympy.polys.domains import QQ

from errors import ParseError, ResampleExhaustedError, ScalarDivisionError, VanishingDenominatorError
from scalars import (
    A,
    P,
    PRIME,
    Q,
    RATIONAL,
    CoefficientRing,
    Specialization,
    derive_seed,
    format_scalar,
    parse_scalar,
    random_specialization,
    scalar,
    scalar_arith,
    specialize,
    two_point,
    with_resampling,
)


def _random_scalar(rng: random.Random):
    """Small random quotient of polynomials in a and q."""
    terms = [scalar(1), A, Q, A * Q, A ** 2, Q ** 2]
    numerator = sum((scalar(rng.randint(-3, 3)) * t for t in terms), scalar(0))
    denominator = scalar(1) + scalar(rng.randint(-2, 2)) * A * Q + scalar(rng.randint(-2, 2)) * Q ** 2
    return numerator / (denominator * A ** rng.randint(0, 2))


class TestCanonicalForm:
    """Text form of scalars."""

    def test_graded_order(self):
        assert format_scalar(P * Q ** 2 + P * (P - 1)) == 'a^4 + a^2*q^2 - a^2'

    def test_constants(self):
        assert format_scalar(scalar(0)) == '0'
        assert format_scalar(scalar(-3)) == '-3'

    def test_fraction(self):
        assert format_scalar(scalar(1) / Q ** 2) == '1/q^2'
        assert format_scalar((1 - A) / Q ** 2) == '(-a + 1)/q^2'

    def test_denominator_sign_normalized(self):
        x = scalar_arith(scalar(1), 1 - Q, 'div')
        assert format_scalar(x) == '-1/(q - 1)'


class TestParsing:
    """parse_scalar accepts the canonical form and p shorthand."""

    def test_roundtrip_of_canonical_text(self):
        x = P * Q ** 3 - 2 * A + 1
        assert parse_scalar(format_scalar(x)) == x

    def test_p_shorthand(self):
        assert parse_scalar('p*q') == A ** 2 * Q

    def test_power_operators(self):
        assert parse_scalar('q^2') == parse_scalar('q**2') == Q ** 2

    def test_bindings(self):
        assert parse_scalar('alpha + 1', {'alpha': Q}) == Q + 1

    @pytest.mark.parametrize("text", ['', '   ', 'a +* q', 'x + 1'])
    def test_rejects_malformed_text(self, text):
        with pytest.raises(ParseError):
            parse_scalar(text)


class TestArithmetic:
    """scalar_arith is exact field arithmetic."""

    def test_operations(self):
        assert scalar_arith(A, Q, 'add') == A + Q
        assert scalar_arith(A, Q, 'mul') == A * Q
        assert scalar_arith(P, A, 'div') == A

    def test_division_by_zero(self):
        with pytest.raises(ScalarDivisionError):
            scalar_arith(A, 0, 'div')

    def test_unknown_operation(self):
        with pytest.raises(ValueError):
            scalar_arith(A, Q, 'pow')


class TestSpecialization:
    """Points, evaluation and seeded sampling."""

    def test_rational_evaluation(self):
        spec = Specialization.rational(2, 3)
        assert specialize(A * Q, spec) == QQ(6)
        assert specialize(scalar(1) / Q, spec) == QQ(1, 3)

    def test_prime_evaluation(self):
        spec = Specialization.prime(2, 3, 7)
        assert spec.domain.to_int(specialize(P * Q, spec)) % 7 == 12 % 7

    def test_vanishing_denominator(self):
        with pytest.raises(VanishingDenominatorError):
            specialize(scalar(1) / (Q - 1), Specialization.rational(2, 1))

    @pytest.mark.parametrize("target", [RATIONAL, PRIME])
    def test_evaluation_is_a_ring_map(self, target):
        rng = random.Random(17)
        checked = 0
        for seed in range(40):
            spec = random_specialization(seed, target=target)
            x, y = _random_scalar(rng), _random_scalar(rng)
            try:
                sx, sy = specialize(x, spec), specialize(y, spec)
            except VanishingDenominatorError:
                continue
            assert specialize(x + y, spec) == sx + sy
            assert specialize(x * y, spec) == sx * sy
            checked += 1
        assert checked >= 30

    def test_zero_parameter_rejected(self):
        with pytest.raises(ValueError):
            Specialization.rational(0, 1)

    def test_random_points_are_seeded(self):
        assert random_specialization(11) == random_specialization(11)
        assert random_specialization(11) != random_specialization(12)

    def test_random_prime_point_avoids_excluded(self):
        spec = random_specialization(5)
        assert spec.target == PRIME
        assert spec.modulus >= 2 ** 30
        assert spec.value_a not in (0, 1, spec.modulus - 1)
        assert spec.value_q not in (0, 1, spec.modulus - 1)

    def test_random_rational_point(self):
        spec = random_specialization(5, target=RATIONAL)
        assert isinstance(spec.value_a, Fraction)
        assert spec.value_a not in (0, 1, -1)

    def test_derive_seed_is_stable(self):
        assert derive_seed(7, 1, 2) == derive_seed(7, 1, 2)
        assert derive_seed(7, 1, 2) != derive_seed(7, 2, 1)


class TestResampling:
    """tenacity-driven resampling."""

    def test_resamples_after_vanishing_denominator(self):
        calls = []

        def compute(spec):
            calls.append(spec)
            if len(calls) == 1:
                raise VanishingDenominatorError("pole")
            return 'ok'

        assert with_resampling(compute, seed=3) == 'ok'
        assert len(calls) == 2
        assert calls[0] != calls[1]

    def test_exhaustion(self):
        def compute(spec):
            raise VanishingDenominatorError("pole")

        with pytest.raises(ResampleExhaustedError):
            with_resampling(compute, seed=3, attempts=2)

    def test_two_point_agreement(self):
        result = two_point(lambda spec: 42, seed=1)
        assert result.agree
        assert result.value == 42
        assert result.attempts == 1
        assert len(result.points) == 2
        assert result.points[0] != result.points[1]

    def test_two_point_persistent_disagreement(self):
        result = two_point(lambda spec: spec.modulus, seed=1, attempts=2)
        assert not result.agree
        assert result.attempts == 2
        assert result.to_dict()['agree'] is False


class TestCoefficientRing:
    """Uniform ring interface."""

    def test_polynomial_rejects_fractions(self):
        with pytest.raises(ScalarDivisionError):
            CoefficientRing.polynomial().from_scalar(scalar(1) / Q)

    def test_polynomial_lift(self):
        ring = CoefficientRing.polynomial()
        value = ring.from_scalar(P * Q + 1)
        assert ring.to_symbolic(value) == P * Q + 1
        assert ring.format(value) == 'a^2*q + 1'

    def test_specialized_prime_format(self):
        ring = CoefficientRing.specialized(Specialization.prime(2, 3, 7))
        assert ring.format(ring.p * ring.q) == '5'

    def test_inverse_of_zero(self):
        ring = CoefficientRing.symbolic()
        with pytest.raises(ScalarDivisionError):
            ring.inverse(ring.zero)
