"""
Coefficient rings used by the algebra engines.

An engine never touches sympy domains directly; it asks its
CoefficientRing for zero, one, the parameters a and q, and for the image
of a symbolic Scalar. Four rings are provided:

- symbolic: the fraction field Q(a, q) (exact relation checks)
- polynomial: Z[a, q] (fast structure constants; no division)
- specialized: Q or GF(p) at a Specialization point (ranks, dimensions)
"""

from typing import Any

from errors import ScalarDivisionError

from .field import A, Q, POLY_RING, SCALAR_FIELD, Scalar, format_polynomial, format_scalar, scalar
from .specialization import PRIME, Specialization, specialize


class CoefficientRing:
    """
    Uniform view of a coefficient ring.

    Args:
        name: 'symbolic', 'polynomial' or 'specialized'
        zero: Additive identity
        one: Multiplicative identity
        a: Image of the parameter a
        q: Image of the parameter q
        spec: Specialization when name is 'specialized'
    """

    def __init__(self, name: str, zero: Any, one: Any, a: Any, q: Any, spec: Specialization = None):
        self.name = name
        self.zero = zero
        self.one = one
        self.a = a
        self.q = q
        self.spec = spec
        self.p = a * a

    @classmethod
    def symbolic(cls) -> 'CoefficientRing':
        return cls('symbolic', SCALAR_FIELD.zero, SCALAR_FIELD.one, A, Q)

    @classmethod
    def polynomial(cls) -> 'CoefficientRing':
        a, q = POLY_RING.gens
        return cls('polynomial', POLY_RING.zero, POLY_RING.one, a, q)

    @classmethod
    def specialized(cls, spec: Specialization) -> 'CoefficientRing':
        dom = spec.domain
        return cls('specialized', dom.zero, dom.one, spec.a, spec.q, spec=spec)

    @property
    def is_field(self) -> bool:
        return self.name != 'polynomial'

    def from_int(self, value: int):
        return self.one * value

    def from_scalar(self, x: Scalar):
        """
        Image of a symbolic scalar in this ring.

        Raises:
            ScalarDivisionError: x has a non-unit denominator in the polynomial ring
            VanishingDenominatorError: x has a pole at the specialization point
        """
        x = scalar(x)
        if self.name == 'symbolic':
            return x
        if self.name == 'polynomial':
            if x.denom != POLY_RING.one:
                raise ScalarDivisionError(
                    "Scalar is not a polynomial",
                    details={'scalar': format_scalar(x)}
                )
            return x.numer
        return specialize(x, self.spec)

    def to_symbolic(self, value) -> Scalar:
        """Lift a polynomial-ring element back into the fraction field."""
        if self.name == 'symbolic':
            return value
        if self.name == 'polynomial':
            return SCALAR_FIELD.new(value)
        raise TypeError("Specialized values have no symbolic lift")

    def inverse(self, value):
        if not value:
            raise ScalarDivisionError("Inverse of zero")
        if not self.is_field:
            raise ScalarDivisionError("The polynomial ring has no inverses")
        return self.one / value

    def format(self, value) -> str:
        if self.name == 'symbolic':
            return format_scalar(value)
        if self.name == 'polynomial':
            return format_polynomial(value)
        if self.spec.target == PRIME:
            return str(self.spec.domain.to_int(value) % self.spec.modulus)
        return str(value)

    def describe(self) -> str:
        if self.spec is None:
            return self.name
        return f"{self.name}@{self.spec.target}(a={self.spec.value_a}, q={self.spec.value_q})"

    def __repr__(self) -> str:
        return f"CoefficientRing({self.describe()})"
