"""
Twisted monoid algebras: x . y = tau(x, y) xy with tau = delta^exponent.

Carriers are the party monoid (PartyElement) and the partition monoid
(Diagram). Exponents:

- beta: arcs lost when the bottom partition of the left factor is joined
  with the top partition of the right factor (merge exponent)
- arcs: common standard arcs of those two partitions (not a cocycle; kept
  for comparison)
- alpha: floating middle components of a diagram concatenation
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Hashable, Iterable, Tuple

from combinatorics import SetPartition, beta, merge_exponent
from diagrams import Diagram, concat, top_bottom_partitions
from errors import DimensionMismatchError, ScalarDivisionError
from observability import metrics
from party import PartyElement, party_multiply, to_diagram
from scalars import Q, Scalar, format_scalar, scalar

BETA = 'beta'
ARCS = 'arcs'
ALPHA = 'alpha'
KINDS = (BETA, ARCS, ALPHA)

PARTY_CARRIER = 'party'
DIAGRAM_CARRIER = 'diagram'


@lru_cache(maxsize=None)
def boundary_partitions(element: PartyElement) -> Tuple[SetPartition, SetPartition]:
    """(top, bottom) partitions read off the element's diagram."""
    return top_bottom_partitions(to_diagram(element))


@dataclass(frozen=True)
class Twisting:
    """
    delta^exponent twisting of a monoid product.

    Args:
        kind: 'beta', 'arcs' (party carrier) or 'alpha' (diagram carrier)
        delta: Nonzero scalar
    """
    kind: str
    delta: Scalar = Q ** 2

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"Unknown twisting kind: {self.kind}")
        if not scalar(self.delta):
            raise ScalarDivisionError("Twisting parameter must be invertible")

    @property
    def carrier(self) -> str:
        return DIAGRAM_CARRIER if self.kind == ALPHA else PARTY_CARRIER

    def product(self, x: Hashable, y: Hashable) -> Tuple[Hashable, int]:
        """Monoid product of two basis elements and the twisting exponent."""
        if self.kind == ALPHA:
            result = concat(x, y)
            return result.diagram, result.alpha
        bottom = boundary_partitions(x)[1]
        top = boundary_partitions(y)[0]
        exponent = merge_exponent(bottom, top) if self.kind == BETA else beta(bottom, top)
        return party_multiply(x, y), exponent

    def exponent(self, x: Hashable, y: Hashable) -> int:
        return self.product(x, y)[1]

    def to_dict(self) -> Dict[str, str]:
        return {'kind': self.kind, 'delta': format_scalar(self.delta)}


class TwistedElement:
    """
    Finitely supported combination of monoid elements.

    Zero coefficients are never stored.
    """

    __slots__ = ('terms',)

    def __init__(self, terms: Dict[Hashable, Scalar] = None):
        self.terms = {key: scalar(value) for key, value in (terms or {}).items() if value}

    @classmethod
    def basis(cls, element: Hashable, coeff=1) -> 'TwistedElement':
        return cls({element: scalar(coeff)})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Hashable, Scalar]]) -> 'TwistedElement':
        out: Dict[Hashable, Scalar] = {}
        for element, coeff in pairs:
            out[element] = out.get(element, scalar(0)) + scalar(coeff)
        return cls(out)

    def __add__(self, other: 'TwistedElement') -> 'TwistedElement':
        return TwistedElement.from_pairs(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: 'TwistedElement') -> 'TwistedElement':
        return self + other.scale(-1)

    def scale(self, factor) -> 'TwistedElement':
        factor = scalar(factor)
        return TwistedElement({key: value * factor for key, value in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistedElement):
            return NotImplemented
        return not (self - other).terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        return ' + '.join(f"({format_scalar(coeff)}) * [{key}]"
                          for key, coeff in sorted(self.terms.items(), key=lambda kv: str(kv[0])))

    def __repr__(self) -> str:
        return f"TwistedElement({self})"


def _degree(element) -> int:
    return element.n


def twisted_multiply(x: TwistedElement, y: TwistedElement, twisting: Twisting) -> TwistedElement:
    """Bilinear extension of tau(a, b) ab over the supports."""
    out: Dict[Hashable, Scalar] = {}
    for left, c in x.terms.items():
        for right, d in y.terms.items():
            if _degree(left) != _degree(right):
                raise DimensionMismatchError(_degree(left), _degree(right))
            product, exponent = twisting.product(left, right)
            out[product] = out.get(product, scalar(0)) + c * d * twisting.delta ** exponent
    metrics.increment('twisted_products')
    return TwistedElement(out)


def identity_element(twisting: Twisting, n: int) -> TwistedElement:
    if twisting.carrier == DIAGRAM_CARRIER:
        return TwistedElement.basis(Diagram.identity(n))
    return TwistedElement.basis(PartyElement.identity(n))
