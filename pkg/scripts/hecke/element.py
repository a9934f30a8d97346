"""
Elements of the Party-Hecke algebra in the coprime-pair basis.

A basis key is a coprime pair (M, u) standing for F_M G_u. Coefficients live
in a CoefficientRing; zero coefficients are never stored.
"""

from typing import Dict, Iterable, Tuple

from combinatorics import Permutation, SetPartition
from errors import DimensionMismatchError
from scalars import CoefficientRing

BasisKey = Tuple[SetPartition, Permutation]


def identity_key(n: int) -> BasisKey:
    return SetPartition.identity(n), Permutation.identity(n)


def format_key(key: BasisKey) -> str:
    partition, perm = key
    return f"[{partition}][{perm}]"


def accumulate(out: Dict[BasisKey, object], key: BasisKey, value) -> None:
    """out[key] += value, dropping the entry when it cancels."""
    total = out.get(key)
    total = value if total is None else total + value
    if total:
        out[key] = total
    else:
        out.pop(key, None)


class AlgebraElement:
    """
    Finitely supported map from coprime pairs to coefficients.

    Args:
        n: Degree
        terms: Mapping basis key -> coefficient
        ring: Coefficient ring of the coefficients
    """

    __slots__ = ('n', 'terms', 'ring')

    def __init__(self, n: int, terms: Dict[BasisKey, object], ring: CoefficientRing):
        self.n = n
        self.ring = ring
        self.terms = {key: value for key, value in terms.items() if value}

    @classmethod
    def zero(cls, n: int, ring: CoefficientRing) -> 'AlgebraElement':
        return cls(n, {}, ring)

    @classmethod
    def one(cls, n: int, ring: CoefficientRing) -> 'AlgebraElement':
        return cls(n, {identity_key(n): ring.one}, ring)

    @classmethod
    def basis(cls, key: BasisKey, ring: CoefficientRing, coeff=None) -> 'AlgebraElement':
        return cls(key[1].n, {key: ring.one if coeff is None else coeff}, ring)

    @classmethod
    def from_terms(cls, n: int, pairs: Iterable[Tuple[BasisKey, object]], ring: CoefficientRing) -> 'AlgebraElement':
        out: Dict[BasisKey, object] = {}
        for key, value in pairs:
            accumulate(out, key, value)
        return cls(n, out, ring)

    def _check(self, other: 'AlgebraElement') -> None:
        if self.n != other.n:
            raise DimensionMismatchError(self.n, other.n)

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        self._check(other)
        out = dict(self.terms)
        for key, value in other.terms.items():
            accumulate(out, key, value)
        return AlgebraElement(self.n, out, self.ring)

    def __sub__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        return self + other.scale(-self.ring.one)

    def __neg__(self) -> 'AlgebraElement':
        return self.scale(-self.ring.one)

    def scale(self, factor) -> 'AlgebraElement':
        return AlgebraElement(self.n, {key: value * factor for key, value in self.terms.items()}, self.ring)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and (self - other).is_zero()

    def __hash__(self):
        return hash((self.n, frozenset(self.terms)))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key: BasisKey):
        return self.terms.get(key, self.ring.zero)

    def sorted_terms(self):
        """Terms ordered by partition rank, then partition text, then permutation."""
        return sorted(self.terms.items(),
                      key=lambda kv: (kv[0][0].rank, kv[0][0].blocks, kv[0][1].length, kv[0][1].images))

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        return ' + '.join(f"({self.ring.format(value)}) * {format_key(key)}" for key, value in self.sorted_terms())

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, {self})"

    def to_dict(self) -> Dict[str, str]:
        return {format_key(key): self.ring.format(value) for key, value in self.sorted_terms()}
