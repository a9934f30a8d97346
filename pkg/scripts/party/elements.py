"""
Party monoid elements as coprime pairs and tied symmetric monoid elements.

A party element g = f*s is stored as the unique coprime pair (f, s): no
inversion (i, j) of s has i and j in one block of f. Products are formed in
the semidirect product of set partitions by permutations and then
normalized, which implements the congruence f_{ij} s_{ij} = f_{ij}.
"""

import random
import re
from dataclasses import dataclass
from typing import Optional, Tuple

from combinatorics import IntegerPartition, Permutation, SetPartition, act, join
from diagrams import Diagram, RamifiedPair, is_uniform, party_diagram, permutation_diagram
from errors import DimensionMismatchError, NonUniformDiagramError, ParseError
from observability import metrics

_PAIR_RE = re.compile(r'^\s*\[([^\]]*)\]\s*\[([^\]]*)\]\s*$')


def _parse_pair(text: str) -> Tuple[SetPartition, Permutation]:
    match = _PAIR_RE.match(text)
    if not match:
        raise ParseError(f"Expected '[partition][permutation]', got {text!r}")
    perm = Permutation.parse(match.group(2))
    return SetPartition.parse(match.group(1), perm.n), perm


def strippable_inversions(partition: SetPartition, perm: Permutation):
    """Inversions (i, j) of perm, lexicographically, with i and j in one block."""
    base = perm.length
    return [(i, j) for block in partition.blocks for x, i in enumerate(block) for j in block[x + 1:]
            if perm.left_transpose(i, j).length < base]


def is_coprime(partition: SetPartition, perm: Permutation) -> bool:
    return not strippable_inversions(partition, perm)


@dataclass(frozen=True)
class PartyElement:
    """
    Coprime pair (partition, perm) standing for partition * perm.

    Build through party_normalize unless the pair is known to be coprime.
    """
    partition: SetPartition
    perm: Permutation

    @property
    def n(self) -> int:
        return self.perm.n

    @classmethod
    def identity(cls, n: int) -> 'PartyElement':
        return cls(SetPartition.identity(n), Permutation.identity(n))

    @classmethod
    def parse(cls, text: str) -> 'PartyElement':
        """Parse ``[1 3|2][2 1 3]`` and normalize."""
        return party_normalize(*_parse_pair(text))

    def __str__(self) -> str:
        return f"[{self.partition}][{self.perm}]"


@dataclass(frozen=True)
class TiedSymElement:
    """Element e*s of the tied symmetric monoid; every pair is a distinct element."""
    partition: SetPartition
    perm: Permutation

    def __post_init__(self):
        if self.partition.n != self.perm.n:
            raise DimensionMismatchError(self.partition.n, self.perm.n)

    @property
    def n(self) -> int:
        return self.perm.n

    @classmethod
    def identity(cls, n: int) -> 'TiedSymElement':
        return cls(SetPartition.identity(n), Permutation.identity(n))

    @classmethod
    def parse(cls, text: str) -> 'TiedSymElement':
        return cls(*_parse_pair(text))

    def __str__(self) -> str:
        return f"[{self.partition}][{self.perm}]"


def party_normalize(partition: SetPartition, perm: Permutation,
                    rng: Optional[random.Random] = None) -> PartyElement:
    """
    Strip same-block inversions until the pair is coprime.

    Each step replaces perm by s_{i,j} * perm, which shortens it. The least
    strippable inversion is taken unless rng is given, in which case a
    random one is; the result does not depend on the choice.
    """
    if partition.n != perm.n:
        raise DimensionMismatchError(partition.n, perm.n)
    while True:
        candidates = strippable_inversions(partition, perm)
        if not candidates:
            return PartyElement(partition, perm)
        i, j = rng.choice(candidates) if rng is not None else candidates[0]
        perm = perm.left_transpose(i, j)


def party_multiply(first: PartyElement, second: PartyElement) -> PartyElement:
    """(f s)(f' s') = (f v s(f')) s s', normalized."""
    if first.n != second.n:
        raise DimensionMismatchError(first.n, second.n)
    metrics.increment('party_products')
    return party_normalize(join(first.partition, act(first.perm, second.partition)), first.perm * second.perm)


def party_inverse(element: PartyElement) -> PartyElement:
    """g* = s^{-1} f = s^{-1}(f) s^{-1}."""
    inverse = element.perm.inverse()
    return party_normalize(act(inverse, element.partition), inverse)


def to_diagram(element: PartyElement) -> Diagram:
    return party_diagram(element.partition, element.perm)


def from_diagram(diagram: Diagram) -> PartyElement:
    """
    Coprime pair of a uniform diagram.

    Each block's top points are matched order-preservingly with its bottom
    points, which gives perm^{-1} on that block.

    Raises:
        NonUniformDiagramError: some block is unbalanced
    """
    if not is_uniform(diagram):
        raise NonUniformDiagramError("Diagram is not uniform", details={'diagram': str(diagram)})
    n = diagram.n
    inverse = [0] * n
    tops = []
    for block in diagram.blocks:
        top, bottom = diagram.top(block), diagram.bottom(block)
        tops.append(top)
        for b, c in zip(top, bottom):
            inverse[b - 1] = c
    perm = Permutation(tuple(inverse)).inverse()
    return party_normalize(SetPartition.from_blocks(n, tops), perm)


def tied_multiply(first: TiedSymElement, second: TiedSymElement) -> TiedSymElement:
    """Semidirect product (e v s(e'), s s')."""
    if first.n != second.n:
        raise DimensionMismatchError(first.n, second.n)
    return TiedSymElement(join(first.partition, act(first.perm, second.partition)), first.perm * second.perm)


def tied_to_party(element: TiedSymElement) -> PartyElement:
    """The quotient map of the tied symmetric monoid onto the party monoid."""
    return party_normalize(element.partition, element.perm)


def shape(element) -> IntegerPartition:
    """Block sizes of the partition component, non-increasing."""
    return IntegerPartition.of(element.partition)


def to_ramified(element: TiedSymElement) -> RamifiedPair:
    """(diagram of s, diagram of e*s) for a tied element e*s."""
    return RamifiedPair(permutation_diagram(element.perm), party_diagram(element.partition, element.perm))
