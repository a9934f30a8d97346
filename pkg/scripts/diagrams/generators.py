"""
Generator diagrams of the partition monoid and its submonoids.

Kinds: s_i (adjacent transposition), f_i (adjacent tie), t_i (cup-cap),
f_ij (tie of i and j), s_ij (transposition of i and j), plus the diagram
of an arbitrary permutation or party pair.
"""

from typing import List, Sequence

from combinatorics import Permutation, SetPartition, transposition
from errors import IndexRangeError

from .diagram import Diagram

GENERATOR_KINDS = ('s_i', 'f_i', 't_i', 'f_ij', 's_ij')


def permutation_diagram(perm: Permutation) -> Diagram:
    """Top point perm(k) joined to bottom point k."""
    n = perm.n
    return Diagram(n, SetPartition.from_blocks(2 * n, [[perm(k), n + k] for k in range(1, n + 1)]))


def party_diagram(partition: SetPartition, perm: Permutation) -> Diagram:
    """
    Diagram of the product partition * perm.

    Each block B of the partition becomes B on top joined with
    perm^{-1}(B) on the bottom.
    """
    n = partition.n
    inverse = perm.inverse()
    return Diagram(n, SetPartition.from_blocks(
        2 * n, [list(block) + [n + inverse(b) for b in block] for block in partition.blocks]))


def _check_adjacent(i: int, n: int, kind: str) -> None:
    if not 1 <= i < n:
        raise IndexRangeError(f"{kind} with i={i} is not defined for n={n}")


def generator(kind: str, indices: Sequence[int], n: int) -> Diagram:
    """
    Build a generator diagram.

    Args:
        kind: One of GENERATOR_KINDS
        indices: (i,) for adjacent kinds, (i, j) for f_ij and s_ij
        n: Degree

    Raises:
        IndexRangeError: indices out of range or wrong arity
    """
    indices = tuple(indices)
    if kind in ('s_i', 'f_i', 't_i'):
        if len(indices) != 1:
            raise IndexRangeError(f"{kind} takes one index, got {indices}")
        i = indices[0]
        _check_adjacent(i, n, kind)
        if kind == 's_i':
            return permutation_diagram(Permutation.simple(i, n))
        if kind == 'f_i':
            return party_diagram(SetPartition.pair(i, i + 1, n), Permutation.identity(n))
        return Diagram.from_blocks(n, [[i, i + 1], [n + i, n + i + 1]]
                                   + [[k, n + k] for k in range(1, n + 1) if k not in (i, i + 1)])
    if kind in ('f_ij', 's_ij'):
        if len(indices) != 2:
            raise IndexRangeError(f"{kind} takes two indices, got {indices}")
        i, j = sorted(indices)
        if not (1 <= i < j <= n):
            raise IndexRangeError(f"{kind} with {indices} is not defined for n={n}")
        if kind == 'f_ij':
            return party_diagram(SetPartition.pair(i, j, n), Permutation.identity(n))
        return permutation_diagram(transposition(i, j, n))
    raise IndexRangeError(f"Unknown generator kind: {kind}")


def generator_family(kinds: Sequence[str], n: int) -> List[Diagram]:
    """All adjacent generators of the given kinds, in kind then index order."""
    return [generator(kind, (i,), n) for kind in kinds for i in range(1, n)]


# Named submonoids: generator kinds used by closure()
FAMILIES = {
    'symmetric': ('s_i',),
    'party': ('s_i', 'f_i'),
    'brauer': ('s_i', 't_i'),
    'jones': ('t_i',),
    'tonal2': ('s_i', 't_i', 'f_i'),
    'ties': ('f_i',),
}


def family_generators(family: str, n: int) -> List[Diagram]:
    if family not in FAMILIES:
        raise IndexRangeError(f"Unknown generator family: {family}", details={'known': sorted(FAMILIES)})
    return generator_family(FAMILIES[family], n)

