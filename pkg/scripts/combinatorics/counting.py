"""
Counting oracles used to cross-check enumerations.
"""

from functools import lru_cache
from math import comb, factorial, prod
from typing import Dict, Iterator, Tuple

from sympy.utilities.iterables import partitions as _sympy_partitions


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Bell number by the recurrence B(n+1) = sum_k C(n, k) B(k)."""
    if n == 0:
        return 1
    return sum(comb(n - 1, k) * bell(k) for k in range(n))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def double_factorial_odd(n: int) -> int:
    """(2n - 1)!!, the number of perfect matchings of 2n points."""
    return prod(range(1, 2 * n, 2))


def integer_partitions(n: int) -> Iterator[Tuple[int, ...]]:
    """Integer partitions of n as non-increasing tuples, largest first part first."""
    found = []
    for multiplicities in _sympy_partitions(n):
        parts = []
        for part in sorted(multiplicities, reverse=True):
            parts.extend([part] * multiplicities[part])
        found.append(tuple(parts))
    yield from sorted(found, reverse=True)


def partition_count(n: int) -> int:
    return sum(1 for _ in integer_partitions(n))


def set_partitions_of_shape(shape: Tuple[int, ...]) -> int:
    """Number of set partitions of {1..sum(shape)} with the given block sizes."""
    n = sum(shape)
    multiplicity: Dict[int, int] = {}
    for size in shape:
        multiplicity[size] = multiplicity.get(size, 0) + 1
    denominator = prod(factorial(size) for size in shape) * prod(factorial(k) for k in multiplicity.values())
    return factorial(n) // denominator


def shape_multiplicities(shape: Tuple[int, ...]) -> Dict[int, int]:
    """Block size -> how many blocks have that size."""
    out: Dict[int, int] = {}
    for size in shape:
        out[size] = out.get(size, 0) + 1
    return out


def party_monoid_order(n: int) -> int:
    """
    |party monoid of degree n|.

    A uniform block permutation pairs a top partition with a bottom
    partition of the same shape, then matches equal-size blocks.
    """
    total = 0
    for shape in integer_partitions(n):
        matchings = prod(factorial(k) for k in shape_multiplicities(shape).values())
        total += set_partitions_of_shape(shape) ** 2 * matchings
    return total


def tied_monoid_order(n: int) -> int:
    return bell(n) * factorial(n)


def party_j_class_size(shape: Tuple[int, ...]) -> int:
    """Number of party elements whose partition has the given shape."""
    matchings = prod(factorial(k) for k in shape_multiplicities(shape).values())
    return set_partitions_of_shape(shape) ** 2 * matchings
