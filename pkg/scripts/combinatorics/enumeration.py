"""
Exhaustive streams of set partitions and permutations.

Both streams refuse n above settings.enumeration.partition_bound.
"""

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterator, Optional, Tuple

from config import settings
from errors import BoundExceededError, InvalidPartitionError

from .permutation import Permutation
from .set_partition import SetPartition


def _check_bound(n: int, bound: Optional[int]) -> None:
    limit = bound if bound is not None else settings.enumeration.partition_bound
    if n > limit:
        raise BoundExceededError('n', n, limit)


def enumerate_partitions(n: int, bound: Optional[int] = None) -> Iterator[SetPartition]:
    """
    Set partitions of {1..n} by restricted growth strings, lexicographically.

    Example:
        sum(1 for _ in enumerate_partitions(3))  # 5
    """
    _check_bound(n, bound)
    if n == 0:
        return
    labels = [0] * n
    maxima = [0] * n

    while True:
        yield SetPartition.from_labels(labels)
        # rightmost position that can still grow
        k = n - 1
        while k > 0 and labels[k] > maxima[k - 1]:
            k -= 1
        if k == 0:
            return
        labels[k] += 1
        maxima[k] = max(maxima[k - 1], labels[k])
        for j in range(k + 1, n):
            labels[j] = 0
            maxima[j] = maxima[k]


def enumerate_permutations(n: int, bound: Optional[int] = None) -> Iterator[Permutation]:
    """Permutations of {1..n} in lexicographic one-line order."""
    _check_bound(n, bound)
    for images in _itertools_permutations(range(1, n + 1)):
        yield Permutation(images)


@dataclass(frozen=True)
class IntegerPartition:
    """Non-increasing positive parts; indexes J-classes."""
    parts: Tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts) or list(self.parts) != sorted(self.parts, reverse=True):
            raise InvalidPartitionError(f"Not an integer partition: {self.parts}")

    @classmethod
    def of(cls, partition: SetPartition) -> 'IntegerPartition':
        return cls(partition.shape())

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return '(' + ','.join(str(p) for p in self.parts) + ')'
