"""
Permutations of {1..n} in one-line notation.

Composition convention: (s * t)(x) = s(t(x)). The simple transposition s_k
swaps k and k+1; right multiplication u * s_k swaps positions k, k+1 of the
one-line form and left multiplication s_k * u swaps the values k, k+1.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Sequence, Set, Tuple

from errors import DimensionMismatchError, IndexRangeError, InvalidPermutationError, ParseError


@dataclass(frozen=True)
class Permutation:
    """
    Element of the symmetric group; images[i-1] = s(i).

    Example:
        w0 = Permutation.from_images([3, 2, 1])
        w0.length  # 3
    """
    images: Tuple[int, ...]

    @classmethod
    def from_images(cls, images: Sequence[int]) -> 'Permutation':
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutationError(f"Not a permutation: {list(images)}")
        return cls(images)

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, k: int, n: int) -> 'Permutation':
        """The elementary transposition s_k = (k, k+1)."""
        if not 1 <= k < n:
            raise IndexRangeError(f"s_{k} is not defined for n={n}")
        images = list(range(1, n + 1))
        images[k - 1], images[k] = k + 1, k
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str) -> 'Permutation':
        """Parse the one-line text form ``2 1 3``."""
        try:
            return cls.from_images([int(tok) for tok in text.split()])
        except (ValueError, InvalidPermutationError) as exc:
            raise ParseError(f"Cannot parse permutation: {text!r}") from exc

    def __str__(self) -> str:
        return ' '.join(str(x) for x in self.images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        if self.n != other.n:
            raise DimensionMismatchError(self.n, other.n)
        mine = self.images
        return Permutation(tuple(mine[x - 1] for x in other.images))

    def inverse(self) -> 'Permutation':
        out = [0] * self.n
        for position, value in enumerate(self.images, start=1):
            out[value - 1] = position
        return Permutation(tuple(out))

    def is_identity(self) -> bool:
        return all(value == position for position, value in enumerate(self.images, start=1))

    @cached_property
    def positions(self) -> Tuple[int, ...]:
        """positions[v-1] = s^{-1}(v)."""
        return self.inverse().images

    @cached_property
    def length(self) -> int:
        """Number of pairs of positions out of order."""
        images = self.images
        return sum(1 for i in range(len(images)) for j in range(i + 1, len(images)) if images[i] > images[j])

    def right_simple(self, k: int) -> 'Permutation':
        """self * s_k."""
        images = list(self.images)
        images[k - 1], images[k] = images[k], images[k - 1]
        return Permutation(tuple(images))

    def left_simple(self, k: int) -> 'Permutation':
        """s_k * self."""
        return Permutation(tuple(k + 1 if v == k else k if v == k + 1 else v for v in self.images))

    def left_transpose(self, i: int, j: int) -> 'Permutation':
        """s_{i,j} * self (swap the values i and j)."""
        return Permutation(tuple(j if v == i else i if v == j else v for v in self.images))

    def right_ascent(self, k: int) -> bool:
        """True when l(self * s_k) > l(self)."""
        return self.images[k - 1] < self.images[k]

    def left_descent(self, k: int) -> bool:
        """True when l(s_k * self) < l(self)."""
        return self.positions[k] < self.positions[k - 1]

    def reduced_word(self) -> List[int]:
        """
        Deterministic reduced word [k1, ..., kr] with self = s_k1 ... s_kr.

        Repeatedly strips the smallest s_k that shortens from the left.
        """
        word = []
        current = self
        while not current.is_identity():
            k = next(k for k in range(1, self.n) if current.left_descent(k))
            word.append(k)
            current = current.left_simple(k)
        return word


def transposition(i: int, j: int, n: int) -> Permutation:
    """s_{i,j}: swaps i and j."""
    if not (1 <= i < j <= n):
        raise IndexRangeError(f"s_{{{i},{j}}} needs 1 <= i < j <= {n}")
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation(tuple(images))


def s_AB(first: Iterable[int], second: Iterable[int], n: int) -> Permutation:
    """
    Involution swapping A and B order-preservingly, fixing everything else.

    Raises:
        InvalidPermutationError: A and B overlap or differ in size
    """
    a_points, b_points = sorted(set(first)), sorted(set(second))
    if len(a_points) != len(b_points) or set(a_points) & set(b_points):
        raise InvalidPermutationError("s_AB needs disjoint sets of equal size",
                                      details={'A': a_points, 'B': b_points})
    images = list(range(1, n + 1))
    for x, y in zip(a_points, b_points):
        if not (1 <= x <= n and 1 <= y <= n):
            raise IndexRangeError(f"Point outside 1..{n}")
        images[x - 1], images[y - 1] = y, x
    return Permutation(tuple(images))


def inversion_set(perm: Permutation) -> FrozenSet[Tuple[int, int]]:
    """Pairs (i, j), i < j, such that l(s_{i,j} * perm) < l(perm)."""
    n = perm.n
    base = perm.length
    return frozenset(
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
        if perm.left_transpose(i, j).length < base
    )


def length_and_inversions(perm: Permutation) -> Tuple[int, Set[Tuple[int, int]]]:
    """
    Length and left-inversion set.

    Membership is decided by comparing lengths, which for s_{i,j} * perm
    amounts to the value j appearing before the value i.
    """
    return perm.length, set(inversion_set(perm))
