"""
Set partitions of {1..n}.

A SetPartition is immutable and canonical: each block is sorted and blocks
are ordered by their minimum, so equal partitions compare and hash equal.
The refinement order puts finer partitions below coarser ones and join is
the finest common coarsening.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, NamedTuple, Sequence, Tuple

from errors import DimensionMismatchError, IndexRangeError, InvalidPartitionError, ParseError

from .union_find import UnionFind


class Arc(NamedTuple):
    """Pair lo < hi of points in one block."""
    lo: int
    hi: int


@dataclass(frozen=True)
class SetPartition:
    """
    Canonical set partition.

    Args:
        n: Size of the ground set {1..n}
        blocks: Sorted blocks ordered by minimum element

    Example:
        f = SetPartition.from_blocks(3, [[1, 3], [2]])
        f.standard_arcs()  # {Arc(1, 3)}
    """
    n: int
    blocks: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]], fill: bool = True) -> 'SetPartition':
        """
        Build a canonical partition.

        Args:
            n: Ground set size
            blocks: Disjoint blocks
            fill: Add singletons for points not covered by blocks
        """
        canon = [tuple(sorted(set(block))) for block in blocks]
        seen = set()
        for block in canon:
            if not block:
                raise InvalidPartitionError("Empty block", details={'n': n})
            for point in block:
                if point < 1 or point > n:
                    raise InvalidPartitionError(f"Point {point} outside 1..{n}", details={'n': n})
                if point in seen:
                    raise InvalidPartitionError(f"Point {point} in two blocks", details={'n': n})
                seen.add(point)
        if fill:
            canon.extend((point,) for point in range(1, n + 1) if point not in seen)
        elif len(seen) != n:
            raise InvalidPartitionError("Blocks do not cover 1..n", details={'n': n})
        return cls(n, tuple(sorted(canon, key=lambda block: block[0])))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> 'SetPartition':
        """Partition whose blocks are the fibres of labels (position i -> point i+1)."""
        groups = {}
        for point, label in enumerate(labels, start=1):
            groups.setdefault(label, []).append(point)
        return cls(len(labels), tuple(sorted((tuple(g) for g in groups.values()), key=lambda b: b[0])))

    @classmethod
    def identity(cls, n: int) -> 'SetPartition':
        """All singletons."""
        return cls(n, tuple((point,) for point in range(1, n + 1)))

    @classmethod
    def full(cls, n: int) -> 'SetPartition':
        """The single block {1..n}."""
        return cls(n, (tuple(range(1, n + 1)),))

    @classmethod
    def pair(cls, i: int, j: int, n: int) -> 'SetPartition':
        """The generator f_{i,j}: one block {i, j}, the rest singletons."""
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise IndexRangeError(f"f_{{{i},{j}}} is not defined for n={n}")
        return cls.from_blocks(n, [[i, j]])

    @classmethod
    def parse(cls, text: str, n: int = None) -> 'SetPartition':
        """
        Parse the text form ``1 3 5|2 4``.

        Args:
            text: Blocks separated by '|', points by whitespace
            n: Ground set size; inferred from the points when omitted

        Raises:
            ParseError: malformed text
        """
        try:
            blocks = [[int(tok) for tok in chunk.split()] for chunk in text.strip().split('|') if chunk.strip()]
        except ValueError as exc:
            raise ParseError(f"Cannot parse set partition: {text!r}") from exc
        if not blocks:
            raise ParseError(f"Empty set partition: {text!r}")
        size = n if n is not None else max(max(block) for block in blocks)
        try:
            return cls.from_blocks(size, blocks, fill=n is not None)
        except InvalidPartitionError as exc:
            raise ParseError(f"Invalid set partition {text!r}: {exc.message}") from exc

    def __str__(self) -> str:
        return '|'.join(' '.join(str(point) for point in block) for block in self.blocks)

    @cached_property
    def labels(self) -> Tuple[int, ...]:
        """labels[i-1] = index of the block containing i."""
        out = [0] * self.n
        for index, block in enumerate(self.blocks):
            for point in block:
                out[point - 1] = index
        return tuple(out)

    def same_block(self, i: int, j: int) -> bool:
        return self.labels[i - 1] == self.labels[j - 1]

    def block_of(self, point: int) -> Tuple[int, ...]:
        return self.blocks[self.labels[point - 1]]

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def rank(self) -> int:
        """n minus the number of blocks (the number of standard arcs)."""
        return self.n - len(self.blocks)

    def is_identity(self) -> bool:
        return len(self.blocks) == self.n

    def shape(self) -> Tuple[int, ...]:
        """Block sizes in non-increasing order."""
        return tuple(sorted((len(block) for block in self.blocks), reverse=True))

    def refines(self, other: 'SetPartition') -> bool:
        """True when every block of self lies inside a block of other."""
        _check_same_n(self, other)
        return all(len({other.labels[point - 1] for point in block}) == 1 for block in self.blocks)

    def standard_arcs(self) -> frozenset:
        return frozenset(
            Arc(block[k], block[k + 1]) for block in self.blocks for k in range(len(block) - 1)
        )

    def restrict(self, points: Sequence[int]) -> List[Tuple[int, ...]]:
        """Nonempty intersections of the blocks with points, in block order."""
        wanted = set(points)
        return [tuple(p for p in block if p in wanted) for block in self.blocks
                if any(p in wanted for p in block)]


def _check_same_n(left, right) -> None:
    if left.n != right.n:
        raise DimensionMismatchError(left.n, right.n)


def join(first: SetPartition, second: SetPartition) -> SetPartition:
    """
    Finest partition coarser than both arguments.

    Example:
        join(SetPartition.parse('1 2|3'), SetPartition.parse('1|2 3'))  # 1 2 3
    """
    _check_same_n(first, second)
    if second.is_identity():
        return first
    if first.is_identity():
        return second
    uf = UnionFind(first.n)
    for partition in (first, second):
        for block in partition.blocks:
            for point in block[1:]:
                uf.union(block[0] - 1, point - 1)
    return SetPartition(first.n, tuple(tuple(x + 1 for x in group) for group in uf.groups()))


def standard_arcs(partition: SetPartition) -> frozenset:
    """Consecutive pairs (q_k, q_{k+1}) inside each block; n - #blocks of them."""
    return partition.standard_arcs()


def beta(first: SetPartition, second: SetPartition) -> int:
    """Number of common standard arcs."""
    _check_same_n(first, second)
    return len(first.standard_arcs() & second.standard_arcs())


def merge_exponent(first: SetPartition, second: SetPartition) -> int:
    """
    Number of standard arcs lost when the two partitions are joined.

    rank(I) + rank(J) - rank(I v J), with rank = n - #blocks. This is the
    exponent of the twisting cocycle of the party algebra:
    F_I F_J = q^(2 * merge_exponent(I, J)) F_{I v J}.
    """
    return first.rank + second.rank - join(first, second).rank


def partition_normal_word(partition: SetPartition) -> List[Arc]:
    """Standard-arc chains, block by block; their product f_{lo,hi} rebuilds the partition."""
    return [Arc(block[k], block[k + 1]) for block in partition.blocks for k in range(len(block) - 1)]


def act(perm, partition: SetPartition) -> SetPartition:
    """Pointwise image of every block under perm, re-canonicalized."""
    _check_same_n(perm, partition)
    images = perm.images
    return SetPartition(
        partition.n,
        tuple(sorted((tuple(sorted(images[p - 1] for p in block)) for block in partition.blocks),
                     key=lambda block: block[0]))
    )
