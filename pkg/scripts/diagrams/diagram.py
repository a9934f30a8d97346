"""
Partition diagrams: set partitions of {1..2n}.

Points 1..n form the top row and n+1..2n the bottom row. Concatenation
stacks I over J, identifying the bottom row of I with the top row of J,
and reports how many components were left floating in the middle row.
"""

from dataclasses import dataclass
from typing import NamedTuple, Tuple

from combinatorics import SetPartition, UnionFind
from errors import DimensionMismatchError, ParseError
from observability import metrics


@dataclass(frozen=True)
class Diagram:
    """
    Element of the partition monoid of degree n.

    Example:
        Diagram.parse('1 2 4 5|3 6', n=3)  # the tie f_{1,2}
    """
    n: int
    partition: SetPartition

    def __post_init__(self):
        if self.partition.n != 2 * self.n:
            raise DimensionMismatchError(2 * self.n, self.partition.n, what='diagram points')

    @classmethod
    def from_blocks(cls, n: int, blocks) -> 'Diagram':
        return cls(n, SetPartition.from_blocks(2 * n, blocks))

    @classmethod
    def identity(cls, n: int) -> 'Diagram':
        return cls(n, SetPartition(2 * n, tuple((k, n + k) for k in range(1, n + 1))))

    @classmethod
    def parse(cls, text: str, n: int = None) -> 'Diagram':
        """Parse ``1 2 4 5|3 6``; n defaults to half the largest point."""
        if n is None:
            try:
                largest = max(int(tok) for tok in text.replace('|', ' ').split())
            except ValueError as exc:
                raise ParseError(f"Cannot parse diagram: {text!r}") from exc
            if largest % 2:
                raise ParseError(f"Diagram needs an even number of points: {text!r}")
            n = largest // 2
        return cls(n, SetPartition.parse(text, 2 * n))

    @property
    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        return self.partition.blocks

    def __str__(self) -> str:
        return str(self.partition)

    def top(self, block: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(p for p in block if p <= self.n)

    def bottom(self, block: Tuple[int, ...]) -> Tuple[int, ...]:
        """Bottom points of a block relabelled to 1..n."""
        return tuple(p - self.n for p in block if p > self.n)


class ConcatResult(NamedTuple):
    diagram: Diagram
    alpha: int


def concat(first: Diagram, second: Diagram) -> ConcatResult:
    """
    Stack first over second.

    Nodes 0..n-1 are the top of first, n..2n-1 the shared middle row and
    2n..3n-1 the bottom of second.
    """
    if first.n != second.n:
        raise DimensionMismatchError(first.n, second.n)
    n = first.n
    uf = UnionFind(3 * n)

    def link(block, offset_top: int, offset_bottom: int) -> None:
        nodes = [offset_top + p - 1 if p <= n else offset_bottom + p - n - 1 for p in block]
        for node in nodes[1:]:
            uf.union(nodes[0], node)

    for block in first.blocks:
        link(block, 0, n)
    for block in second.blocks:
        link(block, n, 2 * n)

    alpha = 0
    blocks = []
    for group in uf.groups():
        outer = [x + 1 if x < n else x - n + 1 for x in group if x < n or x >= 2 * n]
        if outer:
            blocks.append(tuple(outer))
        else:
            alpha += 1
    metrics.increment('diagram_concat')
    return ConcatResult(Diagram(n, SetPartition(2 * n, tuple(sorted(blocks, key=lambda b: b[0])))), alpha)


def top_bottom_partitions(diagram: Diagram) -> Tuple[SetPartition, SetPartition]:
    """Restrictions to the top row and to the bottom row (relabelled to 1..n)."""
    n = diagram.n
    top = [diagram.top(block) for block in diagram.blocks]
    bottom = [diagram.bottom(block) for block in diagram.blocks]
    return (SetPartition.from_blocks(n, [b for b in top if b]),
            SetPartition.from_blocks(n, [b for b in bottom if b]))


def is_uniform(diagram: Diagram) -> bool:
    """Every block has as many top points as bottom points."""
    return all(len(diagram.top(block)) == len(diagram.bottom(block)) for block in diagram.blocks)


def is_planar(diagram: Diagram) -> bool:
    """
    True when the blocks can be drawn without crossings.

    Points are read around the boundary: top row left to right, then the
    bottom row right to left; the diagram is planar iff the resulting
    partition of the circle is non-crossing.
    """
    n = diagram.n
    position = {k: k for k in range(1, n + 1)}
    position.update({n + k: 2 * n + 1 - k for k in range(1, n + 1)})
    labels = {}
    for index, block in enumerate(diagram.blocks):
        for p in block:
            labels[position[p]] = index
    return _noncrossing([labels[pos] for pos in sorted(labels)])


def _noncrossing(sequence) -> bool:
    """A cyclic label sequence is non-crossing iff it reduces by stack matching."""
    last = {}
    for pos, label in enumerate(sequence):
        last[label] = pos
    stack = []
    for pos, label in enumerate(sequence):
        if stack and stack[-1] == label:
            pass
        elif label in stack:
            return False
        else:
            stack.append(label)
        if last[label] == pos:
            stack.pop()
    return True
