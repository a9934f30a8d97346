"""
Ramified pairs: (fine, coarse) diagrams with fine refining coarse.

A tied element e*s is carried as (diagram of s, diagram of e*s); the pair
product is componentwise concatenation.
"""

from dataclasses import dataclass

from errors import InvalidPartitionError

from .diagram import Diagram, concat


@dataclass(frozen=True)
class RamifiedPair:
    fine: Diagram
    coarse: Diagram

    def __post_init__(self):
        if not self.fine.partition.refines(self.coarse.partition):
            raise InvalidPartitionError("Ramified pair needs fine to refine coarse",
                                        details={'fine': str(self.fine), 'coarse': str(self.coarse)})

    @property
    def n(self) -> int:
        return self.fine.n

    def ties(self):
        """Pairs of fine blocks merged in the coarse diagram."""
        labels = self.coarse.partition.labels
        blocks = self.fine.blocks
        return [(x, y) for i, x in enumerate(blocks) for y in blocks[i + 1:]
                if labels[x[0] - 1] == labels[y[0] - 1]]


def ramified_product(first: RamifiedPair, second: RamifiedPair) -> RamifiedPair:
    return RamifiedPair(concat(first.fine, second.fine).diagram, concat(first.coarse, second.coarse).diagram)
