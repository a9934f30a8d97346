"""
Reduced row echelon subspaces over a sympy field domain.

Vectors are sparse dicts position -> coefficient with integer positions.
Rows are kept fully reduced: each row has coefficient 1 at its pivot and
zero at every other pivot.
"""

from typing import Dict, Iterable, List

from errors import DimensionMismatchError

Vector = Dict[int, object]


class Subspace:
    """
    Span of the inserted vectors.

    Args:
        ambient: Number of coordinates
        domain: sympy field domain of the coefficients (QQ or GF(p))
    """

    def __init__(self, ambient: int, domain):
        self.ambient = ambient
        self.domain = domain
        self.rows: Dict[int, Vector] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def _check(self, vector: Vector) -> None:
        for position in vector:
            if not 0 <= position < self.ambient:
                raise DimensionMismatchError(self.ambient, position, what='vector position')

    def reduce(self, vector: Vector) -> Vector:
        """Remainder of vector modulo the span."""
        self._check(vector)
        out = {position: value for position, value in vector.items() if value}
        for pivot in [position for position in out if position in self.rows]:
            factor = out.get(pivot)
            if not factor:
                continue
            for position, value in self.rows[pivot].items():
                updated = out.get(position, self.domain.zero) - factor * value
                if updated:
                    out[position] = updated
                else:
                    out.pop(position, None)
        return out

    def contains(self, vector: Vector) -> bool:
        return not self.reduce(vector)

    def insert(self, vector: Vector) -> Vector:
        """
        Add vector to the span.

        Returns:
            The new normalized row, or {} when vector was already in the span
        """
        remainder = self.reduce(vector)
        if not remainder:
            return {}
        pivot = min(remainder)
        scale = self.domain.one / remainder[pivot]
        row = {position: value * scale for position, value in remainder.items()}
        for other in self.rows.values():
            factor = other.get(pivot)
            if not factor:
                continue
            for position, value in row.items():
                updated = other.get(position, self.domain.zero) - factor * value
                if updated:
                    other[position] = updated
                else:
                    other.pop(position, None)
        self.rows[pivot] = row
        return row

    def extend(self, vectors: Iterable[Vector]) -> int:
        """Insert every vector; returns the resulting dimension."""
        for vector in vectors:
            self.insert(vector)
        return self.dimension


def rank(vectors: Iterable[Vector], ambient: int, domain) -> int:
    """Rank of sparse vectors by echelon insertion."""
    return Subspace(ambient, domain).extend(vectors)
