"""
Basis vectors of V^{(x)n} and sparse matrices acting on them.

V has basis v_i^r with lower index i and upper index r in 1..m, so
V^{(x)n} has dimension m^(2n). Matrices are stored by column: each column
maps row indices to nonzero coefficients.
"""

from dataclasses import dataclass
from itertools import product as _product
from typing import Dict, Iterable, Iterator, List, Tuple

from errors import DimensionMismatchError, IndexRangeError

Factor = Tuple[int, int]


@dataclass(frozen=True)
class TensorIndex:
    """v_{i_1}^{r_1} (x) ... (x) v_{i_n}^{r_n}."""
    lower: Tuple[int, ...]
    upper: Tuple[int, ...]

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise DimensionMismatchError(len(self.lower), len(self.upper), what='index length')

    @classmethod
    def from_factors(cls, factors: Iterable[Factor]) -> 'TensorIndex':
        factors = list(factors)
        return cls(tuple(i for i, _ in factors), tuple(r for _, r in factors))

    @property
    def n(self) -> int:
        return len(self.lower)

    @property
    def factors(self) -> Tuple[Factor, ...]:
        return tuple(zip(self.lower, self.upper))

    def validate(self, m: int) -> None:
        if any(not 1 <= value <= m for value in self.lower + self.upper):
            raise IndexRangeError(f"Tensor index {self} has entries outside 1..{m}")

    def swap(self, k: int) -> 'TensorIndex':
        """Exchange tensor factors k and k+1."""
        factors = list(self.factors)
        factors[k - 1], factors[k] = factors[k], factors[k - 1]
        return TensorIndex.from_factors(factors)

    def __str__(self) -> str:
        return ' '.join(f"v{i}^{r}" for i, r in self.factors)


def all_indices(n: int, m: int) -> Iterator[TensorIndex]:
    """Every basis vector, lexicographic in the factors."""
    for factors in _product(_product(range(1, m + 1), repeat=2), repeat=n):
        yield TensorIndex.from_factors(factors)


def dimension(n: int, m: int) -> int:
    return m ** (2 * n)


class SparseMatrix:
    """
    Column-keyed sparse matrix over a CoefficientRing.

    A matrix knows the columns it was built on; products and comparisons
    only use those columns, which lets rank checks run on a column sample.
    """

    __slots__ = ('ring', 'columns')

    def __init__(self, ring, columns: Dict[TensorIndex, Dict[TensorIndex, object]]):
        self.ring = ring
        self.columns = {col: {row: value for row, value in entries.items() if value}
                        for col, entries in columns.items()}

    @classmethod
    def identity(cls, ring, indices: Iterable[TensorIndex]) -> 'SparseMatrix':
        return cls(ring, {index: {index: ring.one} for index in indices})

    @classmethod
    def zero(cls, ring, indices: Iterable[TensorIndex]) -> 'SparseMatrix':
        return cls(ring, {index: {} for index in indices})

    def column(self, index: TensorIndex) -> Dict[TensorIndex, object]:
        return self.columns.get(index, {})

    def apply(self, vector: Dict[TensorIndex, object]) -> Dict[TensorIndex, object]:
        """Image of a sparse vector; every basis vector in it must be a stored column."""
        out: Dict[TensorIndex, object] = {}
        for index, coeff in vector.items():
            for row, value in self.columns[index].items():
                total = out.get(row, self.ring.zero) + coeff * value
                if total:
                    out[row] = total
                else:
                    out.pop(row, None)
        return out

    def __matmul__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        return SparseMatrix(self.ring, {col: self.apply(entries) for col, entries in other.columns.items()})

    def __add__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        columns = {}
        for col in set(self.columns) | set(other.columns):
            entries = dict(self.column(col))
            for row, value in other.column(col).items():
                entries[row] = entries.get(row, self.ring.zero) + value
            columns[col] = entries
        return SparseMatrix(self.ring, columns)

    def __sub__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        return self + other.scale(-self.ring.one)

    def scale(self, factor) -> 'SparseMatrix':
        return SparseMatrix(self.ring, {col: {row: value * factor for row, value in entries.items()}
                                        for col, entries in self.columns.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return all(not entries for entries in (self - other).columns.values())

    __hash__ = None

    def nonzero_count(self) -> int:
        return sum(len(entries) for entries in self.columns.values())

    def is_monomial(self) -> bool:
        """Exactly one nonzero entry per column."""
        return all(len(entries) == 1 for entries in self.columns.values())

    def is_diagonal(self) -> bool:
        return all(set(entries) <= {col} for col, entries in self.columns.items())

    def flatten(self) -> List[Tuple[Tuple[TensorIndex, TensorIndex], object]]:
        """(column, row) -> value entries, in column order."""
        return [((col, row), value) for col, entries in self.columns.items() for row, value in entries.items()]


def ordinal(index: TensorIndex, m: int) -> int:
    """Position of a basis vector in all_indices order."""
    value = 0
    for i, r in index.factors:
        value = value * m * m + (i - 1) * m + (r - 1)
    return value
