"""
The tensor representation of P_n(p, q) on V^{(x)n}, dim V = m^2.

F~_k and G~_k act on tensor factors (k, k+1). G~ swaps the two factors
v_i^r (x) v_j^s with a coefficient; F~ is diagonal. Two operator tables:

- consistent (default): for r != s the coefficient of G~ is pq (i > j),
  qa (i = j) or q (i < j) and F~ = 0; for r = s the coefficient is pq
  (i >= j) or q (i < j) and F~ = q^2 exactly when the two factors coincide
- flat: for r = s every G~ coefficient is pq and F~ = q^2

The flat table violates G~F~ = pqF~ and is kept only for comparison.
"""

import random
from typing import Dict, Iterable, List, Optional, Tuple

from tqdm import tqdm

from config import settings
from errors import BoundExceededError, IndexRangeError
from hecke import AlgebraElement, BasisKey, basis_keys, get_engine
from observability import get_logger, metrics
from quotients.subspace import Subspace
from reports import CheckReport
from scalars import CoefficientRing, Specialization, TwoPointResult, derive_seed, two_point
from twisted import index_bindings

from .space import SparseMatrix, TensorIndex, all_indices, dimension, ordinal

logger = get_logger(__name__)

CONSISTENT = 'consistent'
FLAT = 'flat'
TABLES = (CONSISTENT, FLAT)


def _table(table: Optional[str]) -> str:
    table = table or settings.tensor.operator_table
    if table not in TABLES:
        raise IndexRangeError(f"Unknown operator table: {table}", details={'known': list(TABLES)})
    return table


def g_coefficient(ring: CoefficientRing, left: Tuple[int, int], right: Tuple[int, int], table: str):
    """Coefficient of G~ on v_i^r (x) v_j^s."""
    (i, r), (j, s) = left, right
    pq = ring.p * ring.q
    if r == s and (table == FLAT or i >= j):
        return pq
    if r == s:
        return ring.q
    if i > j:
        return pq
    if i == j:
        return ring.q * ring.a
    return ring.q


def f_active(left: Tuple[int, int], right: Tuple[int, int], table: str) -> bool:
    """True when F~ acts by q^2 on v_i^r (x) v_j^s."""
    if table == FLAT:
        return left[1] == right[1]
    return left == right


def _check_index(k: int, n: int, m: int) -> None:
    if not 1 <= k < n:
        raise IndexRangeError(f"Operator index {k} is not defined for n={n}")
    if m < 1:
        raise IndexRangeError(f"m must be positive, got {m}")


def op_G(k: int, n: int, m: int, ring: Optional[CoefficientRing] = None, table: Optional[str] = None) -> SparseMatrix:
    """G~_k on V^{(x)n}."""
    _check_index(k, n, m)
    ring = ring or CoefficientRing.symbolic()
    table = _table(table)
    columns = {}
    for index in all_indices(n, m):
        factors = index.factors
        columns[index] = {index.swap(k): g_coefficient(ring, factors[k - 1], factors[k], table)}
    return SparseMatrix(ring, columns)


def op_F(k: int, n: int, m: int, ring: Optional[CoefficientRing] = None, table: Optional[str] = None) -> SparseMatrix:
    """F~_k on V^{(x)n}."""
    _check_index(k, n, m)
    ring = ring or CoefficientRing.symbolic()
    table = _table(table)
    q2 = ring.q * ring.q
    columns = {}
    for index in all_indices(n, m):
        factors = index.factors
        columns[index] = {index: q2} if f_active(factors[k - 1], factors[k], table) else {}
    return SparseMatrix(ring, columns)


class TensorAction:
    """
    Images of basis vectors under psi(F_M G_u), computed one column at a time.

    psi(F_M G_u) maps each basis vector to a multiple of one basis vector.
    """

    def __init__(self, n: int, m: int, ring: CoefficientRing, table: Optional[str] = None):
        self.n = n
        self.m = m
        self.ring = ring
        self.table = _table(table)
        self.q2 = ring.q * ring.q
        self._words: Dict = {}

    def _reduced_word(self, perm):
        word = self._words.get(perm)
        if word is None:
            word = perm.reduced_word()
            self._words[perm] = word
        return word

    def apply_basis(self, key: BasisKey, index: TensorIndex) -> Tuple[object, TensorIndex]:
        """(coefficient, image) of psi(F_M G_u) v; the coefficient may be zero."""
        partition, perm = key
        coeff = self.ring.one
        current = index
        for k in reversed(self._reduced_word(perm)):
            factors = current.factors
            coeff = coeff * g_coefficient(self.ring, factors[k - 1], factors[k], self.table)
            current = current.swap(k)
        factors = current.factors
        for arc in sorted(partition.standard_arcs()):
            if not f_active(factors[arc.lo - 1], factors[arc.hi - 1], self.table):
                return self.ring.zero, current
            coeff = coeff * self.q2
        return coeff, current

    def column(self, x: AlgebraElement, index: TensorIndex) -> Dict[TensorIndex, object]:
        out: Dict[TensorIndex, object] = {}
        for key, value in x.terms.items():
            coeff, image = self.apply_basis(key, index)
            if not coeff:
                continue
            total = out.get(image, self.ring.zero) + value * coeff
            if total:
                out[image] = total
            else:
                out.pop(image, None)
        return out


def represent(x: AlgebraElement, m: int, table: Optional[str] = None,
              columns: Optional[Iterable[TensorIndex]] = None) -> SparseMatrix:
    """
    psi(x) as a sparse matrix over x's ring.

    Args:
        x: Element in the coprime-pair basis
        m: Upper/lower index range
        table: Operator table
        columns: Restrict to these basis vectors (all of them by default)
    """
    action = TensorAction(x.n, m, x.ring, table)
    indices = list(columns) if columns is not None else list(all_indices(x.n, m))
    metrics.increment('tensor_represent')
    return SparseMatrix(x.ring, {index: action.column(x, index) for index in indices})


def _word_matrix(letters: str, binding: Dict[str, int], mats: Dict[Tuple[str, int], SparseMatrix],
                 identity: SparseMatrix) -> SparseMatrix:
    result = identity
    for token in letters.split():
        result = result @ mats[(token[0], binding[token[1]])]
    return result


# (name, pattern, lhs word, rhs terms [(coefficient name, word)])
_MATRIX_RELATIONS = [
    ('G^2 = pq^2 + p(p-1)F', 'single', 'Gi Gi', [('pq2', ''), ('pp1', 'Fi')]),
    ('GF = pqF', 'single', 'Gi Fi', [('pq', 'Fi')]),
    ('FG = pqF', 'single', 'Fi Gi', [('pq', 'Fi')]),
    ('F^2 = q^2F', 'single', 'Fi Fi', [('q2', 'Fi')]),
    ('G_iG_jG_i = G_jG_iG_j', 'adjacent', 'Gi Gj Gi', [('one', 'Gj Gi Gj')]),
    ('G_iG_j = G_jG_i', 'far', 'Gi Gj', [('one', 'Gj Gi')]),
    ('F_iF_j = F_jF_i', 'adjacent', 'Fi Fj', [('one', 'Fj Fi')]),
    ('F_iF_j = F_jF_i (far)', 'far', 'Fi Fj', [('one', 'Fj Fi')]),
    ('G_iG_jF_i = F_jG_iG_j', 'adjacent', 'Gi Gj Fi', [('one', 'Fj Gi Gj')]),
    ('F_iG_jG_i = G_jG_iF_j', 'adjacent', 'Fi Gj Gi', [('one', 'Gj Gi Fj')]),
    ('G_iF_j = F_jG_i', 'far', 'Gi Fj', [('one', 'Fj Gi')]),
]


def verify_matrix_relations(n: int = 3, m: int = 2, table: Optional[str] = None,
                            ring: Optional[CoefficientRing] = None) -> CheckReport:
    """
    Defining relations of P_n(p, q) as exact matrix identities.

    Raises:
        BoundExceededError: m^(2n) above settings.tensor.column_sample
    """
    table = _table(table)
    ring = ring or CoefficientRing.symbolic()
    size = dimension(n, m)
    if size > settings.tensor.column_sample:
        raise BoundExceededError('tensor dimension', size, settings.tensor.column_sample)

    mats = {}
    for k in range(1, n):
        mats[('G', k)] = op_G(k, n, m, ring, table)
        mats[('F', k)] = op_F(k, n, m, ring, table)
    identity = SparseMatrix.identity(ring, all_indices(n, m))
    scalars = {
        'one': ring.one,
        'pq': ring.p * ring.q,
        'pq2': ring.p * ring.q * ring.q,
        'pp1': ring.p * (ring.p - ring.one),
        'q2': ring.q * ring.q,
    }

    report = CheckReport('tensor:relations', metadata={'n': n, 'm': m, 'table': table, 'dimension': size})
    for k in range(1, n):
        report.add(f'G~_{k} monomial', mats[('G', k)].is_monomial())
        report.add(f'F~_{k} diagonal', mats[('F', k)].is_diagonal())

    for name, pattern, lhs, rhs in _MATRIX_RELATIONS:
        for binding in index_bindings(pattern, n):
            left = _word_matrix(lhs, binding, mats, identity)
            right = SparseMatrix.zero(ring, identity.columns)
            for coeff_name, word in rhs:
                right = right + _word_matrix(word, binding, mats, identity).scale(scalars[coeff_name])
            label = name + ' [' + ','.join(f"{k}={v}" for k, v in sorted(binding.items())) + ']'
            report.add(label, left == right)

    logger.info("Matrix relations verified", extra={'n': n, 'm': m, 'table': table,
                                                    'failed': len(report.failures)})
    return report


def column_sample(n: int, m: int, seed: int = 0, limit: Optional[int] = None) -> List[TensorIndex]:
    """All basis vectors, or a seeded sample of limit of them when the space is larger."""
    limit = limit or settings.tensor.column_sample
    size = dimension(n, m)
    if size <= limit:
        return list(all_indices(n, m))
    rng = random.Random(seed)
    chosen = set()
    while len(chosen) < limit:
        factors = [(rng.randint(1, m), rng.randint(1, m)) for _ in range(n)]
        chosen.add(TensorIndex.from_factors(factors))
    return sorted(chosen, key=lambda index: index.factors)


def faithfulness_rank(n: int, m: int, spec: Specialization, table: Optional[str] = None,
                      seed: int = 0, progress: bool = False) -> int:
    """
    Rank over the specialized field of the flattened psi(F_M G_u), one row per coprime pair.

    Columns are sampled when m^(2n) exceeds settings.tensor.column_sample;
    the sampled rank is a lower bound.

    Raises:
        BoundExceededError: n > m^2 (psi need not be faithful)
    """
    if n > m * m:
        raise BoundExceededError('n', n, m * m)
    ring = CoefficientRing.specialized(spec)
    action = TensorAction(n, m, ring, table)
    indices = column_sample(n, m, derive_seed(seed, n, m))
    position = {index: offset for offset, index in enumerate(indices)}
    size = len(indices)
    keys = basis_keys(n)

    space = Subspace(size * dimension(n, m), spec.domain)
    for key in tqdm(keys, desc=f'rank n={n} m={m}', disable=not progress):
        row = {}
        for index in indices:
            coeff, image = action.apply_basis(key, index)
            if coeff:
                row[position[index] * dimension(n, m) + ordinal(image, m)] = coeff
        space.insert(row)

    metrics.gauge('faithfulness_rank', space.dimension, tags={'n': str(n), 'm': str(m)})
    logger.info("Faithfulness rank computed", extra={'n': n, 'm': m, 'rank': space.dimension,
                                                    'expected': len(keys), 'columns': size})
    return space.dimension


def multiplicativity_check(n: int, m: int, spec: Specialization, samples: int, seed: int = 0,
                           table: Optional[str] = None) -> CheckReport:
    """psi(xy) = psi(x) psi(y) on random basis pairs at one specialization."""
    ring = CoefficientRing.specialized(spec)
    engine = get_engine(n, ring)
    rng = random.Random(seed)
    keys = basis_keys(n)
    identity_columns = list(all_indices(n, m))
    report = CheckReport('tensor:multiplicative', metadata={'n': n, 'm': m, 'point': spec.to_dict(),
                                                             'samples': samples})
    failures = 0
    for _ in range(samples):
        x = AlgebraElement.basis(rng.choice(keys), ring)
        y = AlgebraElement.basis(rng.choice(keys), ring)
        product = represent(engine.multiply(x, y), m, table, identity_columns)
        composed = represent(x, m, table, identity_columns) @ represent(y, m, table, identity_columns)
        if product != composed:
            failures += 1
    report.add('psi(xy) = psi(x)psi(y)', failures == 0, observed=failures, expected=0)
    return report


def pair_matrix(key: BasisKey, m: int, ring: CoefficientRing, table: Optional[str] = None) -> SparseMatrix:
    """psi(F_M G_u) for one coprime pair."""
    return represent(AlgebraElement.basis(key, ring), m, table)


def certified_rank(n: int, m: int, seed: int, table: Optional[str] = None,
                   progress: bool = False) -> TwoPointResult:
    """faithfulness_rank at two independent prime-field points."""
    return two_point(lambda spec: faithfulness_rank(n, m, spec, table, seed, progress), seed)
