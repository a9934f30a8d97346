"""
Rewriting engine of the Party-Hecke algebra P_n(p, q).

Every product is computed by acting on coprime pairs with generators:

- right by G_k: ascent steps append s_k (stripping a same-block inversion
  costs pq), descent steps use G_k^2 = pq^2 + p(p-1) F_k
- right by F_{a,b}: move the tie through G_u, then F_M F_f = q^(2 gamma) F_{M v f}
- express(M, u): F_M G_u for any pair, by acting on (M, id) along the
  reduced word of u

Results are memoized per engine; engines are shared per (n, ring).
"""

from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from tqdm import tqdm

from combinatorics import Permutation, SetPartition, act, enumerate_partitions, enumerate_permutations, join
from config import settings
from errors import BoundExceededError, DimensionMismatchError, IndexRangeError
from observability import get_logger, metrics
from scalars import CoefficientRing

from .element import AlgebraElement, BasisKey, accumulate
from .words import GeneratorWord, Letter

logger = get_logger(__name__)

Terms = Dict[BasisKey, object]


def coprime(partition: SetPartition, perm: Permutation) -> bool:
    """No two points of a block appear in reversed order in perm."""
    positions = perm.positions
    return all(positions[block[x] - 1] < positions[block[x + 1] - 1]
               for block in partition.blocks for x in range(len(block) - 1))


@lru_cache(maxsize=8)
def basis_keys(n: int) -> Tuple[BasisKey, ...]:
    """All coprime pairs for n, partitions in generation order then permutations."""
    perms = list(enumerate_permutations(n))
    return tuple((partition, perm) for partition in enumerate_partitions(n, bound=n)
                 for perm in perms if coprime(partition, perm))


class HeckeEngine:
    """
    Memoizing product engine for one degree and one coefficient ring.

    Args:
        n: Degree
        ring: Coefficient ring (symbolic by default)
    """

    def __init__(self, n: int, ring: Optional[CoefficientRing] = None):
        if n < 1:
            raise IndexRangeError(f"Degree must be positive, got {n}")
        self.n = n
        self.ring = ring or CoefficientRing.symbolic()
        r = self.ring
        self.pq = r.p * r.q
        self.pq2 = r.p * r.q * r.q
        self.pp1 = r.p * (r.p - r.one)
        self.q2 = r.q * r.q
        self.identity_perm = Permutation.identity(n)
        self.identity_partition = SetPartition.identity(n)
        self._express: Dict[BasisKey, Terms] = {}
        self._products: Dict[Tuple[BasisKey, BasisKey], Terms] = {}
        self._left: Dict[Tuple[str, int, BasisKey], Terms] = {}

    def __repr__(self) -> str:
        return f"HeckeEngine(n={self.n}, ring={self.ring.describe()})"

    # -- elementary actions -------------------------------------------------

    def _tie_factor(self, partition: SetPartition, x: int, y: int):
        """q^(2 gamma(M, f_xy)): q^2 when x and y already share a block."""
        return self.q2 if partition.same_block(x, y) else self.ring.one

    def combine(self, terms: Mapping[BasisKey, object], action) -> Terms:
        out: Terms = {}
        for key, coeff in terms.items():
            for image, value in action(key).items():
                accumulate(out, image, coeff * value)
        return out

    def express(self, partition: SetPartition, perm: Permutation) -> Terms:
        """F_M G_u in the coprime-pair basis."""
        key = (partition, perm)
        if coprime(partition, perm):
            return {key: self.ring.one}
        cached = self._express.get(key)
        if cached is not None:
            metrics.increment('hecke_cache_hits', tags={'table': 'express'})
            return cached
        terms: Terms = {(partition, self.identity_perm): self.ring.one}
        for k in perm.reduced_word():
            terms = self.combine(terms, lambda basis, k=k: self.right_G(basis, k))
        self._express[key] = terms
        return terms

    def right_G(self, key: BasisKey, k: int) -> Terms:
        """(F_M G_v) G_k for a coprime pair (M, v)."""
        partition, perm = key
        low, high = perm(k), perm(k + 1)
        if low < high:
            if partition.same_block(low, high):
                return {key: self.pq}
            return {(partition, perm.right_simple(k)): self.ring.one}
        shorter = perm.right_simple(k)
        low, high = shorter(k), shorter(k + 1)
        out: Terms = {(partition, shorter): self.pq2}
        tie = self.pp1 * self._tie_factor(partition, low, high)
        merged = join(partition, SetPartition.pair(low, high, self.n))
        for image, value in self.express(merged, shorter).items():
            accumulate(out, image, tie * value)
        return out

    def right_F(self, key: BasisKey, i: int, j: int) -> Terms:
        """(F_M G_v) F_{i,j}: the tie moves through G_v to f_{v(i),v(j)}."""
        partition, perm = key
        x, y = perm(i), perm(j)
        factor = self._tie_factor(partition, x, y)
        merged = join(partition, SetPartition.pair(x, y, self.n))
        return {image: factor * value for image, value in self.express(merged, perm).items()}

    def left_G(self, key: BasisKey, k: int) -> Terms:
        """G_k (F_M G_u) = F_{s_k M} G_k G_u."""
        cache_key = ('G', k, key)
        cached = self._left.get(cache_key)
        if cached is not None:
            return cached
        partition, perm = key
        moved = act(Permutation.simple(k, self.n), partition)
        if not perm.left_descent(k):
            out = dict(self.express(moved, perm.left_simple(k)))
        else:
            shorter = perm.left_simple(k)
            out = {image: self.pq2 * value for image, value in self.express(moved, shorter).items()}
            tie = self.pp1 * self._tie_factor(moved, k, k + 1)
            merged = join(moved, SetPartition.pair(k, k + 1, self.n))
            for image, value in self.express(merged, shorter).items():
                accumulate(out, image, tie * value)
        self._left[cache_key] = out
        return out

    def left_F(self, key: BasisKey, i: int, j: int) -> Terms:
        """F_{i,j} (F_M G_u) = q^(2 gamma) F_{M v f_ij} G_u."""
        partition, perm = key
        factor = self._tie_factor(partition, i, j)
        merged = join(partition, SetPartition.pair(i, j, self.n))
        return {image: factor * value for image, value in self.express(merged, perm).items()}

    # -- products ------------------------------------------------------------

    def multiply_basis(self, left: BasisKey, right: BasisKey) -> Terms:
        """(F_I G_v)(F_J G_w): tie by the standard arcs of J, then G along w's reduced word."""
        cache_key = (left, right)
        cached = self._products.get(cache_key)
        if cached is not None:
            metrics.increment('hecke_cache_hits', tags={'table': 'products'})
            return cached
        partition, perm = right
        terms: Terms = {left: self.ring.one}
        for arc in sorted(partition.standard_arcs()):
            terms = self.combine(terms, lambda basis, arc=arc: self.right_F(basis, arc.lo, arc.hi))
        for k in perm.reduced_word():
            terms = self.combine(terms, lambda basis, k=k: self.right_G(basis, k))
        self._products[cache_key] = terms
        metrics.increment('hecke_basis_products')
        return terms

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        """
        Bilinear product.

        Raises:
            DimensionMismatchError: x, y or the engine differ in n
        """
        for element in (x, y):
            if element.n != self.n:
                raise DimensionMismatchError(self.n, element.n)
        out: Terms = {}
        for left, c in x.terms.items():
            for right, d in y.terms.items():
                for image, value in self.multiply_basis(left, right).items():
                    accumulate(out, image, c * d * value)
        return AlgebraElement(self.n, out, self.ring)

    def apply_right(self, x: AlgebraElement, letter: str, k: int) -> AlgebraElement:
        """x * G_k or x * F_k by direct action."""
        if letter == 'G':
            terms = self.combine(x.terms, lambda key: self.right_G(key, k))
        else:
            terms = self.combine(x.terms, lambda key: self.right_F(key, k, k + 1))
        return AlgebraElement(self.n, terms, self.ring)

    def apply_left(self, x: AlgebraElement, letter: str, k: int) -> AlgebraElement:
        """G_k * x or F_k * x by direct action."""
        if letter == 'G':
            terms = self.combine(x.terms, lambda key: self.left_G(key, k))
        else:
            terms = self.combine(x.terms, lambda key: self.left_F(key, k, k + 1))
        return AlgebraElement(self.n, terms, self.ring)

    def structure_table(self, progress: bool = False) -> Dict[Tuple[BasisKey, BasisKey], Terms]:
        """
        Every basis product, precomputed.

        Raises:
            BoundExceededError: n above settings.quotients.structure_table_max_n
        """
        bound = settings.quotients.structure_table_max_n
        if self.n > bound:
            raise BoundExceededError('n', self.n, bound)
        keys = basis_keys(self.n)
        for left in tqdm(keys, desc=f'structure table n={self.n}', disable=not progress):
            for right in keys:
                self.multiply_basis(left, right)
        logger.info("Structure table complete", extra={'n': self.n, 'entries': len(self._products)})
        return self._products

    # -- generators ------------------------------------------------------------

    def one(self) -> AlgebraElement:
        return AlgebraElement.one(self.n, self.ring)

    def _basis(self, partition: SetPartition, perm: Permutation, coeff=None) -> AlgebraElement:
        return AlgebraElement.basis((partition, perm), self.ring, coeff)

    def gen_element(self, letter: Letter, virtual: Optional[Tuple[object, object]] = None) -> AlgebraElement:
        """
        Image of one generator letter.

        Args:
            letter: Letter of a GeneratorWord
            virtual: (alpha, beta) ring elements for V = alpha H + beta F

        Raises:
            IndexRangeError: index out of range
            ScalarDivisionError: the letter needs an inverse the ring lacks
        """
        letter.validate(self.n)
        r = self.ring
        name = letter.name
        if len(letter.indices) == 2:
            i, j = letter.indices
            if name == 'F':
                return self._basis(SetPartition.pair(i, j, self.n), self.identity_perm)
            return self._dual_G(i, j)
        i = letter.indices[0]
        if name == 'G':
            return self._basis(self.identity_partition, Permutation.simple(i, self.n))
        if name == 'F':
            return self._basis(SetPartition.pair(i, i + 1, self.n), self.identity_perm)
        g = self.gen_element(Letter('G', (i,)))
        f = self.gen_element(Letter('F', (i,)))
        inv_q2 = r.inverse(self.q2)
        if name == 'Ginv':
            return g.scale(r.inverse(self.pq2)) + f.scale(r.inverse(self.q2 * r.q) * (r.inverse(r.p) - r.one))
        h = g.scale(r.inverse(r.q * r.a))
        if name == 'H':
            return h
        if name == 'Hinv':
            return h - f.scale(inv_q2 * (r.a - r.inverse(r.a)))
        if name == 'T':
            half = r.inverse(r.from_int(2))
            return (h + f.scale(inv_q2 * (r.one - r.a)) + self.one()).scale(half)
        if name == 'E':
            return f.scale(inv_q2)
        if name == 'V':
            if virtual is None:
                raise IndexRangeError("V needs (alpha, beta) parameters")
            alpha, beta = virtual
            return h.scale(alpha) + f.scale(beta)
        raise IndexRangeError(f"Unknown letter {name}")

    def _dual_G(self, i: int, j: int) -> AlgebraElement:
        """G_{i,j} = G_i ... G_{j-2} G_{j-1} G_{j-2}^-1 ... G_i^-1."""
        letters = [Letter('G', (k,)) for k in range(i, j)]
        letters += [Letter('Ginv', (k,)) for k in range(j - 2, i - 1, -1)]
        return self.word_to_element(GeneratorWord(self.n, tuple(letters)))

    def word_to_element(self, word: GeneratorWord, virtual: Optional[Tuple[object, object]] = None) -> AlgebraElement:
        """Left-to-right product of the letters' images; the empty word is 1."""
        if word.n != self.n:
            raise DimensionMismatchError(self.n, word.n)
        result = self.one()
        for letter in word.letters:
            if letter.name in ('G', 'F') and len(letter.indices) == 1:
                result = self.apply_right(result, letter.name, letter.indices[0])
            else:
                result = self.multiply(result, self.gen_element(letter, virtual))
        return result

    def coprime_reduce(self, partition: SetPartition, perm: Permutation, coeff=None) -> AlgebraElement:
        """c F_M G_u for an arbitrary pair, expanded in the coprime-pair basis."""
        coeff = self.ring.one if coeff is None else coeff
        terms = {key: coeff * value for key, value in self.express(partition, perm).items()}
        return AlgebraElement(self.n, terms, self.ring)


_ENGINES: Dict[Tuple, HeckeEngine] = {}


def get_engine(n: int, ring: Optional[CoefficientRing] = None) -> HeckeEngine:
    """Shared engine per (n, ring), so memo tables survive across calls."""
    ring = ring or CoefficientRing.symbolic()
    cache_key = (n, ring.name, ring.spec)
    engine = _ENGINES.get(cache_key)
    if engine is None:
        engine = HeckeEngine(n, ring)
        _ENGINES[cache_key] = engine
    return engine


def gen_element(letter: Letter, n: int, ring: Optional[CoefficientRing] = None,
                virtual: Optional[Tuple[object, object]] = None) -> AlgebraElement:
    return get_engine(n, ring).gen_element(letter, virtual)


def mul_basis_by_G(key: BasisKey, k: int, ring: Optional[CoefficientRing] = None) -> AlgebraElement:
    """Right product of a coprime pair by G_k."""
    engine = get_engine(key[1].n, ring)
    if not 1 <= k < engine.n:
        raise IndexRangeError(f"G_{k} is not defined for n={engine.n}")
    return AlgebraElement(engine.n, engine.right_G(key, k), engine.ring)


def mul_basis_by_F(key: BasisKey, k, ring: Optional[CoefficientRing] = None) -> AlgebraElement:
    """Right product of a coprime pair by F_k (k an index) or F_{i,j} (k a pair)."""
    engine = get_engine(key[1].n, ring)
    i, j = (k, k + 1) if isinstance(k, int) else tuple(k)
    if not 1 <= i < j <= engine.n:
        raise IndexRangeError(f"F_{{{i},{j}}} is not defined for n={engine.n}")
    return AlgebraElement(engine.n, engine.right_F(key, i, j), engine.ring)


def coprime_reduce(partition: SetPartition, perm: Permutation, coeff=None,
                   ring: Optional[CoefficientRing] = None) -> AlgebraElement:
    engine = get_engine(perm.n, ring)
    if coeff is not None and engine.ring.name == 'symbolic':
        coeff = engine.ring.from_scalar(coeff)
    return engine.coprime_reduce(partition, perm, coeff)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.n != y.n:
        raise DimensionMismatchError(x.n, y.n)
    return get_engine(x.n, x.ring).multiply(x, y)


def word_to_element(word: GeneratorWord, ring: Optional[CoefficientRing] = None,
                    virtual: Optional[Tuple[object, object]] = None) -> AlgebraElement:
    return get_engine(word.n, ring).word_to_element(word, virtual)


def expand_random_word(engine: HeckeEngine, partition: SetPartition, perm: Permutation,
                       word: Iterable[int]) -> Terms:
    """F_M G_u computed along a caller-supplied reduced word of u (confluence checks)."""
    terms: Terms = {(partition, engine.identity_perm): engine.ring.one}
    for k in word:
        terms = engine.combine(terms, lambda basis, k=k: engine.right_G(basis, k))
    return terms


def random_reduced_word(perm: Permutation, rng) -> List[int]:
    """A reduced word of perm chosen by stripping a random left descent each step."""
    word = []
    current = perm
    while not current.is_identity():
        k = rng.choice([k for k in range(1, perm.n) if current.left_descent(k)])
        word.append(k)
        current = current.left_simple(k)
    return word
