"""
Two-sided ideals of P_n(p, q) at specialized points and their quotients.

Ideals:

- FF: generated by F_1F_2
- I: generated by 4T_iT_jF_i - 2T_jF_i - F_i, |i - j| = 1 (Hecke-type quotient)
- J: generated by 4T_iT_jT_i - T_i, |i - j| = 1 (Temperley-Lieb-type quotient)

Closure multiplies every new echelon row by G_k and F_k on both sides until
no product escapes the span.
"""

from collections import deque
from dataclasses import dataclass
from math import factorial
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

from tqdm import tqdm

from combinatorics import catalan, party_monoid_order
from config import settings
from errors import BoundExceededError, IndexRangeError, IterationCapError
from hecke import AlgebraElement, GeneratorWord, HeckeEngine, basis_keys, get_engine
from observability import get_logger, metrics
from reports import CheckReport
from scalars import CoefficientRing, Specialization, random_specialization, two_point
from twisted import index_bindings

from .subspace import Subspace, Vector

logger = get_logger(__name__)

FF = 'FF'
I_IDEAL = 'I'
J_IDEAL = 'J'
IDEALS = (FF, I_IDEAL, J_IDEAL)

# (pattern, [(coefficient, word)])
IDEAL_SEEDS = {
    FF: ('first', [(1, 'F(1) F(2)')]),
    I_IDEAL: ('adjacent', [(4, 'T(i) T(j) F(i)'), (-2, 'T(j) F(i)'), (-1, 'F(i)')]),
    J_IDEAL: ('adjacent', [(4, 'T(i) T(j) T(i)'), (-1, 'T(i)')]),
}

IDEAL_BOUNDS = {FF: 5, I_IDEAL: 4, J_IDEAL: 4}

# Known quotient dimensions of P_n / <F_1F_2>
FF_QUOTIENT_DIMENSIONS = {3: 15, 4: 114, 5: 1170}


class BasisCoordinates:
    """Coordinates of AlgebraElements in the coprime-pair basis of one n."""

    def __init__(self, n: int):
        self.n = n
        self.keys = basis_keys(n)
        self.position = {key: offset for offset, key in enumerate(self.keys)}

    def __len__(self) -> int:
        return len(self.keys)

    def vector(self, x: AlgebraElement) -> Vector:
        return {self.position[key]: value for key, value in x.terms.items()}

    def element(self, vector: Vector, ring: CoefficientRing) -> AlgebraElement:
        return AlgebraElement(self.n, {self.keys[position]: value for position, value in vector.items()}, ring)


def words_element(engine: HeckeEngine, terms: Sequence, binding: Dict[str, int]) -> AlgebraElement:
    """Sum of coefficient * word over the engine's ring."""
    total = AlgebraElement.zero(engine.n, engine.ring)
    for coeff, text in terms:
        word = GeneratorWord.parse(text, engine.n, binding)
        total = total + engine.word_to_element(word).scale(engine.ring.from_int(coeff))
    return total


def ideal_seeds(ideal: str, engine: HeckeEngine) -> List[AlgebraElement]:
    """Generators of the ideal at n; empty when n is too small for them."""
    if ideal not in IDEAL_SEEDS:
        raise IndexRangeError(f"Unknown ideal: {ideal}", details={'known': list(IDEALS)})
    pattern, terms = IDEAL_SEEDS[ideal]
    if engine.n < 3:
        return []
    bindings = [{}] if pattern == 'first' else index_bindings(pattern, engine.n)
    return [words_element(engine, terms, binding) for binding in bindings]


def ideal_closure(seed: Union[AlgebraElement, Iterable[AlgebraElement]], spec: Optional[Specialization] = None,
                  cap: Optional[int] = None, progress: bool = False) -> Subspace:
    """
    Smallest two-sided ideal containing the seeds, as an echelon subspace.

    Args:
        seed: One element or several, over a specialized ring
        spec: Point to move symbolic seeds to (unused when seeds are already specialized)
        cap: Override for settings.quotients.iteration_cap
        progress: Show a tqdm bar

    Raises:
        IterationCapError: more generator products than cap
        BoundExceededError: n > 5
    """
    seeds = [seed] if isinstance(seed, AlgebraElement) else list(seed)
    cap = cap or settings.quotients.iteration_cap
    if not seeds:
        raise IndexRangeError("ideal_closure needs at least one seed element")
    n = seeds[0].n
    if n > 5:
        raise BoundExceededError('n', n, 5)

    ring = seeds[0].ring
    if ring.name != 'specialized':
        if spec is None:
            raise IndexRangeError("Symbolic seeds need a specialization point")
        ring = CoefficientRing.specialized(spec)
        seeds = [AlgebraElement(n, {key: ring.from_scalar(ring_value) for key, ring_value in
                                    _symbolic_terms(s).items()}, ring) for s in seeds]
    engine = get_engine(n, ring)
    coords = BasisCoordinates(n)
    space = Subspace(len(coords), ring.spec.domain)

    frontier = deque()
    for element in seeds:
        row = space.insert(coords.vector(element))
        if row:
            frontier.append(dict(row))

    products = 0
    with tqdm(total=len(coords), desc=f'ideal n={n}', disable=not progress) as bar:
        bar.update(space.dimension)
        while frontier:
            current = coords.element(frontier.popleft(), ring)
            for k in range(1, n):
                for letter in ('G', 'F'):
                    for image in (engine.apply_left(current, letter, k), engine.apply_right(current, letter, k)):
                        products += 1
                        if products > cap:
                            raise IterationCapError(
                                f"Ideal closure exceeded {cap} generator products",
                                details={'n': n, 'dimension': space.dimension}
                            )
                        row = space.insert(coords.vector(image))
                        if row:
                            frontier.append(dict(row))
                            bar.update(1)

    metrics.gauge('ideal_dimension', space.dimension, tags={'n': str(n)})
    logger.debug("Ideal closure complete", extra={'n': n, 'dimension': space.dimension, 'products': products})
    return space


def _symbolic_terms(element: AlgebraElement) -> Dict:
    ring = element.ring
    return {key: ring.to_symbolic(value) for key, value in element.terms.items()}


def ideal_at(ideal: str, n: int, spec: Specialization, progress: bool = False) -> Subspace:
    """The named ideal at one point; the zero subspace when it has no seeds at n."""
    engine = get_engine(n, CoefficientRing.specialized(spec))
    seeds = ideal_seeds(ideal, engine)
    if not seeds:
        return Subspace(len(basis_keys(n)), spec.domain)
    return ideal_closure(seeds, progress=progress)


def expected_quotient(ideal: str, n: int) -> Optional[int]:
    if ideal == FF:
        return FF_QUOTIENT_DIMENSIONS.get(n, party_monoid_order(n) if n < 3 else None)
    if n < 3:
        return None
    if ideal == I_IDEAL:
        return factorial(n)
    return catalan(n)


@dataclass
class QuotientReport:
    """Ideal and quotient dimension of P_n at two points."""
    n: int
    ideal: str
    points: List[Dict[str, Any]]
    ideal_dimensions: List[int]
    ambient: int
    agree: bool
    attempts: int
    expected: Optional[int] = None
    oracle: str = ''

    @property
    def ideal_dimension(self) -> int:
        return self.ideal_dimensions[0]

    @property
    def quotient_dimension(self) -> int:
        return self.ambient - self.ideal_dimension

    @property
    def passed(self) -> bool:
        return self.agree and (self.expected is None or self.quotient_dimension == self.expected)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'ideal': self.ideal,
            'points': self.points,
            'ideal_dimension': self.ideal_dimension,
            'ideal_dimensions': self.ideal_dimensions,
            'ambient': self.ambient,
            'quotient_dimension': self.quotient_dimension,
            'expected': self.expected,
            'oracle': self.oracle,
            'agree': self.agree,
            'attempts': self.attempts,
            'passed': self.passed,
        }


_ORACLES = {FF: 'known dimensions of P_n/<F_1F_2>', I_IDEAL: 'n! (Hecke algebra)', J_IDEAL: 'Catalan(n)'}


def quotient_dimension(ideal: str, n: int, seed: int = 0, progress: bool = False) -> QuotientReport:
    """
    Dimension of P_n / ideal at two independent prime-field points.

    Raises:
        BoundExceededError: n above the ideal's bound (5 for FF, 4 for I and J)
    """
    if ideal not in IDEALS:
        raise IndexRangeError(f"Unknown ideal: {ideal}", details={'known': list(IDEALS)})
    if n > IDEAL_BOUNDS[ideal]:
        raise BoundExceededError('n', n, IDEAL_BOUNDS[ideal])

    with metrics.timer('quotient_dimension', tags={'ideal': ideal, 'n': str(n)}):
        result = two_point(lambda spec: ideal_at(ideal, n, spec, progress).dimension, seed)
    report = QuotientReport(
        n=n,
        ideal=ideal,
        points=[point.to_dict() for point in result.points],
        ideal_dimensions=list(result.values),
        ambient=len(basis_keys(n)),
        agree=result.agree,
        attempts=result.attempts,
        expected=expected_quotient(ideal, n),
        oracle=_ORACLES[ideal],
    )
    if not report.agree:
        logger.warning("Quotient dimension disagrees between points", extra=report.to_dict())
    logger.info("Quotient dimension computed", extra={'ideal': ideal, 'n': n,
                                                      'quotient': report.quotient_dimension})
    return report


def _copy(space: Subspace) -> Subspace:
    clone = Subspace(space.ambient, space.domain)
    clone.rows = {pivot: dict(row) for pivot, row in space.rows.items()}
    return clone


def verify_quotient_consequences(which: str, n: int = 3, spec: Optional[Specialization] = None,
                                 seed: int = 0) -> CheckReport:
    """
    Consequences of the I and J quotients, checked by ideal membership.

    I: every F_k lies in the ideal; T_1^2 - T_1 lies in it while 1 and T_1
    stay independent modulo it (T_1 has a degree-2 minimal polynomial).
    J: F_1F_2, every F_k and 4T_1T_2T_1 - T_1 lie in the ideal.
    """
    if which not in (I_IDEAL, J_IDEAL):
        raise IndexRangeError(f"Consequences are defined for I and J, got {which}")
    if n < 3:
        raise IndexRangeError(f"Consequences need n >= 3, got {n}")
    if spec is None:
        spec = random_specialization(seed)
    ring = CoefficientRing.specialized(spec)
    engine = get_engine(n, ring)
    coords = BasisCoordinates(n)
    ideal = ideal_at(which, n, spec)

    def member(terms) -> bool:
        return ideal.contains(coords.vector(words_element(engine, terms, {})))

    report = CheckReport(f'consequences:{which}', metadata={'n': n, 'point': spec.to_dict(),
                                                            'ideal_dimension': ideal.dimension})
    for k in range(1, n):
        report.add(f'F_{k} in ideal', member([(1, f'F({k})')]))
    if which == I_IDEAL:
        report.add('T_1^2 - T_1 in ideal', member([(1, 'T(1) T(1)'), (-1, 'T(1)')]))
        extended = _copy(ideal)
        extended.insert(coords.vector(engine.one()))
        extended.insert(coords.vector(words_element(engine, [(1, 'T(1)')], {})))
        report.add('1, T_1 independent modulo ideal', extended.dimension == ideal.dimension + 2,
                   observed=extended.dimension - ideal.dimension, expected=2)
    else:
        report.add('F_1F_2 in ideal', member([(1, 'F(1) F(2)')]))
        report.add('4T_1T_2T_1 - T_1 in ideal', member([(4, 'T(1) T(2) T(1)'), (-1, 'T(1)')]))
    quotient = len(coords) - ideal.dimension
    report.add('quotient dimension', quotient == expected_quotient(which, n),
               observed=quotient, expected=expected_quotient(which, n))
    return report
