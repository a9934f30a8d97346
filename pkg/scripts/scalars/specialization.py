"""
Specialization of scalars at points (a, q) of Q or of a prime field.

Random points are drawn from a seeded generator so a seed fully determines
every point of a run. Resampling after a vanishing denominator is done with
tenacity.
"""

import random
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Any, Callable, Dict, List, Optional, TypeVar, Union

from sympy import nextprime
from sympy.polys.domains import GF, QQ
from tenacity import Retrying, retry_if_exception_type, retry_if_result, stop_after_attempt

from config import settings
from errors import ResampleExhaustedError, VanishingDenominatorError
from observability import get_logger, metrics

from .field import Scalar, scalar, format_scalar

logger = get_logger(__name__)

T = TypeVar('T')

RATIONAL = 'rational'
PRIME = 'prime'


@dataclass(frozen=True)
class Specialization:
    """
    A point (a, q) in Q or in GF(modulus).

    Args:
        target: 'rational' or 'prime'
        value_a: Value of a (Fraction for rational targets, int for prime targets)
        value_q: Value of q
        modulus: Prime modulus when target is 'prime'
    """
    target: str
    value_a: Union[Fraction, int]
    value_q: Union[Fraction, int]
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.target not in (RATIONAL, PRIME):
            raise ValueError(f"Unknown specialization target: {self.target}")
        if self.target == PRIME and not self.modulus:
            raise ValueError("Prime specialization needs a modulus")
        if self.a == self.domain.zero or self.q == self.domain.zero:
            raise ValueError("Both parameters must be invertible")

    @classmethod
    def rational(cls, value_a, value_q) -> 'Specialization':
        return cls(RATIONAL, Fraction(value_a), Fraction(value_q))

    @classmethod
    def prime(cls, value_a: int, value_q: int, modulus: int) -> 'Specialization':
        return cls(PRIME, value_a % modulus, value_q % modulus, modulus)

    @property
    def domain(self):
        """sympy domain the point lives in."""
        if self.target == RATIONAL:
            return QQ
        return _prime_field(self.modulus)

    def convert(self, value) -> Any:
        if isinstance(value, Fraction):
            return self.domain.convert(value.numerator) / self.domain.convert(value.denominator)
        return self.domain.convert(value)

    @property
    def a(self):
        return self.convert(self.value_a)

    @property
    def q(self):
        return self.convert(self.value_q)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'target': self.target,
            'a': str(self.value_a),
            'q': str(self.value_q),
            'modulus': self.modulus,
        }


@lru_cache(maxsize=None)
def _prime_field(modulus: int):
    return GF(modulus)


def _evaluate(poly, spec: Specialization):
    dom = spec.domain
    va, vq = spec.a, spec.q
    total = dom.zero
    for (i, j), coeff in poly.terms():
        total += dom.convert(int(coeff)) * va ** i * vq ** j
    return total


def specialize(x: Scalar, spec: Specialization):
    """
    Ring-homomorphism image of a scalar at a point.

    Raises:
        VanishingDenominatorError: the denominator of x vanishes at spec
    """
    x = scalar(x)
    denom = _evaluate(x.denom, spec)
    if denom == spec.domain.zero:
        raise VanishingDenominatorError(
            "Denominator vanishes at specialization",
            details={'scalar': format_scalar(x), 'point': spec.to_dict()}
        )
    return _evaluate(x.numer, spec) / denom


def derive_seed(seed: int, *parts: int) -> int:
    """Deterministic sub-seed for attempt/point numbering."""
    value = seed
    for part in parts:
        value = (value * 1000003 + part) % (2 ** 64)
    return value


def random_specialization(seed: int, target: str = PRIME) -> Specialization:
    """
    Draw a specialization point from a seed.

    Parameters avoid the configured excluded values (0 and ±1 by default).
    Prime moduli lie above settings.specialization.prime_min.
    """
    rng = random.Random(seed)
    excluded = set(settings.specialization.excluded_values)

    if target == PRIME:
        floor = settings.specialization.prime_min
        modulus = int(nextprime(rng.randrange(floor, 2 * floor)))
        forbidden = {v % modulus for v in excluded}

        def draw() -> int:
            while True:
                value = rng.randrange(2, modulus - 1)
                if value not in forbidden:
                    return value
        return Specialization.prime(draw(), draw(), modulus)

    height = settings.specialization.rational_height

    def draw_rational() -> Fraction:
        while True:
            value = Fraction(rng.randint(-height, height), rng.randint(1, height))
            if value not in excluded:
                return value
    return Specialization.rational(draw_rational(), draw_rational())


def with_resampling(compute: Callable[[Specialization], T], seed: int, target: str = PRIME,
                    attempts: Optional[int] = None) -> T:
    """
    Run compute at a random point, resampling when a denominator vanishes.

    Args:
        compute: Function of a Specialization
        seed: Base seed; attempt k uses derive_seed(seed, k)
        target: 'prime' or 'rational'
        attempts: Override for settings.specialization.resample_attempts

    Raises:
        ResampleExhaustedError: every attempt hit a vanishing denominator
    """
    attempts = attempts or settings.specialization.resample_attempts
    retryer = Retrying(
        stop=stop_after_attempt(attempts),
        retry=retry_if_exception_type(VanishingDenominatorError),
        reraise=True,
    )
    try:
        for attempt in retryer:
            with attempt:
                number = attempt.retry_state.attempt_number
                spec = random_specialization(derive_seed(seed, number), target)
                if number > 1:
                    metrics.increment('specialization_resamples', tags={'target': target})
                    logger.info("Resampling specialization", extra={'seed': seed, 'attempt': number})
                return compute(spec)
    except VanishingDenominatorError as exc:
        raise ResampleExhaustedError(
            f"No usable specialization after {attempts} attempts",
            details={'seed': seed, 'target': target, 'last_error': exc.message}
        ) from exc


@dataclass
class TwoPointResult:
    """Values of one computation at two independent points."""
    values: List[Any]
    points: List[Specialization]
    attempts: int

    @property
    def agree(self) -> bool:
        return len(set(self.values)) == 1

    @property
    def value(self) -> Any:
        return self.values[0]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'values': self.values,
            'points': [point.to_dict() for point in self.points],
            'agree': self.agree,
            'attempts': self.attempts,
        }


def two_point(compute: Callable[[Specialization], T], seed: int, target: str = PRIME,
              attempts: Optional[int] = None) -> TwoPointResult:
    """
    Evaluate compute at two independently seeded points.

    Disagreement draws a fresh pair of points, up to the configured number of
    attempts; the last pair is returned either way, so callers can report a
    persistent disagreement.
    """
    attempts = attempts or settings.specialization.resample_attempts
    counter = count(1)

    def run_pair() -> TwoPointResult:
        number = next(counter)
        values, points = [], []
        for index in (1, 2):
            used = {}

            def tracked(spec: Specialization):
                used['point'] = spec
                return compute(spec)
            values.append(with_resampling(tracked, derive_seed(seed, number, index), target))
            points.append(used['point'])
        if number > 1:
            logger.warning("Two-point disagreement, resampled", extra={'seed': seed, 'attempt': number})
        return TwoPointResult(values, points, number)

    retryer = Retrying(
        stop=stop_after_attempt(attempts),
        retry=retry_if_result(lambda result: not result.agree),
        retry_error_callback=lambda state: state.outcome.result(),
    )
    result = retryer(run_pair)
    metrics.increment('two_point_runs', tags={'agree': str(result.agree).lower()})
    return result
