"""
Property checks of the rewriting engine.

Associativity and confluence run over the polynomial ring Z[a, q], where
equality is exact and no division happens. Degeneration compares the
product at a = q = 1 with the party monoid.
"""

import random
from itertools import product as _product
from typing import Optional

from tqdm import tqdm

from combinatorics import Permutation, SetPartition
from observability import get_logger
from party import PartyElement, party_multiply
from reports import CheckReport
from scalars import CoefficientRing, Specialization, random_specialization, specialize

from .element import AlgebraElement, format_key
from .engine import basis_keys, expand_random_word, get_engine, random_reduced_word

logger = get_logger(__name__)

_FAILURE_SAMPLES = 10


def associativity_check(n: int, samples: int = 0, seed: int = 0, progress: bool = False) -> CheckReport:
    """
    (xy)z = x(yz) on basis triples.

    Exhaustive when samples is 0, otherwise that many seeded random triples.
    """
    engine = get_engine(n, CoefficientRing.polynomial())
    keys = basis_keys(n)
    if samples:
        rng = random.Random(seed)
        triples = [(rng.choice(keys), rng.choice(keys), rng.choice(keys)) for _ in range(samples)]
        total = samples
    else:
        triples = _product(keys, repeat=3)
        total = len(keys) ** 3

    report = CheckReport('associativity', metadata={'n': n, 'samples': samples, 'seed': seed})
    failures = 0
    for x, y, z in tqdm(triples, total=total, desc=f'associativity n={n}', disable=not progress):
        left = engine.combine(engine.multiply_basis(x, y), lambda key: engine.multiply_basis(key, z))
        right = {}
        for key, coeff in engine.multiply_basis(y, z).items():
            for image, value in engine.multiply_basis(x, key).items():
                right[image] = right.get(image, engine.ring.zero) + coeff * value
        right = {key: value for key, value in right.items() if value}
        if left != right:
            failures += 1
            if failures <= _FAILURE_SAMPLES:
                report.add(f'triple {format_key(x)} {format_key(y)} {format_key(z)}', False)
    report.add('associativity', failures == 0, observed=failures, expected=0, detail=f'{total} triples checked')
    return report


def confluence_check(n: int, trials: int, seed: int = 0) -> CheckReport:
    """
    F_M G_u expanded along random reduced words of u agrees with the
    deterministic expansion, for random pairs (M, u).
    """
    engine = get_engine(n, CoefficientRing.polynomial())
    rng = random.Random(seed)
    report = CheckReport('confluence', metadata={'n': n, 'trials': trials, 'seed': seed})
    failures = 0
    for _ in range(trials):
        labels = [rng.randrange(n) for _ in range(n)]
        partition = SetPartition.from_labels(labels)
        images = list(range(1, n + 1))
        rng.shuffle(images)
        perm = Permutation.from_images(images)
        expected = engine.express(partition, perm)
        observed = expand_random_word(engine, partition, perm, random_reduced_word(perm, rng))
        if observed != expected:
            failures += 1
            if failures <= _FAILURE_SAMPLES:
                report.add(f'pair [{partition}][{perm}]', False)
    report.add('confluence', failures == 0, observed=failures, expected=0, detail=f'{trials} trials')
    return report


def degeneration_check(n: int) -> CheckReport:
    """At a = q = 1 every basis product is the single party-monoid product."""
    engine = get_engine(n, CoefficientRing.specialized(Specialization.rational(1, 1)))
    one = engine.ring.one
    report = CheckReport('degeneration', metadata={'n': n})
    failures = 0
    keys = basis_keys(n)
    for x, y in _product(keys, repeat=2):
        expected = party_multiply(PartyElement(*x), PartyElement(*y))
        observed = engine.multiply_basis(x, y)
        if observed != {(expected.partition, expected.perm): one}:
            failures += 1
            if failures <= _FAILURE_SAMPLES:
                report.add(f'{format_key(x)} * {format_key(y)}', False, expected=str(expected))
    report.add('party monoid product table', failures == 0, observed=failures, expected=0,
               detail=f'{len(keys) ** 2} products')
    return report


def functoriality_check(n: int, samples: int, seed: int = 0, spec: Optional[Specialization] = None) -> CheckReport:
    """Specializing a polynomial product equals multiplying over the specialized ring."""
    spec = spec or random_specialization(seed)
    poly = get_engine(n, CoefficientRing.polynomial())
    point = get_engine(n, CoefficientRing.specialized(spec))
    rng = random.Random(seed)
    keys = basis_keys(n)
    report = CheckReport('functoriality', metadata={'n': n, 'samples': samples, 'point': spec.to_dict()})
    failures = 0
    for _ in range(samples):
        x, y = rng.choice(keys), rng.choice(keys)
        lifted = AlgebraElement(n, {key: specialize(poly.ring.to_symbolic(value), spec)
                                    for key, value in poly.multiply_basis(x, y).items()}, point.ring)
        direct = AlgebraElement(n, point.multiply_basis(x, y), point.ring)
        if lifted != direct:
            failures += 1
    report.add('specialize(multiply) = multiply(specialize)', failures == 0, observed=failures, expected=0)
    return report
