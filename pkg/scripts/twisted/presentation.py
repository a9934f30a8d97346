"""
Presentation and cocycle checks for twisted monoid algebras.

Relation sets are written over the letters S (transposition), F (tie) and
T (cup-cap); 'adjacent' relations run over |i - j| = 1 and 'far' ones over
|i - j| > 1.
"""

import random
from dataclasses import dataclass
from itertools import product as _product
from typing import Dict, List, Tuple

from combinatorics import Permutation, SetPartition, enumerate_partitions
from diagrams import Diagram, generator
from errors import BoundExceededError, IndexRangeError
from observability import get_logger
from party import PartyElement, enumerate_party
from reports import CheckReport

from .algebra import (
    ALPHA,
    DIAGRAM_CARRIER,
    TwistedElement,
    Twisting,
    identity_element,
    twisted_multiply,
)

logger = get_logger(__name__)

Word = Tuple[Tuple[str, str], ...]


@dataclass(frozen=True)
class Relation:
    """lhs = delta^power * rhs, over index pattern 'single', 'adjacent' or 'far'."""
    name: str
    pattern: str
    lhs: Word
    rhs: Word
    power: int = 0


def _r(name, pattern, lhs, rhs, power=0) -> Relation:
    def word(text):
        return tuple((tok[0], tok[1]) for tok in text.split()) if text else ()
    return Relation(name, pattern, word(lhs), word(rhs), power)


# Letters carry an index variable: 'i' or 'j'.
RELATION_SETS: Dict[str, List[Relation]] = {
    'party': [
        _r('S_i^2 = 1', 'single', 'Si Si', ''),
        _r('S_iS_jS_i = S_jS_iS_j', 'adjacent', 'Si Sj Si', 'Sj Si Sj'),
        _r('S_iS_j = S_jS_i', 'far', 'Si Sj', 'Sj Si'),
        _r('F_i^2 = delta F_i', 'single', 'Fi Fi', 'Fi', 1),
        _r('F_iF_j = F_jF_i', 'adjacent', 'Fi Fj', 'Fj Fi'),
        _r('F_iF_j = F_jF_i (far)', 'far', 'Fi Fj', 'Fj Fi'),
        _r('S_iF_i = F_i', 'single', 'Si Fi', 'Fi'),
        _r('F_iS_i = F_i', 'single', 'Fi Si', 'Fi'),
        _r('S_iS_jF_i = F_jS_iS_j', 'adjacent', 'Si Sj Fi', 'Fj Si Sj'),
        _r('S_iF_j = F_jS_i', 'far', 'Si Fj', 'Fj Si'),
    ],
    'set_partition': [
        _r('F_i^2 = delta F_i', 'single', 'Fi Fi', 'Fi', 1),
        _r('F_iF_j = F_jF_i', 'adjacent', 'Fi Fj', 'Fj Fi'),
        _r('F_iF_j = F_jF_i (far)', 'far', 'Fi Fj', 'Fj Fi'),
    ],
    'temperley_lieb': [
        _r('T_i^2 = delta T_i', 'single', 'Ti Ti', 'Ti', 1),
        _r('T_iT_jT_i = T_i', 'adjacent', 'Ti Tj Ti', 'Ti'),
        _r('T_iT_j = T_jT_i', 'far', 'Ti Tj', 'Tj Ti'),
    ],
    'partition': [
        _r('T_i^2 = delta T_i', 'single', 'Ti Ti', 'Ti', 1),
        _r('T_iT_jT_i = T_i', 'adjacent', 'Ti Tj Ti', 'Ti'),
        _r('S_iT_i = T_i', 'single', 'Si Ti', 'Ti'),
        _r('T_iS_i = T_i', 'single', 'Ti Si', 'Ti'),
        _r('F_iT_i = T_i', 'single', 'Fi Ti', 'Ti'),
        _r('T_iF_i = T_i', 'single', 'Ti Fi', 'Ti'),
        _r('F_i^2 = F_i', 'single', 'Fi Fi', 'Fi'),
        _r('S_iF_i = F_i', 'single', 'Si Fi', 'Fi'),
        _r('S_iS_jF_i = F_jS_iS_j', 'adjacent', 'Si Sj Fi', 'Fj Si Sj'),
    ],
}

# Which twisting each relation set is meant for
SET_TWISTING = {'party': 'beta', 'set_partition': 'beta', 'temperley_lieb': ALPHA, 'partition': ALPHA}


def generator_element(letter: str, index: int, n: int, twisting: Twisting) -> TwistedElement:
    """Basis element of the generator S_i, F_i or T_i in the twisted algebra's carrier."""
    if not 1 <= index < n:
        raise IndexRangeError(f"{letter}_{index} is not defined for n={n}")
    if twisting.carrier == DIAGRAM_CARRIER:
        kind = {'S': 's_i', 'F': 'f_i', 'T': 't_i'}[letter]
        return TwistedElement.basis(generator(kind, (index,), n))
    if letter == 'S':
        return TwistedElement.basis(PartyElement(SetPartition.identity(n), Permutation.simple(index, n)))
    if letter == 'F':
        return TwistedElement.basis(PartyElement(SetPartition.pair(index, index + 1, n), Permutation.identity(n)))
    raise IndexRangeError(f"Letter {letter} has no party-monoid image")


def evaluate_word(word: Word, binding: Dict[str, int], n: int, twisting: Twisting) -> TwistedElement:
    result = identity_element(twisting, n)
    for letter, variable in word:
        result = twisted_multiply(result, generator_element(letter, binding[variable], n, twisting), twisting)
    return result


def index_bindings(pattern: str, n: int) -> List[Dict[str, int]]:
    """
    All index assignments matching the pattern.

    'single' binds i in 1..n-1; 'adjacent' and 'far' bind i, j in 1..n-1
    with |i - j| = 1 or > 1; 'pair' binds 1 <= i < j <= n.
    """
    if pattern == 'pair':
        return [{'i': i, 'j': j} for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    pairs = []
    for i in range(1, n):
        if pattern == 'single':
            pairs.append({'i': i})
            continue
        for j in range(1, n):
            distance = abs(i - j)
            if (pattern == 'adjacent' and distance == 1) or (pattern == 'far' and distance > 1):
                pairs.append({'i': i, 'j': j})
    return pairs


def verify_presentation(relation_set: str, n: int, twisting: Twisting = None) -> CheckReport:
    """
    Evaluate both sides of every relation instance and compare exactly.

    Raises:
        BoundExceededError: n > 5
    """
    if n > 5:
        raise BoundExceededError('n', n, 5)
    if relation_set not in RELATION_SETS:
        raise IndexRangeError(f"Unknown relation set: {relation_set}", details={'known': sorted(RELATION_SETS)})
    twisting = twisting or Twisting(SET_TWISTING[relation_set])
    report = CheckReport(f'presentation:{relation_set}', metadata={'n': n, 'twisting': twisting.to_dict()})
    for relation in RELATION_SETS[relation_set]:
        for binding in index_bindings(relation.pattern, n):
            lhs = evaluate_word(relation.lhs, binding, n, twisting)
            rhs = evaluate_word(relation.rhs, binding, n, twisting).scale(twisting.delta ** relation.power)
            label = relation.name + ' ' + ','.join(f"{k}={v}" for k, v in sorted(binding.items()))
            report.add(label, lhs == rhs, detail=None if lhs == rhs else f"{lhs} != {rhs}")
    logger.info("Presentation verified", extra={'n': n})
    return report


def carrier_elements(twisting: Twisting, n: int) -> List:
    if twisting.carrier == DIAGRAM_CARRIER:
        return [Diagram(n, partition) for partition in enumerate_partitions(2 * n, bound=2 * n)]
    return enumerate_party(n)


def cocycle_check(twisting: Twisting, n: int, samples: int = 0, seed: int = 0) -> CheckReport:
    """
    Exponent form of the cocycle identity on triples.

    e(x, y) + e(xy, z) = e(x, yz) + e(y, z). Exhaustive when samples is 0,
    otherwise that many seeded random triples.
    """
    elements = carrier_elements(twisting, n)
    if samples:
        rng = random.Random(seed)
        triples = [(rng.choice(elements), rng.choice(elements), rng.choice(elements)) for _ in range(samples)]
    else:
        triples = _product(elements, repeat=3)

    report = CheckReport(f'cocycle:{twisting.kind}', metadata={'n': n, 'carrier_size': len(elements),
                                                              'samples': samples, 'seed': seed})
    failures = 0
    checked = 0
    for x, y, z in triples:
        xy, e_xy = twisting.product(x, y)
        yz, e_yz = twisting.product(y, z)
        left = e_xy + twisting.exponent(xy, z)
        right = twisting.exponent(x, yz) + e_yz
        checked += 1
        if left != right:
            failures += 1
            if failures <= 10:
                report.add(f'triple ({x}, {y}, {z})', False, observed=left, expected=right)
    report.add('cocycle identity', failures == 0, observed=failures, expected=0,
               detail=f'{checked} triples checked')
    return report
