"""
Relation suites of the Party-Hecke algebra, loaded from YAML.

Each relation instance is evaluated on both sides as an AlgebraElement and
compared exactly. Two checks do not fit the [coefficient, word] format and
are computed here: conjugation of every F_{k,l} by G_{i,j}, and the strip
identity F_{i,j} G_tau G_k G_tau^-1 = pq F_{i,j} over every (tau, k) with
tau s_k tau^-1 = s_{i,j}.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

import yaml

from combinatorics import enumerate_permutations, transposition
from errors import BoundExceededError, IndexRangeError, ParseError
from observability import get_logger, metrics
from reports import CheckReport
from scalars import CoefficientRing, parse_scalar
from twisted import index_bindings

from .element import AlgebraElement
from .engine import HeckeEngine, get_engine
from .words import GeneratorWord, Letter

logger = get_logger(__name__)

SUITES_FILE = Path(__file__).parent / 'relation_suites.yaml'

Term = Tuple[str, str]


@dataclass(frozen=True)
class SuiteRelation:
    """lhs = rhs over the pattern's index bindings."""
    name: str
    pattern: str
    lhs: Tuple[Term, ...]
    rhs: Tuple[Term, ...]


@dataclass
class RelationSuite:
    """A named list of relations, optional builtin checks and parameter points."""
    name: str
    description: str = ''
    relations: List[SuiteRelation] = field(default_factory=list)
    builtins: List[str] = field(default_factory=list)
    points: List[Dict[str, str]] = field(default_factory=list)
    alternate_points: List[Dict[str, str]] = field(default_factory=list)


def _terms(raw, suite: str) -> Tuple[Term, ...]:
    try:
        return tuple((str(coeff), str(word)) for coeff, word in raw or [])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"Malformed terms in suite {suite!r}: {raw!r}") from exc


def load_suites(path: Optional[Path] = None) -> Dict[str, RelationSuite]:
    """
    Read every suite from YAML.

    Raises:
        ParseError: the file is missing a 'suites' mapping or a relation is malformed
    """
    path = path or SUITES_FILE
    with open(path, 'r', encoding='utf-8') as f:
        raw = yaml.safe_load(f) or {}
    if not isinstance(raw.get('suites'), dict):
        raise ParseError(f"No 'suites' mapping in {path}")

    suites = {}
    for name, body in raw['suites'].items():
        relations = []
        for entry in body.get('relations', []):
            try:
                relations.append(SuiteRelation(entry['name'], entry['pattern'],
                                               _terms(entry.get('lhs'), name), _terms(entry.get('rhs'), name)))
            except KeyError as exc:
                raise ParseError(f"Relation in suite {name!r} lacks {exc}") from exc
        suites[name] = RelationSuite(
            name=name,
            description=body.get('description', ''),
            relations=relations,
            builtins=list(body.get('builtins', [])),
            points=list(body.get('points', [])),
            alternate_points=list(body.get('alternate_points', [])),
        )
    logger.debug("Loaded relation suites", extra={'count': len(suites)})
    return suites


@lru_cache(maxsize=1)
def default_suites() -> Dict[str, RelationSuite]:
    return load_suites()


def suite_names() -> List[str]:
    return list(default_suites())


class _Evaluator:
    """Evaluates [coefficient, word] sums at one parameter point."""

    def __init__(self, engine: HeckeEngine, point: Optional[Dict[str, str]] = None):
        self.engine = engine
        self.ring = engine.ring
        self.bindings = {}
        self.virtual = None
        if point:
            self.bindings = {name: parse_scalar(text) for name, text in point.items()}
            self.virtual = (self.ring.from_scalar(self.bindings['alpha']),
                            self.ring.from_scalar(self.bindings['beta']))

    def side(self, terms: Tuple[Term, ...], binding: Dict[str, int]) -> AlgebraElement:
        total = AlgebraElement.zero(self.engine.n, self.ring)
        for coeff_text, word_text in terms:
            coeff = self.ring.from_scalar(parse_scalar(coeff_text, self.bindings))
            word = GeneratorWord.parse(word_text, self.engine.n, binding)
            total = total + self.engine.word_to_element(word, self.virtual).scale(coeff)
        return total


def _point_label(point: Optional[Dict[str, str]]) -> str:
    if not point:
        return ''
    return ' @ ' + ', '.join(f"{name}={text}" for name, text in point.items())


def _binding_label(binding: Dict[str, int]) -> str:
    return ','.join(f"{k}={v}" for k, v in sorted(binding.items()))


def _dual_conjugation(engine: HeckeEngine, report: CheckReport) -> None:
    """G_{i,j} F_{k,l} = F_{s(k),s(l)} G_{i,j} with s = s_{i,j}, for all i < j and k < l."""
    n = engine.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            g = engine.gen_element(Letter('G', (i, j)))
            swap = transposition(i, j, n)
            for k in range(1, n + 1):
                for l in range(k + 1, n + 1):
                    f = engine.gen_element(Letter('F', (k, l)))
                    moved = engine.gen_element(Letter('F', tuple(sorted((swap(k), swap(l))))))
                    passed = engine.multiply(g, f) == engine.multiply(moved, g)
                    report.add(f"G_ijF_kl = F_s(k)s(l)G_ij [i={i},j={j},k={k},l={l}]", passed)


def _span_lemma(engine: HeckeEngine, report: CheckReport) -> None:
    """F_{i,j} G_tau G_k G_tau^-1 = pq F_{i,j} for every tau, k with tau s_k tau^-1 = s_{i,j}."""
    n = engine.n
    for tau in enumerate_permutations(n):
        word = tau.reduced_word()
        forward = tuple(Letter('G', (k,)) for k in word)
        backward = tuple(Letter('Ginv', (k,)) for k in reversed(word))
        for k in range(1, n):
            i, j = sorted((tau(k), tau(k + 1)))
            f = engine.gen_element(Letter('F', (i, j)))
            conjugate = engine.word_to_element(GeneratorWord(n, forward + (Letter('G', (k,)),) + backward))
            passed = engine.multiply(f, conjugate) == f.scale(engine.pq)
            report.add(f"F_ijG_tauG_kG_tau^-1 = pqF_ij [tau={tau},k={k}]", passed)


BUILTINS: Dict[str, Callable[[HeckeEngine, CheckReport], None]] = {
    'dual_conjugation': _dual_conjugation,
    'span_lemma': _span_lemma,
}


def verify_relation_suite(suite: str, n: int = 3, ring: Optional[CoefficientRing] = None,
                          alternate: bool = False) -> CheckReport:
    """
    Check every relation instance of a suite.

    Args:
        suite: Suite name in relation_suites.yaml
        n: Degree (relations are local; 3 covers all adjacent cases, 4 adds far ones)
        ring: Coefficient ring (symbolic by default)
        alternate: For suites with parameter points, use the alternate points instead

    Raises:
        IndexRangeError: unknown suite or n < 2
        BoundExceededError: n > 5
    """
    suites = default_suites()
    if suite not in suites:
        raise IndexRangeError(f"Unknown relation suite: {suite}", details={'known': sorted(suites)})
    if n < 2:
        raise IndexRangeError(f"Relation suites need n >= 2, got {n}")
    if n > 5:
        raise BoundExceededError('n', n, 5)

    spec = suites[suite]
    engine = get_engine(n, ring)
    points = (spec.alternate_points if alternate else spec.points) or [None]
    report = CheckReport(f'suite:{suite}', metadata={
        'n': n,
        'ring': engine.ring.describe(),
        'description': spec.description,
        'points': [point for point in points if point],
    })

    with metrics.timer('relation_suite', tags={'suite': suite}):
        for point in points:
            evaluator = _Evaluator(engine, point)
            for relation in spec.relations:
                for binding in index_bindings(relation.pattern, n):
                    lhs = evaluator.side(relation.lhs, binding)
                    rhs = evaluator.side(relation.rhs, binding)
                    passed = lhs == rhs
                    label = f"{relation.name} [{_binding_label(binding)}]{_point_label(point)}"
                    report.add(label, passed, detail=None if passed else f"difference: {lhs - rhs}")
        for name in spec.builtins:
            BUILTINS[name](engine, report)

    logger.info("Relation suite verified", extra={
        'suite': suite, 'n': n, 'total': len(report.results), 'failed': len(report.failures)
    })
    return report
