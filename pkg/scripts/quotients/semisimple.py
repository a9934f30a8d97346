"""
Semisimplicity of P_n(p, q) at points through the trace form.

t(b) is the trace of left multiplication by the basis element b and the
Gram matrix is B(x, y) = t(xy). A nondegenerate trace form at a point of
characteristic zero certifies that the algebra is semisimple there.
"""

from dataclasses import dataclass
from typing import Any, Dict, List

from sympy.polys.matrices import DomainMatrix
from tqdm import tqdm

from config import settings
from errors import BoundExceededError
from hecke import HeckeEngine, basis_keys, get_engine
from observability import get_logger, metrics
from scalars import RATIONAL, SCALAR_FIELD, CoefficientRing, Specialization, format_scalar, two_point

logger = get_logger(__name__)


def regular_traces(engine: HeckeEngine, progress: bool = False) -> Dict:
    """t(b) = sum over basis c of the coefficient of c in b * c."""
    keys = basis_keys(engine.n)
    traces = {}
    for b in tqdm(keys, desc=f'traces n={engine.n}', disable=not progress):
        total = engine.ring.zero
        for c in keys:
            total = total + engine.multiply_basis(b, c).get(c, engine.ring.zero)
        traces[b] = total
    return traces


def gram_rows(engine: HeckeEngine, progress: bool = False) -> List[List[Any]]:
    """Rows of B(x, y) = t(xy) over the coprime-pair basis."""
    keys = basis_keys(engine.n)
    traces = regular_traces(engine, progress)
    rows = []
    for x in tqdm(keys, desc=f'gram n={engine.n}', disable=not progress):
        row = []
        for y in keys:
            total = engine.ring.zero
            for key, value in engine.multiply_basis(x, y).items():
                total = total + value * traces[key]
            row.append(total)
        rows.append(row)
    return rows


def gram_rank(n: int, spec: Specialization, progress: bool = False) -> int:
    """Rank of the trace form at a point."""
    engine = get_engine(n, CoefficientRing.specialized(spec))
    rows = gram_rows(engine, progress)
    size = len(rows)
    with metrics.timer('gram_rank', tags={'n': str(n)}):
        value = DomainMatrix(rows, (size, size), spec.domain).rank()
    logger.debug("Gram rank computed", extra={'n': n, 'rank': value, 'point': spec.to_dict()})
    return value


def gram_determinant(n: int = 2) -> str:
    """
    Determinant of the trace form over Q(a, q), as canonical text.

    Raises:
        BoundExceededError: n > 2
    """
    if n > 2:
        raise BoundExceededError('n', n, 2)
    engine = get_engine(n, CoefficientRing.symbolic())
    rows = gram_rows(engine)
    size = len(rows)
    det = DomainMatrix(rows, (size, size), SCALAR_FIELD.to_domain()).det()
    return format_scalar(det)


@dataclass
class SemisimplicityCertificate:
    """Trace-form rank at one point."""
    n: int
    point: Dict[str, Any]
    gram_rank: int
    dimension: int
    characteristic_zero: bool

    @property
    def semisimple_at_point(self) -> bool:
        return self.characteristic_zero and self.gram_rank == self.dimension

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'point': self.point,
            'gram_rank': self.gram_rank,
            'dimension': self.dimension,
            'semisimple_at_point': self.semisimple_at_point,
            'advisory': not self.characteristic_zero,
        }


def semisimplicity_certificate(n: int, spec: Specialization, progress: bool = False) -> SemisimplicityCertificate:
    """
    Gram rank of the trace form at spec.

    Only rational points certify semisimplicity; prime-field runs are advisory.

    Raises:
        BoundExceededError: n above settings.quotients.structure_table_max_n
    """
    bound = settings.quotients.structure_table_max_n
    if n > bound:
        raise BoundExceededError('n', n, bound)
    rank = gram_rank(n, spec, progress)
    certificate = SemisimplicityCertificate(n, spec.to_dict(), rank, len(basis_keys(n)), spec.target == RATIONAL)
    logger.info("Semisimplicity certificate", extra=certificate.to_dict())
    return certificate


def generic_semisimplicity(n: int, seed: int, include_degenerate: bool = True,
                           progress: bool = False) -> List[SemisimplicityCertificate]:
    """Certificates at (a, q) = (1, 1) and at two seeded rational points."""
    certificates = []
    if include_degenerate:
        certificates.append(semisimplicity_certificate(n, Specialization.rational(1, 1), progress))
    found: List[SemisimplicityCertificate] = []

    def compute(spec: Specialization) -> int:
        certificate = semisimplicity_certificate(n, spec, progress)
        found.append(certificate)
        return certificate.gram_rank

    result = two_point(compute, seed, target=RATIONAL)
    certificates.extend(found[-2:])
    if not result.agree:
        logger.warning("Gram rank differs between rational points", extra={'n': n, 'values': result.values})
    return certificates
