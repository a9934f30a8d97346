"""
Text forms of algebra elements accepted on the command line.

    Party-Hecke:  (a^2 - 1) * [1 2|3][1 2 3] - q * [1|2|3][2 1 3]
    Twisted:      2 * [1 3|2][2 1 3] + [1|2|3][1 2 3]
    Diagram:      [1 2 4 5|3 6]

A term is an optional scalar, an optional '*', then one or two bracketed
groups. Terms are joined by '+' or '-'.
"""

import re
from typing import Callable, List, Tuple, TypeVar

from combinatorics import Permutation, SetPartition
from diagrams import Diagram
from errors import DimensionMismatchError, ParseError
from hecke import AlgebraElement, get_engine
from party import PartyElement, TiedSymElement, to_ramified
from scalars import CoefficientRing, Scalar, parse_scalar, scalar
from twisted import DIAGRAM_CARRIER, TwistedElement

K = TypeVar('K')

_PAIR_RE = re.compile(r'\[([^\]]*)\]\s*\[([^\]]*)\]')
_SINGLE_RE = re.compile(r'\[([^\]]*)\]')


def _coefficient(prefix: str, source: str) -> Scalar:
    text = prefix.strip()
    if text.startswith('+'):
        text = text[1:].strip()
    if text.endswith('*'):
        text = text[:-1].strip()
    if not text:
        return scalar(1)
    if text == '-':
        return scalar(-1)
    try:
        return parse_scalar(text)
    except ParseError as exc:
        raise ParseError(f"Bad coefficient {text!r} in {source!r}", details=exc.details) from exc


def split_terms(text: str, pattern: re.Pattern, build: Callable[..., K]) -> List[Tuple[Scalar, K]]:
    """
    (coefficient, key) for every bracketed group in text.

    Raises:
        ParseError: no terms, or text left over after the last term
    """
    terms = []
    position = 0
    for match in pattern.finditer(text):
        terms.append((_coefficient(text[position:match.start()], text), build(*match.groups())))
        position = match.end()
    if not terms or text[position:].strip():
        raise ParseError(f"Cannot parse element: {text!r}")
    return terms


def _pair(partition_text: str, perm_text: str) -> Tuple[SetPartition, Permutation]:
    perm = Permutation.parse(perm_text)
    return SetPartition.parse(partition_text, perm.n), perm


def parse_hecke_element(text: str, ring: CoefficientRing = None) -> AlgebraElement:
    """
    Party-Hecke element from text; pairs that are not coprime are expanded.

    Raises:
        ParseError: malformed text
        DimensionMismatchError: terms of different degree
    """
    ring = ring or CoefficientRing.symbolic()
    terms = split_terms(text, _PAIR_RE, _pair)
    n = terms[0][1][1].n
    engine = get_engine(n, ring)
    total = AlgebraElement.zero(n, ring)
    for coeff, (partition, perm) in terms:
        if perm.n != n:
            raise DimensionMismatchError(n, perm.n)
        total = total + engine.coprime_reduce(partition, perm, ring.from_scalar(coeff))
    return total


def parse_twisted_element(text: str, carrier: str) -> TwistedElement:
    """Twisted-algebra element over party elements or diagrams."""
    if carrier == DIAGRAM_CARRIER:
        terms = split_terms(text, _SINGLE_RE, Diagram.parse)
    else:
        terms = split_terms(text, _PAIR_RE, lambda m, u: PartyElement.parse(f"[{m}][{u}]"))
    degrees = {key.n for _, key in terms}
    if len(degrees) > 1:
        raise DimensionMismatchError(min(degrees), max(degrees))
    return TwistedElement.from_pairs([(key, coeff) for coeff, key in terms])


def parse_render_target(text: str):
    """
    Diagram, PartyElement or RamifiedPair named by text.

    ``[D]`` is a diagram, ``[M][u]`` a party element and ``tied:[M][u]`` the
    ramified pair of a tied element.
    """
    text = text.strip()
    if text.startswith('tied:'):
        return to_ramified(TiedSymElement.parse(text[len('tied:'):]))
    if _PAIR_RE.fullmatch(text):
        return PartyElement.parse(text)
    match = _SINGLE_RE.fullmatch(text)
    if match:
        return Diagram.parse(match.group(1))
    raise ParseError(f"Cannot parse render target: {text!r}")
