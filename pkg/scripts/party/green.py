"""
Enumeration, Green's relations and maximal subgroups of the party monoid
and the tied symmetric monoid.

Green's classes are computed by brute force: strongly connected components
of the left, right or two-sided Cayley graph over the monoid generators.
"""

from itertools import product as _product
from math import factorial, prod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from combinatorics import (
    Permutation,
    SetPartition,
    act,
    enumerate_partitions,
    enumerate_permutations,
    shape_multiplicities,
)
from config import settings
from diagrams import monoid_closure, ramified_product
from errors import BoundExceededError, IndexRangeError
from observability import get_logger, metrics
from reports import CheckReport

from .elements import (
    PartyElement,
    TiedSymElement,
    party_multiply,
    party_normalize,
    tied_multiply,
    to_ramified,
)

logger = get_logger(__name__)

PARTY = 'party'
TIED = 'tied'
RELATIONS = ('L', 'R', 'J')


def party_generators(n: int) -> List[PartyElement]:
    """s_1..s_{n-1} then f_1..f_{n-1}."""
    identity_partition = SetPartition.identity(n)
    return ([PartyElement(identity_partition, Permutation.simple(i, n)) for i in range(1, n)]
            + [PartyElement(SetPartition.pair(i, i + 1, n), Permutation.identity(n)) for i in range(1, n)])


def tied_generators(n: int) -> List[TiedSymElement]:
    """s_1..s_{n-1} then e_1..e_{n-1}."""
    identity_partition = SetPartition.identity(n)
    return ([TiedSymElement(identity_partition, Permutation.simple(i, n)) for i in range(1, n)]
            + [TiedSymElement(SetPartition.pair(i, i + 1, n), Permutation.identity(n)) for i in range(1, n)])


def enumerate_party(n: int) -> List[PartyElement]:
    """All coprime pairs of degree n, partitions in stream order then permutations."""
    perms = list(enumerate_permutations(n))
    elements = []
    for partition in enumerate_partitions(n):
        seen = set()
        for perm in perms:
            element = party_normalize(partition, perm)
            if element not in seen:
                seen.add(element)
                elements.append(element)
    return elements


def party_closure(n: int, progress: bool = False) -> List[PartyElement]:
    """The party monoid as the closure of its generators under party_multiply."""
    return monoid_closure(PartyElement.identity(n), party_generators(n), party_multiply,
                          progress=progress, label=f'party closure n={n}')


def enumerate_tied(n: int) -> List[TiedSymElement]:
    perms = list(enumerate_permutations(n))
    return [TiedSymElement(partition, perm) for partition in enumerate_partitions(n) for perm in perms]


def _elements_and_generators(monoid: str, n: int):
    if monoid == PARTY:
        bound = settings.enumeration.green_party_bound
        if n > bound:
            raise BoundExceededError('n', n, bound)
        return enumerate_party(n), party_generators(n), party_multiply
    if monoid == TIED:
        bound = settings.enumeration.green_tied_bound
        if n > bound:
            raise BoundExceededError('n', n, bound)
        return enumerate_tied(n), tied_generators(n), tied_multiply
    raise IndexRangeError(f"Unknown monoid: {monoid}", details={'known': [PARTY, TIED]})


def green_classes(monoid: str, n: int, relation: str) -> List[List]:
    """
    Green's L-, R- or J-classes by strongly connected components.

    g L h iff Mg = Mh: mutual reachability under left multiplication by
    generators. R uses right multiplication, J both.

    Returns:
        Classes as lists of elements, ordered by their first element in
        enumeration order
    """
    if relation not in RELATIONS:
        raise IndexRangeError(f"Unknown Green relation: {relation}", details={'known': list(RELATIONS)})
    elements, generators, multiply = _elements_and_generators(monoid, n)
    index = {element: k for k, element in enumerate(elements)}

    rows, cols = [], []
    for k, element in enumerate(elements):
        for gen in generators:
            if relation in ('L', 'J'):
                rows.append(k)
                cols.append(index[multiply(gen, element)])
            if relation in ('R', 'J'):
                rows.append(k)
                cols.append(index[multiply(element, gen)])

    size = len(elements)
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size))
    count, labels = connected_components(graph, directed=True, connection='strong')

    classes: Dict[int, List] = {}
    for k, label in enumerate(labels):
        classes.setdefault(int(label), []).append(elements[k])
    result = sorted(classes.values(), key=lambda members: index[members[0]])

    metrics.gauge('green_classes', count, tags={'monoid': monoid, 'relation': relation})
    logger.info("Green classes computed", extra={'n': n, 'dimension': count})
    return result


def stabilizer(partition: SetPartition, bound: Optional[int] = None) -> List[Permutation]:
    """Permutations s with s(e) = e, by brute force over the symmetric group."""
    limit = bound or settings.enumeration.maxsub_bound
    if partition.n > limit:
        raise BoundExceededError('n', partition.n, limit)
    return [perm for perm in enumerate_permutations(partition.n, bound=limit) if act(perm, partition) == partition]


def maximal_subgroup(monoid: str, idempotent: SetPartition) -> List:
    """
    Maximal subgroup at the idempotent e.

    tied: {e*s : s(e) = e}; party: the same products normalized (duplicates
    collapse because e*s_{ij} = e inside a block).
    """
    stab = stabilizer(idempotent)
    if monoid == TIED:
        return [TiedSymElement(idempotent, perm) for perm in stab]
    if monoid == PARTY:
        return list(dict.fromkeys(party_normalize(idempotent, perm) for perm in stab))
    raise IndexRangeError(f"Unknown monoid: {monoid}", details={'known': [PARTY, TIED]})


def party_subgroup_order(shape: Sequence[int]) -> int:
    """Product over block sizes m of (number of blocks of size m)!."""
    return prod(factorial(k) for k in shape_multiplicities(tuple(shape)).values())


def tied_subgroup_order(shape: Sequence[int]) -> int:
    """(product of block-size factorials) times party_subgroup_order."""
    return prod(factorial(size) for size in shape) * party_subgroup_order(shape)


def group_closed(elements: List, multiply) -> bool:
    """True when the set is closed under the product."""
    members = set(elements)
    return all(multiply(x, y) in members for x, y in _product(elements, repeat=2))


def subgroup_orders(monoid: str, n: int) -> List[Tuple[SetPartition, int, int]]:
    """(idempotent, brute-force order, formula order) for every set partition of n."""
    formula = party_subgroup_order if monoid == PARTY else tied_subgroup_order
    return [(e, len(maximal_subgroup(monoid, e)), formula(e.shape())) for e in enumerate_partitions(n)]


def ramified_check(n: int) -> CheckReport:
    """
    The ramified view of the tied symmetric monoid.

    to_ramified is injective and turns tied_multiply into the componentwise
    diagram product.
    """
    bound = settings.enumeration.green_tied_bound
    if n > bound:
        raise BoundExceededError('n', n, bound)
    elements = enumerate_tied(n)
    pairs = {element: to_ramified(element) for element in elements}
    report = CheckReport('ramified', metadata={'n': n, 'elements': len(elements)})
    report.add('injective', len(set(pairs.values())) == len(elements),
               observed=len(set(pairs.values())), expected=len(elements))
    failures = 0
    for x, y in _product(elements, repeat=2):
        if to_ramified(tied_multiply(x, y)) != ramified_product(pairs[x], pairs[y]):
            failures += 1
    report.add('product', failures == 0, observed=failures, expected=0,
               detail=f'{len(elements) ** 2} products')
    return report
