"""
The party monoid (uniform block permutations) and the tied symmetric monoid.
"""

from .elements import (
    PartyElement,
    TiedSymElement,
    from_diagram,
    is_coprime,
    party_inverse,
    party_multiply,
    party_normalize,
    shape,
    strippable_inversions,
    tied_multiply,
    tied_to_party,
    to_diagram,
    to_ramified,
)
from .green import (
    PARTY,
    RELATIONS,
    TIED,
    enumerate_party,
    enumerate_tied,
    green_classes,
    group_closed,
    maximal_subgroup,
    party_closure,
    party_generators,
    party_subgroup_order,
    ramified_check,
    stabilizer,
    subgroup_orders,
    tied_generators,
    tied_subgroup_order,
)

__all__ = [
    'PartyElement',
    'TiedSymElement',
    'from_diagram',
    'is_coprime',
    'party_inverse',
    'party_multiply',
    'party_normalize',
    'shape',
    'strippable_inversions',
    'tied_multiply',
    'tied_to_party',
    'to_diagram',
    'to_ramified',
    'PARTY',
    'RELATIONS',
    'TIED',
    'enumerate_party',
    'enumerate_tied',
    'green_classes',
    'group_closed',
    'maximal_subgroup',
    'party_closure',
    'party_generators',
    'party_subgroup_order',
    'ramified_check',
    'stabilizer',
    'subgroup_orders',
    'tied_generators',
    'tied_subgroup_order',
]
