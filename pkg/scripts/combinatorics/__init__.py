"""
Set partitions and permutations.

Lattice operations, standard arcs, group actions, lengths, inversions,
reduced words, exhaustive streams and counting oracles.
"""

from .counting import (
    bell,
    catalan,
    double_factorial_odd,
    integer_partitions,
    partition_count,
    party_j_class_size,
    party_monoid_order,
    set_partitions_of_shape,
    shape_multiplicities,
    tied_monoid_order,
)
from .enumeration import IntegerPartition, enumerate_partitions, enumerate_permutations
from .permutation import Permutation, inversion_set, length_and_inversions, s_AB, transposition
from .set_partition import (
    Arc,
    SetPartition,
    act,
    beta,
    join,
    merge_exponent,
    partition_normal_word,
    standard_arcs,
)
from .union_find import UnionFind

__all__ = [
    'bell',
    'catalan',
    'double_factorial_odd',
    'integer_partitions',
    'partition_count',
    'party_j_class_size',
    'party_monoid_order',
    'set_partitions_of_shape',
    'shape_multiplicities',
    'tied_monoid_order',
    'IntegerPartition',
    'enumerate_partitions',
    'enumerate_permutations',
    'Permutation',
    'inversion_set',
    'length_and_inversions',
    's_AB',
    'transposition',
    'Arc',
    'SetPartition',
    'act',
    'beta',
    'join',
    'merge_exponent',
    'partition_normal_word',
    'standard_arcs',
    'UnionFind',
]
