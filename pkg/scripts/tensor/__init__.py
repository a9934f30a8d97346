"""
Tensor representation psi of P_n(p, q) on V^{(x)n}: operator matrices,
relation checks and faithfulness ranks.
"""

from .representation import (
    CONSISTENT,
    FLAT,
    TABLES,
    TensorAction,
    certified_rank,
    column_sample,
    faithfulness_rank,
    multiplicativity_check,
    op_F,
    op_G,
    pair_matrix,
    represent,
    verify_matrix_relations,
)
from .space import SparseMatrix, TensorIndex, all_indices, dimension, ordinal

__all__ = [
    'CONSISTENT',
    'FLAT',
    'TABLES',
    'TensorAction',
    'certified_rank',
    'column_sample',
    'faithfulness_rank',
    'multiplicativity_check',
    'op_F',
    'op_G',
    'pair_matrix',
    'represent',
    'verify_matrix_relations',
    'SparseMatrix',
    'TensorIndex',
    'all_indices',
    'dimension',
    'ordinal',
]
