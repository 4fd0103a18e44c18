"""
Weak frieze matrices, exact determinants and their behaviour under gluing.
"""

from .frieze_matrix import FriezeMatrix, frieze_matrix, is_symmetric, permute, rows_of, submatrix
from .determinant import det_bareiss, det_leibniz, permutation_sign
from .gluing_det import (
    GlueDetResult,
    StructuredReduction,
    dissection_det_formula,
    glue_det_check,
    reduction_order,
    split_at,
    structured_reduction,
)

__all__ = [
    'FriezeMatrix',
    'frieze_matrix',
    'is_symmetric',
    'permute',
    'rows_of',
    'submatrix',
    'det_bareiss',
    'det_leibniz',
    'permutation_sign',
    'GlueDetResult',
    'StructuredReduction',
    'dissection_det_formula',
    'glue_det_check',
    'reduction_order',
    'split_at',
    'structured_reduction',
]
