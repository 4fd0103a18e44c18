"""
Exact scalars: arbitrary-precision rationals and rational functions.
"""

from .ratfunc import MultiPoly, RatFunc, poly_ring, poly_terms
from .field import (
    Scalar,
    ScalarField,
    RationalField,
    FunctionField,
    RATIONAL_MODE,
    SYMBOLIC_MODE,
    field_for,
    field_of,
    scalar_arith,
)
from .text import format_scalar, parse_scalar, parse_in_field

__all__ = [
    'MultiPoly',
    'RatFunc',
    'poly_ring',
    'poly_terms',
    'Scalar',
    'ScalarField',
    'RationalField',
    'FunctionField',
    'RATIONAL_MODE',
    'SYMBOLIC_MODE',
    'field_for',
    'field_of',
    'scalar_arith',
    'format_scalar',
    'parse_scalar',
    'parse_in_field',
]
