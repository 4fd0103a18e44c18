"""
determinant.py
==============
Exact determinants.

``det_bareiss`` is the engine: fraction-free Bareiss elimination over the
integers (rational rows are first scaled to integer rows) or over the
polynomial ring, and plain Gaussian elimination over the fraction field when
some entry is a proper rational function. ``det_leibniz`` is the
permutation expansion, kept as an independent cross-check for small sizes.
"""

import logging
from fractions import Fraction
from itertools import permutations
from math import lcm
from typing import Callable, List, Optional, Sequence

from config import get_settings
from matrix.frieze_matrix import MatrixLike, matrix_field, rows_of
from scalar import FunctionField, RatFunc, Scalar, ScalarField
from utils.error_handler import TooLarge

logger = logging.getLogger(__name__)


def _bareiss(rows: List[list], one, exact_div: Callable, is_zero: Callable):
    """Fraction-free elimination over an integral domain; returns the determinant."""
    n = len(rows)
    sign, previous = 1, one
    for k in range(n - 1):
        pivot = next((i for i in range(k, n) if not is_zero(rows[i][k])), None)
        if pivot is None:
            return rows[0][0] * 0
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = exact_div(rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j], previous)
        previous = rows[k][k]
        logger.debug(f"bareiss step {k}: pivot row {pivot}")
    return rows[n - 1][n - 1] if sign > 0 else -rows[n - 1][n - 1]


def _det_rational(rows: List[List[Fraction]]) -> Fraction:
    scale = 1
    integer_rows = []
    for row in rows:
        factor = lcm(*(value.denominator for value in row))
        scale *= factor
        integer_rows.append([int(value * factor) for value in row])
    det = _bareiss(integer_rows, 1, lambda a, b: a // b, lambda a: a == 0)
    return Fraction(det, scale)


def _det_polynomial(rows: List[List[RatFunc]]) -> RatFunc:
    ring = rows[0][0].ring
    polys = [[value.num for value in row] for row in rows]
    det = _bareiss(polys, ring.one, lambda a, b: a.exquo(b), lambda a: not a)
    return RatFunc(det)


def _det_fraction_field(rows: List[List[RatFunc]], field: ScalarField) -> RatFunc:
    n = len(rows)
    det = field.one
    for k in range(n):
        pivot = next((i for i in range(k, n) if not rows[i][k].is_zero()), None)
        if pivot is None:
            return field.zero
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            det = -det
        det = det * rows[k][k]
        for i in range(k + 1, n):
            if rows[i][k].is_zero():
                continue
            factor = rows[i][k] / rows[k][k]
            for j in range(k + 1, n):
                rows[i][j] = rows[i][j] - factor * rows[k][j]
    return det


def det_bareiss(M: MatrixLike, field: Optional[ScalarField] = None) -> Scalar:
    """
    Exact determinant of a square matrix of scalars.

    Args:
        M: FriezeMatrix or square list of rows
        field: Field of the entries (detected from the entries when omitted)

    Returns:
        The determinant; 1 for the empty matrix, 0 for singular matrices
    """
    field = field or matrix_field(M)
    rows = [[field.check(field.from_rational(v)) if isinstance(v, (int, Fraction)) else field.check(v)
             for v in row] for row in rows_of(M)]
    if not rows:
        return field.one
    if isinstance(field, FunctionField):
        if all(value.is_polynomial for row in rows for value in row):
            return _det_polynomial(rows)
        return _det_fraction_field(rows, field)
    return _det_rational(rows)


def permutation_sign(perm: Sequence[int]) -> int:
    """+1 for even permutations, -1 for odd ones (by counting inversions)."""
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def det_leibniz(M: MatrixLike, field: Optional[ScalarField] = None) -> Scalar:
    """
    Determinant by the permutation expansion.

    Raises:
        TooLarge: If the size exceeds FRIEZE_LEIBNIZ_MAX (default 9)
    """
    limit = get_settings().leibniz_max
    rows = rows_of(M)
    n = len(rows)
    if n > limit:
        raise TooLarge(f"det_leibniz is limited to size {limit}, got {n}")
    field = field or matrix_field(M)
    total = field.zero
    for perm in permutations(range(n)):
        term = field.one
        for i, j in enumerate(perm):
            term = term * rows[i][j]
            if term == 0:
                break
        else:
            total = total + term if permutation_sign(perm) > 0 else total - term
    return total
