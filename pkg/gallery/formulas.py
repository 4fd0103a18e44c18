"""
formulas.py
===========
Closed-form determinants of weak frieze matrices.
"""

from fractions import Fraction
from math import prod
from typing import Sequence

from frieze import WeakFrieze
from scalar import Scalar
from utils.error_handler import SizeMismatch


def bhj_det_formula(n: int, cell_sizes: Sequence[int]) -> Fraction:
    """
    Determinant of the frieze glued from constant-1 pieces on cells of sizes
    d_1, ..., d_l: (-1)^(n-1) * prod(d_i - 1).

    Raises:
        SizeMismatch: If the sizes cannot be the cells of a dissected n-gon
    """
    sizes = list(cell_sizes)
    if not sizes or any(size < 3 for size in sizes):
        raise SizeMismatch(f"cell sizes must all be at least 3, got {sizes}")
    if sum(sizes) - 2 * (len(sizes) - 1) != n:
        raise SizeMismatch(
            f"cells of sizes {sizes} glue to a {sum(sizes) - 2 * (len(sizes) - 1)}-gon, not a {n}-gon"
        )
    sign = -1 if (n - 1) % 2 else 1
    return Fraction(sign * prod(size - 1 for size in sizes))


def dangulation_det_formula(d: int, cells: int) -> Fraction:
    """(-1)^(l*d - 1) * (d - 1)^l for a dissection into l cells of size d."""
    sign = -1 if (cells * d - 1) % 2 else 1
    return Fraction(sign * (d - 1) ** cells)


def bci_det_formula(n: int) -> Fraction:
    """-(-2)^(n-2): the determinant for every triangulation of the n-gon."""
    return Fraction(-((-2) ** (n - 2)))


def bm_det_formula(f: WeakFrieze) -> Scalar:
    """-(-2)^(n-2) times the product of the boundary edge values of f."""
    result = f.field.from_int(-((-2) ** (f.n - 2)))
    for value in f.boundary_values():
        result = result * value
    return result
