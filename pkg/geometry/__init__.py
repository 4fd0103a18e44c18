"""
Polygon combinatorics: diagonals, crossings, dissections and cells.
"""

from .diagonal import (
    Diagonal,
    all_diagonals,
    boundary_edges,
    check_diagonal,
    crossing,
    internal_diagonals,
    is_internal,
    reflect_diagonal,
    reflect_vertex,
    rotate_diagonal,
    rotate_vertex,
)
from .dissection import (
    Cell,
    Dissection,
    all_dissections,
    all_triangulations,
    cell_sizes,
    crossed_by,
    fan_dissection,
    reflect_dissection,
    rotate_dissection,
    split_polygon,
    validate_dissection,
)

__all__ = [
    'Diagonal',
    'all_diagonals',
    'boundary_edges',
    'check_diagonal',
    'crossing',
    'internal_diagonals',
    'is_internal',
    'reflect_diagonal',
    'reflect_vertex',
    'rotate_diagonal',
    'rotate_vertex',
    'Cell',
    'Dissection',
    'all_dissections',
    'all_triangulations',
    'cell_sizes',
    'crossed_by',
    'fan_dissection',
    'reflect_dissection',
    'rotate_dissection',
    'split_polygon',
    'validate_dissection',
]
