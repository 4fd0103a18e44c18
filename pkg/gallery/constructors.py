"""
constructors.py
===============
Weak friezes of the classical families: constant friezes, friezes glued from
constant-1 pieces over a dissection (Conway-Coxeter friezes for
triangulations), and the symbolic frieze of a triangulation whose values are
the cluster variables with one indeterminate per boundary edge and per
diagonal of the triangulation.
"""

import logging
from typing import List, Optional, Union

from frieze import Piece, WeakFrieze, glue
from geometry import Diagonal, Dissection, all_diagonals, split_polygon
from scalar import FunctionField, RationalField, Scalar, ScalarField, field_of
from utils.error_handler import PreconditionError

logger = logging.getLogger(__name__)


def constant_frieze(n: int, v: Union[int, Scalar] = 1, field: Optional[ScalarField] = None) -> WeakFrieze:
    """
    Every diagonal carries ``v``; the dissection is empty, so the result is a
    weak frieze whatever ``v`` is.
    """
    if field is None:
        field = RationalField() if isinstance(v, int) else field_of(v)
    value = field.from_int(v) if isinstance(v, int) else field.check(v)
    empty = Dissection(n, frozenset())
    return WeakFrieze.from_function(n, empty, lambda d: value, field)


def _constant_pieces(n: int, D: Dissection, field: ScalarField) -> List[Piece]:
    return [
        (cell, constant_frieze(cell.size, field.one, field))
        for cell in split_polygon(n, D)
    ]


def dissection_frieze(n: int, D: Dissection) -> WeakFrieze:
    """Glue constant-1 friezes on every cell of D."""
    if D.n != n:
        raise PreconditionError(f"dissection belongs to a {D.n}-gon, not a {n}-gon")
    return glue(n, D, _constant_pieces(n, D, RationalField()))


def cc_frieze(T: Dissection) -> WeakFrieze:
    """
    Conway-Coxeter frieze of a triangulation: all triangle sides equal 1.

    Raises:
        PreconditionError: If T is not a triangulation
    """
    if not T.is_triangulation():
        raise PreconditionError(
            f"expected a triangulation ({T.n - 3} diagonals), got {len(T)} diagonals"
        )
    return dissection_frieze(T.n, T)


def edge_variable(d: Diagonal) -> str:
    """Indeterminate name of a diagonal, e.g. x_1_4."""
    return f"x_{d.a}_{d.b}"


def baur_marsh_frieze(T: Dissection) -> WeakFrieze:
    """
    Symbolic frieze of a triangulation over QQ(x_i_j).

    Boundary edges and diagonals of T carry their own indeterminate; every
    other diagonal is resolved by gluing the triangles.

    Raises:
        PreconditionError: If T is not a triangulation
    """
    if not T.is_triangulation():
        raise PreconditionError(
            f"expected a triangulation ({T.n - 3} diagonals), got {len(T)} diagonals"
        )
    n = T.n
    initial = [d for d in all_diagonals(n) if (d.b - d.a) in (1, n - 1) or d in T]
    field = FunctionField(edge_variable(d) for d in initial)
    pieces: List[Piece] = []
    for cell in split_polygon(n, T):
        piece = WeakFrieze.from_function(
            3,
            Dissection(3, frozenset()),
            lambda local: field.variable(
                edge_variable(Diagonal(cell.global_label(local.a), cell.global_label(local.b)))
            ),
            field,
        )
        pieces.append((cell, piece))
    logger.debug(f"symbolic frieze of {T}: {len(field.universe)} indeterminates")
    return glue(n, T, pieces)

