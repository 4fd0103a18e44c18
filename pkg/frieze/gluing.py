"""
gluing.py
=========
Gluing weak friezes on the cells of a dissection into one weak frieze on the
whole polygon, and the inverse operations (restriction to a cell, cutting a
frieze into its pieces).

Values on diagonals inside a cell are copied from that cell's piece. Every
other diagonal crosses at least one gluing diagonal {a,b} and is resolved by
the Ptolemy relation

    f(k,l) = (f(k,a) f(b,l) + f(k,b) f(a,l)) / f(a,b),

whose four right-hand diagonals all cross strictly fewer gluing diagonals.
Diagonals are therefore processed by increasing number of crossed gluing
diagonals, ties broken lexicographically.
"""

import logging
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from frieze.weak_frieze import WeakFrieze
from geometry import (
    Cell,
    Diagonal,
    Dissection,
    all_diagonals,
    crossed_by,
    is_internal,
    split_polygon,
    validate_dissection,
)
from scalar import Scalar
from utils.error_handler import PieceMismatch, PreconditionError, ValueMismatch, ZeroGluingValue

logger = logging.getLogger(__name__)

Piece = Tuple[Cell, WeakFrieze]

FIRST = "first"
LAST = "last"


def _as_dissection(n: int, gluing: Union[Dissection, Iterable[Diagonal]]) -> Dissection:
    if isinstance(gluing, Dissection):
        if gluing.n != n:
            raise PreconditionError(f"gluing dissection belongs to a {gluing.n}-gon, not a {n}-gon")
        return gluing
    return validate_dissection(n, gluing)


def _match_pieces(cells: List[Cell], pieces: Sequence[Piece]) -> Dict[Cell, WeakFrieze]:
    by_cell: Dict[Cell, WeakFrieze] = {}
    for cell, piece in pieces:
        if cell in by_cell:
            raise PieceMismatch(f"cell {cell} is given more than once")
        if piece.n != cell.size:
            raise PieceMismatch(
                f"piece on cell {cell} is a weak frieze on a {piece.n}-gon, expected {cell.size}"
            )
        by_cell[cell] = piece
    expected = set(cells)
    if set(by_cell) != expected:
        missing = ", ".join(str(c) for c in cells if c not in by_cell)
        extra = ", ".join(str(c) for c in by_cell if c not in expected)
        message = "pieces do not match the cells of the gluing dissection"
        details = "; ".join(part for part in (
            f"missing {missing}" if missing else "",
            f"unexpected {extra}" if extra else "",
        ) if part)
        raise PieceMismatch(f"{message}: {details}")
    return by_cell


def glue(
    n: int,
    gluing: Union[Dissection, Iterable[Diagonal]],
    pieces: Sequence[Piece],
    along: str = FIRST,
) -> WeakFrieze:
    """
    Glue weak friezes on the cells of ``gluing`` into a weak frieze on the n-gon.

    Args:
        n: Polygon size
        gluing: Pairwise non-crossing internal diagonals cutting the polygon
        pieces: (cell, weak frieze on that cell with local labels 1..|cell|),
            one for each cell of ``split_polygon(n, gluing)``
        along: Which crossed gluing diagonal resolves a diagonal, "first" or
            "last" along it; the result does not depend on the choice

    Returns:
        WeakFrieze with dissection gluing ∪ (every piece's own dissection)

    Raises:
        PieceMismatch: If the pieces are not exactly the cells
        ValueMismatch: If two pieces disagree on a shared diagonal
        ZeroGluingValue: If a gluing diagonal carries 0
        VariantMismatch: If pieces live in different scalar fields
    """
    if along not in (FIRST, LAST):
        raise PreconditionError(f"along must be {FIRST!r} or {LAST!r}, got {along!r}")
    G = _as_dissection(n, gluing)
    cells = split_polygon(n, G)
    by_cell = _match_pieces(cells, pieces)
    field = by_cell[cells[0]].field

    values: Dict[Diagonal, Scalar] = {}
    dissection = set(G.diagonals)
    for cell in cells:
        piece = by_cell[cell]
        for local, value in piece.items():
            d = Diagonal(cell.global_label(local.a), cell.global_label(local.b))
            value = field.check(value)
            if d in values and values[d] != value:
                raise ValueMismatch(
                    (d.a, d.b), details=f"{values[d]} on one piece, {value} on the other"
                )
            values[d] = value
        for local in piece.dissection:
            dissection.add(Diagonal(cell.global_label(local.a), cell.global_label(local.b)))

    for d in G.sorted():
        if values[d] == 0:
            raise ZeroGluingValue((d.a, d.b))

    pending = []
    for d in all_diagonals(n):
        if d not in values:
            crossed = crossed_by(d, G)
            pending.append((len(crossed), d, crossed))
    pending.sort(key=lambda item: (item[0], item[1]))

    for r, d, crossed in pending:
        g = crossed[0] if along == FIRST else crossed[-1]
        k, l, a, b = d.a, d.b, g.a, g.b
        values[d] = (
            values[Diagonal(k, a)] * values[Diagonal(b, l)]
            + values[Diagonal(k, b)] * values[Diagonal(a, l)]
        ) / values[g]
        logger.debug(f"resolved {d} (crosses {r}) through {g}")

    logger.info(
        f"glued {len(cells)} pieces on the {n}-gon; {len(pending)} diagonals resolved by Ptolemy"
    )
    return WeakFrieze(n, validate_dissection(n, dissection), values, field)


def restrict(f: WeakFrieze, cell: Cell) -> WeakFrieze:
    """
    Restrict ``f`` to the diagonals of ``cell``, relabeled 1..|cell| in cyclic order.

    The dissection of the result consists of the diagonals of f's dissection
    that are internal diagonals of the cell.

    Raises:
        InvalidCell: If the cell does not fit inside the n-gon
    """
    cell = cell.check_in(f.n)
    m = cell.size
    values = {
        Diagonal(p, q): f[Diagonal(cell.global_label(p), cell.global_label(q))]
        for p in range(1, m + 1)
        for q in range(p + 1, m + 1)
    }
    induced = []
    for d in f.dissection:
        if cell.contains(d):
            local = Diagonal(cell.local_label(d.a), cell.local_label(d.b))
            if is_internal(local, m):
                induced.append(local)
    return WeakFrieze(m, Dissection(m, frozenset(induced)), values, f.field)


def pieces_of(f: WeakFrieze, gluing: Union[Dissection, Iterable[Diagonal]]) -> List[Piece]:
    """Restrictions of ``f`` to every cell of ``split_polygon(n, gluing)``."""
    G = _as_dissection(f.n, gluing)
    return [(cell, restrict(f, cell)) for cell in split_polygon(f.n, G)]
