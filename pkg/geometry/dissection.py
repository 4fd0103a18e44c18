"""
dissection.py
=============
Dissections of a convex polygon and the cells they cut it into.

A dissection is a set of pairwise non-crossing internal diagonals (possibly
empty). Cutting along every diagonal yields |D| + 1 cells; each cell is kept
as its cyclically increasing vertex list, written from its smallest vertex.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from geometry.diagonal import (
    Diagonal,
    check_diagonal,
    crossing,
    internal_diagonals,
    is_internal,
    reflect_diagonal,
    rotate_diagonal,
)
from utils.error_handler import Crossing, InvalidCell, NotInternal, SizeMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Dissection:
    """A validated set of pairwise non-crossing internal diagonals of an n-gon."""
    n: int
    diagonals: FrozenSet[Diagonal]

    def sorted(self) -> List[Diagonal]:
        return sorted(self.diagonals)

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.diagonals)

    def __contains__(self, d: Diagonal) -> bool:
        return d in self.diagonals

    def is_triangulation(self) -> bool:
        return len(self.diagonals) == self.n - 3

    def __str__(self) -> str:
        if not self.diagonals:
            return "{}"
        return " ".join(d.key() for d in self.sorted())


@dataclass(frozen=True)
class Cell:
    """One piece of a dissected polygon: a cyclically ordered vertex list."""
    vertices: Tuple[int, ...]

    def __post_init__(self):
        vertices = tuple(int(v) for v in self.vertices)
        if len(vertices) < 3:
            raise InvalidCell(f"a cell needs at least 3 vertices, got {list(vertices)}")
        if len(set(vertices)) != len(vertices):
            raise InvalidCell(f"cell {list(vertices)} repeats a vertex")
        start = vertices.index(min(vertices))
        rotated = vertices[start:] + vertices[:start]
        if list(rotated) != sorted(rotated):
            raise InvalidCell(f"cell {list(vertices)} is not in cyclic order")
        object.__setattr__(self, "vertices", rotated)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def edges(self) -> List[Diagonal]:
        """Cell sides: consecutive vertex pairs including the closing one."""
        vs = self.vertices
        return [Diagonal(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def diagonals(self) -> List[Diagonal]:
        """Every diagonal of the cell (sides included), in lexicographic order."""
        vs = self.vertices
        return [Diagonal(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]

    def contains(self, d: Diagonal) -> bool:
        return d.a in self.vertices and d.b in self.vertices

    def local_label(self, vertex: int) -> int:
        """1-based position of a polygon vertex inside the cell."""
        return self.vertices.index(vertex) + 1

    def global_label(self, local: int) -> int:
        return self.vertices[local - 1]

    def check_in(self, n: int) -> "Cell":
        if self.vertices[-1] > n:
            raise InvalidCell(f"cell {list(self.vertices)} has a vertex outside 1..{n}")
        return self

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.vertices) + "]"


def validate_dissection(n: int, ds: Iterable[Diagonal]) -> Dissection:
    """
    Validate a set of diagonals as a dissection of the n-gon.

    Raises:
        InvalidVertex: If a diagonal has a vertex outside 1..n
        NotInternal: If a diagonal is a boundary edge
        Crossing: For the lexicographically first crossing pair
    """
    diagonals = sorted(set(ds))
    for d in diagonals:
        if not is_internal(d, n):
            raise NotInternal((d.a, d.b))
    for index, first in enumerate(diagonals):
        for second in diagonals[index + 1:]:
            if crossing(first, second, n):
                raise Crossing((first.a, first.b), (second.a, second.b))
    return Dissection(n, frozenset(diagonals))


def split_polygon(n: int, D: Dissection) -> List[Cell]:
    """
    Cut the n-gon along every diagonal of ``D``.

    Returns:
        |D| + 1 cells sorted by their vertex lists (smallest vertex first)
    """
    cells: List[Tuple[int, ...]] = [tuple(range(1, n + 1))]
    for d in D.sorted():
        for index, cell in enumerate(cells):
            if d.a in cell and d.b in cell:
                i, j = sorted((cell.index(d.a), cell.index(d.b)))
                first = cell[i:j + 1]
                second = cell[j:] + cell[:i + 1]
                cells[index:index + 1] = [first, second]
                break
    result = sorted((Cell(cell) for cell in cells), key=lambda c: c.vertices)
    logger.debug(f"split {n}-gon along {len(D)} diagonals into {len(result)} cells")
    return result


def cell_sizes(n: int, D: Dissection) -> List[int]:
    return [cell.size for cell in split_polygon(n, D)]


def crossed_by(d: Diagonal, D: Dissection) -> List[Diagonal]:
    """
    Diagonals of ``D`` crossing ``d``, ordered along ``d`` starting at ``d.a``.
    """
    n = D.n
    check_diagonal(d, n)
    hits = [e for e in D.sorted() if crossing(d, e, n)]

    def along(e: Diagonal) -> Tuple[int, int]:
        inner = e.a if d.a < e.a < d.b else e.b
        outer = e.b if inner == e.a else e.a
        return (inner - d.a, -((outer - d.b) % n))

    return sorted(hits, key=along)


def rotate_dissection(D: Dissection, k: int) -> Dissection:
    return Dissection(D.n, frozenset(rotate_diagonal(d, k, D.n) for d in D.diagonals))


def reflect_dissection(D: Dissection) -> Dissection:
    return Dissection(D.n, frozenset(reflect_diagonal(d, D.n) for d in D.diagonals))


def fan_dissection(sizes: Sequence[int]) -> Dissection:
    """
    Dissection whose cells, all sharing vertex 1, have the given sizes in order.

    Raises:
        SizeMismatch: If a size is below 3
    """
    if not sizes or any(size < 3 for size in sizes):
        raise SizeMismatch(f"cell sizes must all be at least 3, got {list(sizes)}")
    n = sum(sizes) - 2 * (len(sizes) - 1)
    apex, diagonals = 2, []
    for size in sizes[:-1]:
        apex += size - 2
        diagonals.append(Diagonal(1, apex))
    return validate_dissection(n, diagonals)


def all_dissections(n: int) -> List[Dissection]:
    """
    Every dissection of the n-gon (the empty one included), by backtracking
    over the internal diagonals in lexicographic order.
    """
    candidates = internal_diagonals(n)
    found: List[Dissection] = []

    def extend(start: int, chosen: List[Diagonal]) -> None:
        found.append(Dissection(n, frozenset(chosen)))
        for index in range(start, len(candidates)):
            d = candidates[index]
            if all(not crossing(d, e, n) for e in chosen):
                chosen.append(d)
                extend(index + 1, chosen)
                chosen.pop()

    extend(0, [])
    logger.debug(f"enumerated {len(found)} dissections of the {n}-gon")
    return found


def all_triangulations(n: int) -> List[Dissection]:
    """
    Every triangulation of the n-gon (Catalan many), by the recursion on the
    apex of the triangle resting on the edge {1, n}.
    """
    memo: Dict[Tuple[int, int], List[FrozenSet[Diagonal]]] = {}

    def triangulate(i: int, j: int) -> List[FrozenSet[Diagonal]]:
        # Triangulations of the sub-polygon i, i+1, ..., j.
        if j - i < 2:
            return [frozenset()]
        if (i, j) in memo:
            return memo[(i, j)]
        result = []
        for k in range(i + 1, j):
            own = frozenset(
                Diagonal(p, q) for p, q in ((i, k), (k, j)) if q - p > 1
            )
            for left in triangulate(i, k):
                for right in triangulate(k, j):
                    result.append(own | left | right)
        memo[(i, j)] = result
        return result

    triangulations = [Dissection(n, diagonals) for diagonals in triangulate(1, n)]
    return sorted(triangulations, key=lambda D: D.sorted())
