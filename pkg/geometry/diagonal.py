"""
diagonal.py
===========
Diagonals of a convex n-gon with vertices labeled 1..n in cyclic order.

A diagonal is any unordered pair of distinct vertices; boundary edges are
diagonals too. It is internal when its endpoints are not cyclic neighbours.
"""

from dataclasses import dataclass
from typing import Iterator, List

from utils.error_handler import InvalidVertex


@dataclass(frozen=True, order=True)
class Diagonal:
    """Unordered vertex pair, stored with a < b."""
    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise InvalidVertex(f"a diagonal needs two distinct vertices, got {self.a},{self.b}")
        if self.a > self.b:
            lo, hi = self.b, self.a
            object.__setattr__(self, "a", lo)
            object.__setattr__(self, "b", hi)

    @classmethod
    def of(cls, i: int, j: int) -> "Diagonal":
        return cls(int(i), int(j))

    def key(self) -> str:
        """File-format key, e.g. "1,4"."""
        return f"{self.a},{self.b}"

    @classmethod
    def parse(cls, text: str) -> "Diagonal":
        try:
            first, second = (int(part) for part in text.split(","))
        except ValueError:
            raise InvalidVertex(f"diagonal key {text!r} is not of the form 'a,b'")
        return cls(first, second)

    def vertices(self):
        return (self.a, self.b)

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b))

    def __str__(self) -> str:
        return f"{{{self.a},{self.b}}}"


def check_diagonal(d: Diagonal, n: int) -> Diagonal:
    """Validate that ``d`` is a diagonal of the n-gon."""
    if n < 3:
        raise InvalidVertex(f"a polygon needs at least 3 vertices, got n={n}")
    if not (1 <= d.a <= n and 1 <= d.b <= n):
        raise InvalidVertex(f"diagonal {d.a},{d.b} has a vertex outside 1..{n}")
    return d


def is_internal(d: Diagonal, n: int) -> bool:
    """True iff the endpoints of ``d`` are not cyclic neighbours in the n-gon."""
    check_diagonal(d, n)
    return (d.b - d.a) not in (1, n - 1)


def crossing(d1: Diagonal, d2: Diagonal, n: int) -> bool:
    """
    True iff the two diagonals cross in the interior of the n-gon.

    With labels 1..n the cyclic interleaving test reduces to comparing the
    stored (a < b) endpoints; diagonals sharing a vertex never cross.
    """
    check_diagonal(d1, n)
    check_diagonal(d2, n)
    return d1.a < d2.a < d1.b < d2.b or d2.a < d1.a < d2.b < d1.b


def all_diagonals(n: int) -> List[Diagonal]:
    """All n(n-1)/2 diagonals, boundary edges included, in lexicographic order."""
    if n < 3:
        raise InvalidVertex(f"a polygon needs at least 3 vertices, got n={n}")
    return [Diagonal(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def internal_diagonals(n: int) -> List[Diagonal]:
    return [d for d in all_diagonals(n) if is_internal(d, n)]


def boundary_edges(n: int) -> List[Diagonal]:
    """Edges {1,2}, {2,3}, ..., {n-1,n}, {1,n} in cyclic order."""
    return [Diagonal(i, i % n + 1) for i in range(1, n + 1)]


def rotate_vertex(v: int, k: int, n: int) -> int:
    return (v - 1 + k) % n + 1


def reflect_vertex(v: int, n: int) -> int:
    return n + 1 - v


def rotate_diagonal(d: Diagonal, k: int, n: int) -> Diagonal:
    """Image of ``d`` under the rotation v -> v + k (mod n)."""
    check_diagonal(d, n)
    return Diagonal(rotate_vertex(d.a, k, n), rotate_vertex(d.b, k, n))


def reflect_diagonal(d: Diagonal, n: int) -> Diagonal:
    """Image of ``d`` under the reflection v -> n + 1 - v."""
    check_diagonal(d, n)
    return Diagonal(reflect_vertex(d.a, n), reflect_vertex(d.b, n))
