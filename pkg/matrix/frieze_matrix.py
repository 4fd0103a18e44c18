"""
frieze_matrix.py
================
Weak frieze matrices: the symmetric matrix with zero diagonal and entry
f(i,j) in row i, column j.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from frieze import WeakFrieze
from scalar import RatFunc, RationalField, Scalar, ScalarField, field_of, format_scalar
from utils.error_handler import PreconditionError

Rows = Tuple[Tuple[Scalar, ...], ...]


@dataclass(frozen=True)
class FriezeMatrix:
    """A symmetric n x n matrix of scalars with zero diagonal."""
    n: int
    entries: Rows
    field: ScalarField

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        if len(entries) != self.n or any(len(row) != self.n for row in entries):
            raise PreconditionError(f"a frieze matrix of size {self.n} needs {self.n} rows of {self.n} entries")
        object.__setattr__(self, "entries", entries)
        if not is_symmetric(entries):
            raise PreconditionError("a frieze matrix must be symmetric")
        if any(entries[i][i] != 0 for i in range(self.n)):
            raise PreconditionError("a frieze matrix must have zero diagonal")

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        """Entry m(i,j) with 1-based indices."""
        i, j = index
        return self.entries[i - 1][j - 1]

    def rows(self) -> List[List[Scalar]]:
        return [list(row) for row in self.entries]

    def format(self) -> str:
        """Right-justified columns, one row per line."""
        texts = [[format_scalar(v) for v in row] for row in self.entries]
        width = max((len(t) for row in texts for t in row), default=1)
        return "\n".join(" ".join(t.rjust(width) for t in row) for row in texts)


MatrixLike = Union[FriezeMatrix, Sequence[Sequence[Scalar]]]


def rows_of(M: MatrixLike) -> List[List[Scalar]]:
    """Rows of a FriezeMatrix or a plain square matrix as mutable lists."""
    if isinstance(M, FriezeMatrix):
        return M.rows()
    rows = [list(row) for row in M]
    if any(len(row) != len(rows) for row in rows):
        raise PreconditionError("matrix must be square")
    return rows


def frieze_matrix(f: WeakFrieze) -> FriezeMatrix:
    """M_f: m(i,j) = f(i,j) off the diagonal, 0 on it."""
    zero = f.field.zero
    entries = tuple(
        tuple(zero if i == j else f.value(i, j) for j in range(1, f.n + 1))
        for i in range(1, f.n + 1)
    )
    return FriezeMatrix(f.n, entries, f.field)


def is_symmetric(M: MatrixLike) -> bool:
    rows = M.entries if isinstance(M, FriezeMatrix) else M
    size = len(rows)
    return all(rows[i][j] == rows[j][i] for i in range(size) for j in range(i + 1, size))


def submatrix(M: MatrixLike, rows: Sequence[int], cols: Sequence[int]) -> List[List[Scalar]]:
    """Entries in the given rows and columns (1-based, in the given order)."""
    full = rows_of(M)
    return [[full[i - 1][j - 1] for j in cols] for i in rows]


def permute(M: FriezeMatrix, order: Sequence[int]) -> FriezeMatrix:
    """
    Simultaneous row and column permutation: row k of the result is row
    ``order[k]`` of M (1-based). Symmetry and the zero diagonal survive.
    """
    if sorted(order) != list(range(1, M.n + 1)):
        raise PreconditionError(f"{list(order)} is not a permutation of 1..{M.n}")
    return FriezeMatrix(M.n, tuple(tuple(row) for row in submatrix(M, order, order)), M.field)


def matrix_field(M: MatrixLike) -> ScalarField:
    """Field of the entries: the first rational function found decides, else QQ."""
    if isinstance(M, FriezeMatrix):
        return M.field
    for row in M:
        for value in row:
            if isinstance(value, RatFunc):
                return field_of(value)
    return RationalField()
