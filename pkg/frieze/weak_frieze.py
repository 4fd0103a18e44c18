"""
weak_frieze.py
==============
The ``WeakFrieze`` value type: a total map from the diagonals of an n-gon
(boundary edges included) to scalars, together with a designated dissection.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple

from geometry import (
    Diagonal,
    Dissection,
    all_diagonals,
    reflect_diagonal,
    reflect_dissection,
    rotate_diagonal,
    rotate_dissection,
)
from scalar import RationalField, Scalar, ScalarField, field_of
from utils.error_handler import PreconditionError


@dataclass(frozen=True)
class WeakFrieze:
    """Values on every diagonal of an n-gon plus the dissection D they refer to."""
    n: int
    dissection: Dissection
    values: Mapping[Diagonal, Scalar]
    field: ScalarField = field(default_factory=RationalField, compare=False)

    def __post_init__(self):
        if self.dissection.n != self.n:
            raise PreconditionError(
                f"dissection belongs to a {self.dissection.n}-gon, frieze to a {self.n}-gon"
            )
        expected = all_diagonals(self.n)
        missing = [d for d in expected if d not in self.values]
        if missing or len(self.values) != len(expected):
            shown = ", ".join(d.key() for d in missing[:5])
            raise PreconditionError(
                f"a weak frieze on the {self.n}-gon needs a value on all {len(expected)} diagonals"
                + (f"; missing {shown}" if shown else "")
            )
        # Freeze the mapping in diagonal order and check every value's field.
        ordered = {d: self.field.check(self.values[d]) for d in expected}
        object.__setattr__(self, "values", ordered)

    @classmethod
    def from_function(
        cls,
        n: int,
        dissection: Dissection,
        value: Callable[[Diagonal], Scalar],
        field: Optional[ScalarField] = None,
    ) -> "WeakFrieze":
        values = {d: value(d) for d in all_diagonals(n)}
        if field is None:
            field = field_of(next(iter(values.values())))
        return cls(n, dissection, values, field)

    def __getitem__(self, d: Diagonal) -> Scalar:
        return self.values[d]

    def value(self, i: int, j: int) -> Scalar:
        """f(i, j) = f({i, j})."""
        return self.values[Diagonal(i, j)]

    def items(self) -> Iterator[Tuple[Diagonal, Scalar]]:
        return iter(self.values.items())

    def with_value(self, d: Diagonal, value: Scalar) -> "WeakFrieze":
        """Copy with one value replaced (same dissection)."""
        values = dict(self.values)
        values[d] = value
        return WeakFrieze(self.n, self.dissection, values, self.field)

    def evaluate(self, assignment: Mapping[str, Fraction]) -> "WeakFrieze":
        """Specialize a symbolic frieze at rational values of its indeterminates."""
        if isinstance(self.field, RationalField):
            return self
        values = {d: v.evaluate(assignment) for d, v in self.values.items()}
        return WeakFrieze(self.n, self.dissection, values, RationalField())

    def rotate(self, k: int) -> "WeakFrieze":
        """Relabel every vertex v as v + k (mod n)."""
        values = {rotate_diagonal(d, k, self.n): v for d, v in self.values.items()}
        return WeakFrieze(self.n, rotate_dissection(self.dissection, k), values, self.field)

    def reflect(self) -> "WeakFrieze":
        """Relabel every vertex v as n + 1 - v."""
        values = {reflect_diagonal(d, self.n): v for d, v in self.values.items()}
        return WeakFrieze(self.n, reflect_dissection(self.dissection), values, self.field)

    def boundary_values(self) -> List[Scalar]:
        """f(1,2), f(2,3), ..., f(n-1,n), f(n,1)."""
        return [self.value(i, i % self.n + 1) for i in range(1, self.n + 1)]
