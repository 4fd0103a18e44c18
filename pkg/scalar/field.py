"""
field.py
========
The two scalar fields every computation runs in: the rationals QQ and the
rational function field QQ(x_1, ..., x_m) over a fixed universe of names.

Scalars themselves are plain values (``Fraction`` or ``RatFunc``); a
``ScalarField`` supplies constants and checks that values belong together.
"""

import operator
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Iterable, Tuple, Union

from scalar.ratfunc import RatFunc, poly_ring
from utils.error_handler import DivisionByZero, PreconditionError, VariantMismatch

Scalar = Union[Fraction, RatFunc]

RATIONAL_MODE = "rational"
SYMBOLIC_MODE = "symbolic"


class ScalarField(ABC):
    """A field of exact scalars."""

    mode: str = ""

    @property
    def zero(self) -> Scalar:
        return self.from_int(0)

    @property
    def one(self) -> Scalar:
        return self.from_int(1)

    @abstractmethod
    def from_rational(self, value: Union[int, Fraction]) -> Scalar:
        """Embed a rational number."""

    def from_int(self, value: int) -> Scalar:
        return self.from_rational(value)

    @abstractmethod
    def contains(self, value) -> bool:
        """True iff ``value`` is an element of this field."""

    @property
    def universe(self) -> Tuple[str, ...]:
        return ()

    def check(self, value) -> Scalar:
        """Return ``value`` if it belongs to the field, else raise VariantMismatch."""
        if not self.contains(value):
            raise VariantMismatch(str(self), describe_variant(value))
        return value


class RationalField(ScalarField):
    """Arbitrary-precision rationals."""

    mode = RATIONAL_MODE

    def from_rational(self, value: Union[int, Fraction]) -> Fraction:
        return Fraction(value)

    def contains(self, value) -> bool:
        return isinstance(value, Fraction)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash(RATIONAL_MODE)

    def __repr__(self) -> str:
        return "RationalField()"

    def __str__(self) -> str:
        return "QQ"


class FunctionField(ScalarField):
    """Rational functions over QQ in a sorted universe of indeterminates."""

    mode = SYMBOLIC_MODE

    def __init__(self, universe: Iterable[str]):
        names = tuple(sorted(set(universe)))
        if not names:
            raise PreconditionError("a function field needs at least one indeterminate")
        self._universe = names
        self.ring = poly_ring(names)

    @property
    def universe(self) -> Tuple[str, ...]:
        return self._universe

    def from_rational(self, value: Union[int, Fraction]) -> RatFunc:
        return RatFunc.constant(self._universe, value)

    def variable(self, name: str) -> RatFunc:
        return RatFunc.variable(self._universe, name)

    def contains(self, value) -> bool:
        return isinstance(value, RatFunc) and value.ring == self.ring

    def __eq__(self, other) -> bool:
        return isinstance(other, FunctionField) and other.universe == self.universe

    def __hash__(self) -> int:
        return hash((SYMBOLIC_MODE, self._universe))

    def __repr__(self) -> str:
        return f"FunctionField({list(self._universe)!r})"

    def __str__(self) -> str:
        return f"QQ({', '.join(self._universe)})"


def field_for(mode: str, variables: Iterable[str] = ()) -> ScalarField:
    """
    Pick the field named by a ``scalar_mode`` and variable list.

    Args:
        mode: "rational" or "symbolic"
        variables: Indeterminate names (symbolic mode only)
    """
    variables = list(variables or [])
    if mode == RATIONAL_MODE:
        if variables:
            raise PreconditionError("rational scalar_mode takes no variables")
        return RationalField()
    if mode == SYMBOLIC_MODE:
        return FunctionField(variables)
    raise PreconditionError(f"unknown scalar_mode {mode!r}; expected 'rational' or 'symbolic'")


def field_of(value) -> ScalarField:
    """The field a scalar value lives in."""
    if isinstance(value, RatFunc):
        return FunctionField(value.universe)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return RationalField()
    raise VariantMismatch("a scalar", describe_variant(value))


def describe_variant(value) -> str:
    if isinstance(value, RatFunc):
        return f"QQ({', '.join(value.universe)})"
    if isinstance(value, Fraction):
        return "QQ"
    return type(value).__name__


_OPERATIONS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """
    Exact field arithmetic with strict variant checking.

    Args:
        a, b: Scalars of the same variant (and, for RatFunc, the same universe)
        op: One of "add", "sub", "mul", "div"

    Raises:
        VariantMismatch: If the operands live in different fields
        DivisionByZero: If dividing by zero
    """
    if op not in _OPERATIONS:
        raise PreconditionError(f"unknown operation {op!r}")
    if field_of(a) != field_of(b):
        raise VariantMismatch(describe_variant(a), describe_variant(b))
    if op == "div" and b == 0:
        raise DivisionByZero(f"division of {a} by zero")
    return _OPERATIONS[op](Fraction(a) if isinstance(a, int) else a,
                           Fraction(b) if isinstance(b, int) else b)
