"""
ratfunc.py
==========
Rational functions in finitely many named indeterminates over the rationals.

Numerators and denominators are sparse multivariate polynomials (sympy
``PolyElement`` over ``QQ`` with lexicographic order on the sorted
indeterminate names). Every ``RatFunc`` is kept reduced with the denominator's
leading coefficient equal to 1, but equality is decided by cross-multiplication.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from utils.error_handler import DivisionByZero, PreconditionError, VariantMismatch

logger = logging.getLogger(__name__)

# Sparse polynomial: a map from exponent vector to nonzero rational coefficient.
MultiPoly = PolyElement

Monomial = Dict[str, int]


@lru_cache(maxsize=None)
def poly_ring(universe: Tuple[str, ...]) -> PolyRing:
    """
    Polynomial ring over QQ for a fixed, sorted universe of indeterminates.

    Args:
        universe: Indeterminate names; must be sorted and duplicate free

    Returns:
        The (cached) sympy polynomial ring
    """
    if not universe:
        raise PreconditionError("a polynomial ring needs at least one indeterminate")
    if list(universe) != sorted(set(universe)):
        raise PreconditionError(f"universe must be sorted and duplicate free: {universe}")
    return PolyRing(list(universe), QQ, lex)


def to_qq(value: Union[int, Fraction]):
    """Convert an int or Fraction into a QQ ground element."""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(coeff) -> Fraction:
    """Convert a QQ ground element back into a Fraction."""
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def poly_terms(poly: MultiPoly) -> List[Tuple[Monomial, Fraction]]:
    """
    Terms of a polynomial in canonical (descending lex) order.

    Returns:
        List of (exponent map, coefficient); exponent maps omit zero exponents
    """
    names = [str(symbol) for symbol in poly.ring.symbols]
    terms = []
    for monom, coeff in poly.terms():
        exponents = {name: exp for name, exp in zip(names, monom) if exp}
        terms.append((exponents, from_qq(coeff)))
    return terms


def evaluate_poly(poly: MultiPoly, assignment: Mapping[str, Fraction]) -> Fraction:
    """Evaluate a polynomial at rational values for every indeterminate."""
    names = [str(symbol) for symbol in poly.ring.symbols]
    missing = [name for name in names if name not in assignment]
    if missing:
        raise PreconditionError(f"no value given for {', '.join(missing)}")
    values = [Fraction(assignment[name]) for name in names]
    total = Fraction(0)
    for monom, coeff in poly.iterterms():
        term = from_qq(coeff)
        for value, exp in zip(values, monom):
            if exp:
                term *= value ** exp
        total += term
    return total


class RatFunc:
    """An element of QQ(x_1, ..., x_m): a reduced fraction of two polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly = None):
        ring = num.ring
        if den is None:
            den = ring.one
        elif den.ring != ring:
            raise VariantMismatch(_describe_ring(ring), _describe_ring(den.ring))
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            num, den = ring.zero, ring.one
        elif not den.is_ground or den.LC != QQ.one:
            num, den = num.cancel(den)
            lc = den.LC
            if lc != QQ.one:
                num = num.quo_ground(lc)
                den = den.quo_ground(lc)
        self.num = num
        self.den = den

    # --- construction -------------------------------------------------------

    @classmethod
    def constant(cls, universe: Tuple[str, ...], value: Union[int, Fraction]) -> "RatFunc":
        ring = poly_ring(universe)
        return cls(ring.ground_new(to_qq(value)))

    @classmethod
    def variable(cls, universe: Tuple[str, ...], name: str) -> "RatFunc":
        ring = poly_ring(universe)
        if name not in universe:
            raise PreconditionError(f"{name!r} is not one of the indeterminates {list(universe)}")
        return cls(ring.gens[universe.index(name)])

    @classmethod
    def from_terms(
        cls,
        universe: Tuple[str, ...],
        terms: Iterable[Tuple[Monomial, Fraction]],
    ) -> "RatFunc":
        """Build a polynomial RatFunc from (exponent map, coefficient) pairs."""
        ring = poly_ring(universe)
        coefficients = {}
        for exponents, coeff in terms:
            monom = tuple(exponents.get(name, 0) for name in universe)
            coefficients[monom] = coefficients.get(monom, Fraction(0)) + Fraction(coeff)
        return cls(ring.from_dict({m: to_qq(c) for m, c in coefficients.items() if c}))

    # --- properties ---------------------------------------------------------

    @property
    def ring(self) -> PolyRing:
        return self.num.ring

    @property
    def universe(self) -> Tuple[str, ...]:
        return tuple(str(symbol) for symbol in self.ring.symbols)

    @property
    def is_polynomial(self) -> bool:
        return self.den == self.ring.one

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        """
        Evaluate at rational values for every indeterminate.

        Raises:
            DivisionByZero: If the denominator vanishes at the point
        """
        den = evaluate_poly(self.den, assignment)
        if den == 0:
            raise DivisionByZero(f"denominator of {self} vanishes at the given point")
        return evaluate_poly(self.num, assignment) / den

    # --- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.ring != self.ring:
                raise VariantMismatch(_describe_ring(self.ring), _describe_ring(other.ring))
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatFunc(self.ring.ground_new(to_qq(other)))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise DivisionByZero(f"division of {self} by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.num:
                raise DivisionByZero("zero to a negative power")
            return RatFunc(self.den ** -exponent, self.num ** -exponent)
        return RatFunc(self.num ** exponent, self.den ** exponent)

    # --- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc) and other.ring != self.ring:
            return False
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self) -> int:
        if self.is_polynomial and self.num.is_ground:
            return hash(from_qq(self.num.LC) if self.num else Fraction(0))
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        from scalar.text import format_scalar
        return f"RatFunc({format_scalar(self)!r})"

    def __str__(self) -> str:
        from scalar.text import format_scalar
        return format_scalar(self)


def _describe_ring(ring: PolyRing) -> str:
    return f"QQ({', '.join(str(s) for s in ring.symbols)})"
