"""
text.py
=======
Reading and writing scalars as text.

Output is canonical: rationals as ``p/q`` or ``p``, polynomials as a sum of
monomials in descending lexicographic order (``2*a^2*b - 1/2``), and proper
rational functions as ``(numerator)/(denominator)``. Input accepts any
arithmetic expression over integers and the universe's names using
``+ - * / ^`` and parentheses, which covers the documented grammar. The
Unicode minus sign is accepted as well as the ASCII hyphen.
"""

import re
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from scalar.field import FunctionField, RationalField, Scalar, ScalarField
from scalar.ratfunc import RatFunc, poly_terms
from utils.error_handler import DivisionByZero, ParseError

UNICODE_MINUS = "−"

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_poly(poly) -> str:
    terms = poly_terms(poly)
    if not terms:
        return "0"
    parts: List[str] = []
    for index, (exponents, coeff) in enumerate(terms):
        factors = [name if exp == 1 else f"{name}^{exp}" for name, exp in exponents.items()]
        magnitude = abs(coeff)
        if factors and magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([format_rational(magnitude)] + factors)
        if index == 0:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(parts)


def format_scalar(value: Scalar) -> str:
    """
    Deterministic canonical text for a scalar (ASCII only).

    Examples:
        Fraction(5, 6) -> "5/6"; Fraction(-4) -> "-4"; x + y -> "x + y"
    """
    if isinstance(value, RatFunc):
        if value.is_polynomial:
            return format_poly(value.num)
        return f"({format_poly(value.num)})/({format_poly(value.den)})"
    return format_rational(Fraction(value))


class _Parser:
    """Recursive-descent parser evaluating directly into a scalar field."""

    def __init__(self, text: str, field: ScalarField):
        self.text = text
        self.field = field
        self.tokens = self._tokenize(text.replace(UNICODE_MINUS, "-"))
        self.index = 0

    def _tokenize(self, text: str) -> List[Tuple[str, str, int]]:
        tokens = []
        position = 0
        while position < len(text):
            if text[position:].strip() == "":
                break
            match = _TOKEN.match(text, position)
            if not match:
                offset = len(text[position:]) - len(text[position:].lstrip())
                raise ParseError("unexpected character", self.text, position + offset)
            kind = match.lastgroup
            tokens.append((kind, match.group(kind), match.start(kind)))
            position = match.end()
        return tokens

    def _peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _position(self) -> int:
        token = self._peek()
        return token[2] if token else len(self.text)

    def _accept(self, symbol: str) -> bool:
        token = self._peek()
        if token and token[0] == "op" and token[1] == symbol:
            self.index += 1
            return True
        return False

    def parse(self) -> Scalar:
        if not self.tokens:
            raise ParseError("empty scalar", self.text, 0)
        value = self._expr()
        if self._peek() is not None:
            raise ParseError("unexpected token", self.text, self._position())
        return value

    def _expr(self) -> Scalar:
        value = self._term()
        while True:
            if self._accept("+"):
                value = value + self._term()
            elif self._accept("-"):
                value = value - self._term()
            else:
                return value

    def _term(self) -> Scalar:
        value = self._unary()
        while True:
            if self._accept("*"):
                value = value * self._unary()
            elif self._peek() is not None and self._peek()[1] == "/":
                position = self._position()
                self.index += 1
                divisor = self._unary()
                if divisor == 0:
                    raise ParseError("division by zero", self.text, position)
                value = value / divisor
            else:
                return value

    def _unary(self) -> Scalar:
        if self._accept("-"):
            return -self._unary()
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self) -> Scalar:
        base = self._atom()
        if self._accept("^"):
            token = self._peek()
            if token is None or token[0] != "int":
                raise ParseError("expected a non-negative integer exponent", self.text, self._position())
            self.index += 1
            return base ** int(token[1])
        return base

    def _atom(self) -> Scalar:
        token = self._peek()
        if token is None:
            raise ParseError("unexpected end of input", self.text, len(self.text))
        kind, text, position = token
        if kind == "int":
            self.index += 1
            return self.field.from_int(int(text))
        if kind == "name":
            self.index += 1
            if text not in self.field.universe:
                raise ParseError(f"unknown indeterminate {text!r}", self.text, position)
            return self.field.variable(text)
        if self._accept("("):
            value = self._expr()
            if not self._accept(")"):
                raise ParseError("expected ')'", self.text, self._position())
            return value
        raise ParseError(f"unexpected {text!r}", self.text, position)


def parse_in_field(text: str, field: ScalarField) -> Scalar:
    """Parse ``text`` into an element of ``field``."""
    try:
        return _Parser(text, field).parse()
    except DivisionByZero as error:
        raise ParseError(error.message, text, 0)


def parse_scalar(text: str, universe: Iterable[str] = ()) -> Scalar:
    """
    Parse scalar text.

    Args:
        text: Scalar text, e.g. "-3/4", "2*a^2*b - 1/2", "(a+b)/c"
        universe: Indeterminate names; empty means the rationals

    Returns:
        Fraction for an empty universe, otherwise a RatFunc over the universe

    Raises:
        ParseError: With the character position of the problem
    """
    universe = list(universe or [])
    field = FunctionField(universe) if universe else RationalField()
    return parse_in_field(text, field)
