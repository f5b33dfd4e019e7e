"""Exact elements of F = Q_p(delta), delta^2 = epsilon."""
from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from tokenize import TokenError

from sympy import Expr, Integer, Poly, PolynomialError, Rational, S, Symbol, SympifyError, fraction, rem, together
from sympy.parsing.sympy_parser import parse_expr

from ..constants import DELTA_SYMBOL_NAME, VAL_INFINITY
from ..exceptions import FieldDivisionError, InvalidInputError
from .config import PrimeConfig

Scalar = int | Fraction

_DELTA = Symbol(DELTA_SYMBOL_NAME)
_ALLOWED_TEXT = re.compile(rf"[0-9{DELTA_SYMBOL_NAME}\s+\-*/^()]+")
# names the parser may emit after the character check
_PARSE_GLOBALS = {"Integer": Integer, "Rational": Rational, "Symbol": Symbol}
_NON_FINITE = (S.ComplexInfinity, S.NaN, S.Infinity, S.NegativeInfinity)


def rational_valuation(value: Scalar, p: int) -> int | float:
    """p-adic valuation of a rational, ``VAL_INFINITY`` for zero."""
    value = Fraction(value)
    if value == 0:
        return VAL_INFINITY
    return _int_valuation(value.numerator, p) - _int_valuation(value.denominator, p)


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    count = 0
    while n % p == 0:
        n //= p
        count += 1
    return count


def format_fraction(value: Fraction) -> str:
    """``num/den`` text used in reports."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, slots=True, eq=False)
class FieldElement:
    """x + y*delta with rational x, y."""

    x: Fraction
    y: Fraction
    config: PrimeConfig

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    @classmethod
    def of(cls, value: FieldElement | Scalar, config: PrimeConfig) -> FieldElement:
        if isinstance(value, FieldElement):
            return value
        return cls(Fraction(value), Fraction(0), config)

    @classmethod
    def delta(cls, config: PrimeConfig) -> FieldElement:
        return cls(Fraction(0), Fraction(1), config)

    @classmethod
    def parse(cls, text: str, config: PrimeConfig) -> FieldElement:
        """Parse ``x + y*d`` where ``d`` stands for delta.

        Sums, products, integer powers and quotients of rationals and ``d``
        are accepted; powers of d reduce via d^2 = epsilon.

        Raises:
            InvalidInputError: for other characters, malformed or non-finite
                expressions and division by zero.
        """
        if not _ALLOWED_TEXT.fullmatch(text):
            raise InvalidInputError(
                f"field element {text!r} may only use digits, {DELTA_SYMBOL_NAME}, + - * / ^ and parentheses",
            )
        try:
            expr = parse_expr(
                text.replace("^", "**"),
                local_dict={DELTA_SYMBOL_NAME: _DELTA},
                global_dict=dict(_PARSE_GLOBALS),
            )
        except (SyntaxError, TypeError, ValueError, TokenError, SympifyError) as err:
            raise InvalidInputError(f"cannot parse field element {text!r}") from err
        if expr.has(*_NON_FINITE):
            raise InvalidInputError(f"{text!r} is not a finite field element")
        try:
            numerator, denominator = (cls._reduce_polynomial(part, config) for part in fraction(together(expr)))
        except PolynomialError as err:
            raise InvalidInputError(f"{text!r} is not a rational function of {DELTA_SYMBOL_NAME}") from err
        if numerator is None or denominator is None:
            raise InvalidInputError(f"coefficients of {text!r} must be rational")
        if not denominator:
            raise InvalidInputError(f"{text!r} divides by zero")
        return numerator / denominator

    @classmethod
    def _reduce_polynomial(cls, expr: Expr, config: PrimeConfig) -> FieldElement | None:
        reduced = Poly(rem(expr.expand(), _DELTA**2 - config.epsilon, _DELTA), _DELTA)
        coeffs = [reduced.coeff_monomial(1), reduced.coeff_monomial(_DELTA)]
        if not all(isinstance(c, Rational) for c in coeffs):
            return None
        x, y = (Fraction(int(c.p), int(c.q)) for c in coeffs)
        return cls(x, y, config)

    def _coerce(self, other: object) -> FieldElement | None:
        if isinstance(other, FieldElement):
            if other.config != self.config:
                raise InvalidInputError("field elements over different configurations")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(Fraction(other), Fraction(0), self.config)
        return None

    def __add__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.x + o.x, self.y + o.y, self.config)

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.x, -self.y, self.config)

    def __sub__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.x - o.x, self.y - o.y, self.config)

    def __rsub__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        eps = self.config.epsilon
        return FieldElement(
            self.x * o.x + eps * self.y * o.y,
            self.x * o.y + self.y * o.x,
            self.config,
        )

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        n = self.x * self.x - self.config.epsilon * self.y * self.y
        if n == 0:
            raise FieldDivisionError("inverse of zero")
        return FieldElement(self.x / n, -self.y / n, self.config)

    def __truediv__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> FieldElement:
        base = self if exponent >= 0 else self.inverse()
        result = FieldElement.of(1, self.config)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other) if isinstance(other, (FieldElement, int, Fraction)) else None
        if o is None:
            return NotImplemented
        return self.x == o.x and self.y == o.y

    def __hash__(self) -> int:
        # equal to ints and Fractions, so hash like them
        if self.y == 0:
            return hash(self.x)
        return hash((self.x, self.y, self.config.p, self.config.epsilon))

    def __bool__(self) -> bool:
        return bool(self.x) or bool(self.y)

    def conj(self) -> FieldElement:
        return FieldElement(self.x, -self.y, self.config)

    def norm(self) -> FieldElement:
        return FieldElement(self.x * self.x - self.config.epsilon * self.y * self.y, 0, self.config)

    def trace(self) -> FieldElement:
        return FieldElement(2 * self.x, 0, self.config)

    def valuation(self) -> int | float:
        if not self:
            return VAL_INFINITY
        return min(rational_valuation(self.x, self.config.p), rational_valuation(self.y, self.config.p))

    def in_base_field(self) -> bool:
        return self.y == 0

    def unit_part(self) -> FieldElement:
        """self / p^val(self)."""
        v = self.valuation()
        if v == VAL_INFINITY:
            raise FieldDivisionError("zero has no unit part")
        return self * FieldElement.of(Fraction(self.config.p) ** (-v), self.config)

    def __str__(self) -> str:
        if self.y == 0:
            return str(self.x)
        if self.x == 0:
            return f"{self.y}*d"
        sign = "-" if self.y < 0 else "+"
        return f"{self.x} {sign} {abs(self.y)}*d"

    def __repr__(self) -> str:
        return f"FieldElement({self})"

    def as_dict(self) -> dict[str, str]:
        return {"x": format_fraction(self.x), "y": format_fraction(self.y)}


def val(a: FieldElement) -> int | float:
    return a.valuation()


def eta(a: FieldElement) -> int:
    """Quadratic character of F_0^x attached to F/F_0: (-1)^val(a)."""
    if not a.in_base_field():
        raise InvalidInputError(f"eta is defined on F_0, got {a}")
    if not a:
        raise InvalidInputError("eta of zero")
    return -1 if a.valuation() % 2 else 1


def determinant(matrix: Sequence[Sequence[FieldElement]]) -> FieldElement:
    """Exact determinant by Gaussian elimination over F."""
    rows = [list(row) for row in matrix]
    size = len(rows)
    if size == 0 or any(len(row) != size for row in rows):
        raise InvalidInputError("determinant needs a non-empty square matrix")
    config = rows[0][0].config
    det = FieldElement.of(1, config)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            return FieldElement.of(0, config)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det = det * rows[col][col]
        inv = rows[col][col].inverse()
        for r in range(col + 1, size):
            if rows[r][col]:
                factor = rows[r][col] * inv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def eta_tilde_det(matrix: Sequence[Sequence[FieldElement]]) -> int:
    """(-1)^val(det M) for invertible M over F."""
    det = determinant(matrix)
    if not det:
        raise InvalidInputError("eta_tilde_det of a singular matrix")
    return -1 if det.valuation() % 2 else 1
