"""Sparse multivariate Laurent polynomials with exact coefficients.

Terms are stored as ``{exponent tuple: coefficient}``; exponents may be
negative. Products are delegated to a sympy ``PolyRing`` after shifting all
exponents to be non-negative.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache
from typing import Any

from sympy import QQ, Expr, Integer, Poly, Rational, Symbol, fraction, together
from sympy.polys.rings import PolyRing, ring

from ..constants import Q_SYMBOL_NAME
from ..exceptions import InvalidInputError

Monomial = tuple[int, ...]

Q = Symbol(Q_SYMBOL_NAME)
QFIELD = QQ.frac_field(Q)


@lru_cache(maxsize=None)
def _poly_ring(names: tuple[str, ...], domain: Any) -> PolyRing:
    return ring(",".join(names), domain)[0]


def coerce_coefficient(value: Any, domain: Any = QFIELD) -> Any:
    """Convert ints, Fractions and sympy expressions into ``domain``."""
    if isinstance(value, Fraction):
        return domain.from_sympy(Rational(value.numerator, value.denominator))
    if isinstance(value, Expr):
        return domain.from_sympy(value)
    if isinstance(value, int):
        return domain.convert(value)
    if domain.of_type(value):
        return value
    return domain.convert(value)


def qlaurent(value: Any) -> Any:
    """Element of Q(q) from an int, Fraction or expression in ``q``."""
    return coerce_coefficient(value, QFIELD)


def qlaurent_terms(value: Any, domain: Any = QFIELD) -> dict[int, Fraction]:
    """Exponent -> rational map of a Laurent polynomial in q.

    Raises:
        InvalidInputError: when the value is not a Laurent polynomial in q.
    """
    expr = domain.to_sympy(value)
    if expr == 0:
        return {}
    num, den = fraction(together(expr))
    den_poly = Poly(den, Q)
    if len(den_poly.terms()) != 1:
        raise InvalidInputError(f"{expr} is not a Laurent polynomial in q")
    (shift,), scale = den_poly.terms()[0]
    out: dict[int, Fraction] = {}
    for (exp,), coeff in Poly(num, Q).terms():
        ratio = Rational(coeff) / Rational(scale)
        out[exp - shift] = Fraction(int(ratio.p), int(ratio.q))
    return out


def specialize_coefficient(value: Any, q_value: Any, domain: Any = QFIELD) -> Fraction:
    """Rational value of a coefficient at q = q_value (q_value may be None for constants)."""
    expr = domain.to_sympy(value)
    if Q in expr.free_symbols:
        if q_value is None:
            raise InvalidInputError("coefficients depend on q; pass q_value")
        q_value = Fraction(q_value)
        expr = expr.subs(Q, Rational(q_value.numerator, q_value.denominator))
    if not isinstance(expr, Rational):
        raise InvalidInputError(f"coefficient {expr} did not specialize to a rational")
    return Fraction(int(expr.p), int(expr.q))


class LaurentPoly:
    """Immutable Laurent polynomial in the variables ``names`` over ``domain``."""

    __slots__ = ("_terms", "domain", "names")

    def __init__(
        self,
        names: Sequence[str],
        terms: Mapping[Monomial, Any] | None = None,
        domain: Any = QFIELD,
    ) -> None:
        self.names = tuple(names)
        self.domain = domain
        clean: dict[Monomial, Any] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != len(self.names):
                raise InvalidInputError(
                    f"monomial {mono} does not match variables {self.names}",
                )
            coeff = coerce_coefficient(coeff, domain)
            if coeff:
                clean[mono] = coeff
        self._terms = clean

    @classmethod
    def _raw(cls, names: tuple[str, ...], terms: dict[Monomial, Any], domain: Any) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj.names = names
        obj.domain = domain
        obj._terms = {m: c for m, c in terms.items() if c}
        return obj

    @classmethod
    def zero(cls, names: Sequence[str], domain: Any = QFIELD) -> LaurentPoly:
        return cls(names, {}, domain)

    @classmethod
    def constant(cls, names: Sequence[str], value: Any, domain: Any = QFIELD) -> LaurentPoly:
        return cls(names, {(0,) * len(names): value}, domain)

    @classmethod
    def monomial(
        cls, names: Sequence[str], exponents: Sequence[int], coeff: Any = 1, domain: Any = QFIELD,
    ) -> LaurentPoly:
        return cls(names, {tuple(exponents): coeff}, domain)

    @classmethod
    def variable(cls, names: Sequence[str], index: int, domain: Any = QFIELD) -> LaurentPoly:
        exps = [0] * len(names)
        exps[index] = 1
        return cls.monomial(names, exps, 1, domain)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def terms(self) -> dict[Monomial, Any]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, Any]]:
        return sorted(self._terms.items())

    def coefficient(self, mono: Sequence[int]) -> Any:
        return self._terms.get(tuple(mono), self.domain.zero)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _check_compatible(self, other: LaurentPoly) -> None:
        if other.names != self.names or other.domain != self.domain:
            raise InvalidInputError(
                f"incompatible Laurent polynomials: {self.names} vs {other.names}",
            )

    def _wrap(self, other: Any) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            self._check_compatible(other)
            return other
        return LaurentPoly.constant(self.names, other, self.domain)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.names == other.names and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(self.names, other, self.domain)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.names, frozenset(self._terms.items())))

    def __add__(self, other: Any) -> LaurentPoly:
        other = self._wrap(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            out[mono] = out.get(mono, self.domain.zero) + coeff
        return LaurentPoly._raw(self.names, out, self.domain)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.names, {m: -c for m, c in self._terms.items()}, self.domain)

    def __sub__(self, other: Any) -> LaurentPoly:
        return self + (-self._wrap(other))

    def __rsub__(self, other: Any) -> LaurentPoly:
        return self._wrap(other) - self

    def _lift(self) -> tuple[Any, Monomial]:
        """Shift to a genuine polynomial: returns (ring element, shift)."""
        lows = tuple(
            min(0, min(m[i] for m in self._terms)) if self._terms else 0
            for i in range(self.nvars)
        )
        poly_ring = _poly_ring(self.names, self.domain)
        shifted = {
            tuple(e - low for e, low in zip(mono, lows)): coeff
            for mono, coeff in self._terms.items()
        }
        return poly_ring.from_dict(shifted), lows

    def _unlift(self, element: Any, shift: Monomial) -> LaurentPoly:
        terms = {
            tuple(e + s for e, s in zip(mono, shift)): coeff
            for mono, coeff in element.items()
        }
        return LaurentPoly._raw(self.names, terms, self.domain)

    def __mul__(self, other: Any) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            scalar = coerce_coefficient(other, self.domain)
            return LaurentPoly._raw(
                self.names, {m: c * scalar for m, c in self._terms.items()}, self.domain,
            )
        self._check_compatible(other)
        if not self or not other:
            return LaurentPoly.zero(self.names, self.domain)
        if self.nvars == 0:
            return LaurentPoly._raw(
                self.names, {(): self._terms[()] * other._terms[()]}, self.domain,
            )
        left, left_shift = self._lift()
        right, right_shift = other._lift()
        return self._unlift(left * right, tuple(a + b for a, b in zip(left_shift, right_shift)))

    __rmul__ = __mul__

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def inverse_monomial(self) -> LaurentPoly:
        if not self.is_monomial():
            raise InvalidInputError("only monomials are invertible")
        ((mono, coeff),) = self._terms.items()
        return LaurentPoly._raw(
            self.names, {tuple(-e for e in mono): self.domain.one / coeff}, self.domain,
        )

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            return self.inverse_monomial() ** (-exponent)
        if exponent == 0:
            return LaurentPoly.constant(self.names, 1, self.domain)
        if self.nvars == 0:
            return LaurentPoly._raw(self.names, {(): self._terms.get((), self.domain.zero) ** exponent}, self.domain)
        if self.is_monomial():
            ((mono, coeff),) = self._terms.items()
            return LaurentPoly._raw(
                self.names, {tuple(e * exponent for e in mono): coeff**exponent}, self.domain,
            )
        base, shift = self._lift()
        return self._unlift(base**exponent, tuple(s * exponent for s in shift))

    def leading_term(self) -> tuple[Monomial, Any]:
        """Lexicographically largest monomial and its coefficient."""
        if not self._terms:
            raise InvalidInputError("zero polynomial has no leading term")
        mono = max(self._terms)
        return mono, self._terms[mono]

    def min_exponent(self) -> int:
        return min((e for mono in self._terms for e in mono), default=0)

    def map_coefficients(self, func: Callable[[Any], Any], domain: Any | None = None) -> LaurentPoly:
        domain = domain or self.domain
        return LaurentPoly(self.names, {m: func(c) for m, c in self._terms.items()}, domain)

    def map_monomials(self, func: Callable[[Monomial], Monomial]) -> LaurentPoly:
        out: dict[Monomial, Any] = {}
        for mono, coeff in self._terms.items():
            image = func(mono)
            out[image] = out.get(image, self.domain.zero) + coeff
        return LaurentPoly._raw(self.names, out, self.domain)

    def permute(self, permutation: Sequence[int]) -> LaurentPoly:
        """Rename variable i to variable permutation[i]."""
        def move(mono: Monomial) -> Monomial:
            out = [0] * self.nvars
            for i, e in enumerate(mono):
                out[permutation[i]] = e
            return tuple(out)

        return self.map_monomials(move)

    def swap(self, i: int, j: int) -> LaurentPoly:
        perm = list(range(self.nvars))
        perm[i], perm[j] = j, i
        return self.permute(perm)

    def invert_variable(self, index: int) -> LaurentPoly:
        return self.map_monomials(
            lambda mono: tuple(-e if i == index else e for i, e in enumerate(mono)),
        )

    def compose(self, images: Sequence[LaurentPoly], target_names: Sequence[str] | None = None) -> LaurentPoly:
        """Substitute variable i by ``images[i]``; negative powers need monomial images."""
        if len(images) != self.nvars:
            raise InvalidInputError(f"expected {self.nvars} images, got {len(images)}")
        names = tuple(target_names) if target_names is not None else images[0].names
        powers: dict[tuple[int, int], LaurentPoly] = {}

        def power(i: int, e: int) -> LaurentPoly:
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] ** e
            return powers[key]

        result = LaurentPoly.zero(names, self.domain)
        for mono, coeff in self._terms.items():
            term = LaurentPoly.constant(names, coeff, self.domain)
            for i, e in enumerate(mono):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def specialize_q(self, q_value: Any) -> LaurentPoly:
        """Replace the formal q by a number; the result keeps the same domain."""
        return self.map_coefficients(lambda c: specialize_coefficient(c, q_value, self.domain))

    def evaluate(self, point: Sequence[Any], q_value: Any = None) -> Fraction:
        """Exact value at a point of nonzero rationals (q specialized when given)."""
        if len(point) != self.nvars:
            raise InvalidInputError(f"point has {len(point)} coordinates, expected {self.nvars}")
        coords = [Fraction(c) for c in point]
        if any(c == 0 for c in coords):
            raise InvalidInputError("evaluation point must have nonzero coordinates")
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            value = specialize_coefficient(coeff, q_value, self.domain)
            for c, e in zip(coords, mono):
                value *= c**e
            total += value
        return total

    def to_sympy(self, symbols: Iterable[Symbol] | None = None) -> Expr:
        syms = list(symbols) if symbols is not None else [Symbol(n) for n in self.names]
        expr = Integer(0)
        for mono, coeff in self._terms.items():
            term = self.domain.to_sympy(coeff)
            for s, e in zip(syms, mono):
                term *= s**e
            expr += term
        return expr

    def __repr__(self) -> str:
        from .text import format_laurent

        return f"LaurentPoly({format_laurent(self)})"
