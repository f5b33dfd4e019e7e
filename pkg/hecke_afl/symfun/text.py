"""Canonical text for Laurent polynomials, e.g. ``q^2*s1^3 - 3*s2``."""
from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from typing import Any

from sympy import Add, Symbol, SympifyError
from sympy.parsing.sympy_parser import parse_expr

from ..exceptions import InvalidInputError
from .laurent import QFIELD, LaurentPoly, Monomial, Q, qlaurent_terms


def graded_lex_key(mono: Monomial) -> tuple[int, Monomial]:
    return (sum(mono), mono)


def _power(name: str, exponent: int) -> str:
    if exponent == 1:
        return name
    return f"{name}^{exponent}"


def _monomial_text(names: Sequence[str], mono: Monomial) -> str:
    return "*".join(_power(n, e) for n, e in zip(names, mono) if e)


def _fraction_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _single_term(coeff: Fraction, q_exp: int, mono_text: str) -> tuple[str, str]:
    """(sign, body) for coeff*q^q_exp*monomial."""
    sign = "-" if coeff < 0 else "+"
    pieces = []
    magnitude = abs(coeff)
    if magnitude != 1 or (q_exp == 0 and not mono_text):
        pieces.append(_fraction_text(magnitude))
    if q_exp:
        pieces.append(_power("q", q_exp))
    if mono_text:
        pieces.append(mono_text)
    return sign, "*".join(pieces)


def format_qlaurent(value: Any, domain: Any = QFIELD) -> str:
    """Text of a coefficient in Q[q, 1/q], highest power of q first."""
    terms = qlaurent_terms(value, domain)
    if not terms:
        return "0"
    return _join(
        [_single_term(terms[e], e, "") for e in sorted(terms, reverse=True)],
    )


def _join(parts: list[tuple[str, str]]) -> str:
    text = ""
    for index, (sign, body) in enumerate(parts):
        if index == 0:
            text = body if sign == "+" else f"-{body}"
        else:
            text += f" {sign} {body}"
    return text


def format_laurent(poly: LaurentPoly) -> str:
    """Canonical text: monomials in descending graded-lex order."""
    if not poly:
        return "0"
    parts: list[tuple[str, str]] = []
    for mono in sorted(poly.terms(), key=graded_lex_key, reverse=True):
        mono_text = _monomial_text(poly.names, mono)
        try:
            q_terms = qlaurent_terms(poly.coefficient(mono), poly.domain)
        except InvalidInputError:
            expr = str(poly.domain.to_sympy(poly.coefficient(mono))).replace("**", "^")
            body = f"({expr})" + (f"*{mono_text}" if mono_text else "")
            parts.append(("+", body))
            continue
        if len(q_terms) == 1:
            ((q_exp, coeff),) = q_terms.items()
            parts.append(_single_term(coeff, q_exp, mono_text))
            continue
        inner = format_qlaurent(poly.coefficient(mono), poly.domain)
        if not mono_text:
            parts.extend(
                _single_term(q_terms[e], e, "") for e in sorted(q_terms, reverse=True)
            )
        else:
            parts.append(("+", f"({inner})*{mono_text}"))
    return _join(parts)


def parse_laurent(text: str, names: Sequence[str], domain: Any = QFIELD) -> LaurentPoly:
    """Inverse of :func:`format_laurent`; accepts ``^`` or ``**`` for powers."""
    symbols = {name: Symbol(name) for name in names}
    local = {**symbols, "q": Q}
    try:
        expr = parse_expr(text.replace("^", "**"), local_dict=local).expand()
    except (SyntaxError, SympifyError, TypeError, ValueError) as err:
        raise InvalidInputError(f"cannot parse {text!r}") from err
    gens = [symbols[n] for n in names]
    if expr.free_symbols - set(gens) - {Q}:
        raise InvalidInputError(f"unknown symbols in {text!r}")
    terms: dict[Monomial, Any] = {}
    for term in Add.make_args(expr):
        if term == 0:
            continue
        coeff, rest = term.as_independent(*gens, as_Add=False) if gens else (term, 1)
        powers = {} if rest == 1 else rest.as_powers_dict()
        mono = tuple(int(powers.get(g, 0)) for g in gens)
        if set(powers) - set(gens):
            raise InvalidInputError(f"term {term} is not a Laurent monomial")
        value = domain.from_sympy(coeff)
        terms[mono] = terms.get(mono, domain.zero) + value
    return LaurentPoly(names, terms, domain)
