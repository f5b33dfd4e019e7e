"""Elements of F known modulo a power of p, for norm equations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import structlog
from sympy import legendre_symbol, sqrt_mod

from ..exceptions import InvalidInputError, PrecisionError
from ..logging_utils import LogTagging, LogType
from .config import PrimeConfig
from .element import FieldElement, Scalar, _int_valuation, rational_valuation

logger = structlog.get_logger(__name__)
_tags = LogTagging({"component": "localfield"})


def reduce_rational(value: Scalar, modulus: int) -> int:
    """Image of a p-integral rational in Z/modulus."""
    value = Fraction(value)
    return value.numerator * pow(value.denominator, -1, modulus) % modulus


@dataclass(frozen=True, slots=True)
class TruncatedElement:
    """p^shift * (xbar + ybar*delta) with xbar, ybar known mod p^precision.

    ``known_valuation_bound`` is the valuation below which every digit is
    known; valuations at or beyond it raise ``PrecisionError``.
    """

    xbar: int
    ybar: int
    config: PrimeConfig
    precision: int
    shift: int = 0

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise PrecisionError(f"precision must be at least 1, got {self.precision}")
        modulus = self.modulus
        object.__setattr__(self, "xbar", self.xbar % modulus)
        object.__setattr__(self, "ybar", self.ybar % modulus)

    @property
    def modulus(self) -> int:
        return self.config.p ** self.precision

    @property
    def known_valuation_bound(self) -> int:
        return self.shift + self.precision

    @classmethod
    def from_exact(cls, value: FieldElement, precision: int) -> TruncatedElement:
        config = value.config
        if not value:
            return cls(0, 0, config, precision)
        shift = int(value.valuation())
        unit = value.unit_part()
        modulus = config.p ** precision
        return cls(
            reduce_rational(unit.x, modulus),
            reduce_rational(unit.y, modulus),
            config,
            precision,
            shift,
        )

    def is_zero(self) -> bool:
        """True when indistinguishable from zero at this precision."""
        return self.xbar == 0 and self.ybar == 0

    def valuation(self) -> int:
        if self.is_zero():
            raise PrecisionError(
                f"valuation is at least {self.known_valuation_bound}, beyond working precision",
            )
        p = self.config.p
        inner = min(
            _int_valuation(self.xbar, p) if self.xbar else self.precision,
            _int_valuation(self.ybar, p) if self.ybar else self.precision,
        )
        return self.shift + inner

    def conj(self) -> TruncatedElement:
        return TruncatedElement(self.xbar, -self.ybar, self.config, self.precision, self.shift)

    def __neg__(self) -> TruncatedElement:
        return TruncatedElement(-self.xbar, -self.ybar, self.config, self.precision, self.shift)

    def _lift(self, other: object) -> TruncatedElement | None:
        if isinstance(other, TruncatedElement):
            return other
        if isinstance(other, FieldElement):
            return TruncatedElement.from_exact(other, self.precision)
        return None

    def __mul__(self, other: object) -> TruncatedElement:
        if isinstance(other, (int, Fraction)):
            other = FieldElement.of(other, self.config)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if isinstance(other, FieldElement) and not other:
            return TruncatedElement(0, 0, self.config, self.precision, self.shift)
        precision = min(self.precision, o.precision)
        eps = self.config.epsilon
        return TruncatedElement(
            self.xbar * o.xbar + eps * self.ybar * o.ybar,
            self.xbar * o.ybar + self.ybar * o.xbar,
            self.config,
            precision,
            self.shift + o.shift,
        )

    __rmul__ = __mul__

    def __add__(self, other: object) -> TruncatedElement:
        if isinstance(other, (int, Fraction)):
            other = FieldElement.of(other, self.config)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if isinstance(other, FieldElement) and not other:
            return self
        shift = min(self.shift, o.shift)
        precision = min(self.precision + self.shift, o.precision + o.shift) - shift
        p = self.config.p
        scale_self = p ** (self.shift - shift)
        scale_other = p ** (o.shift - shift)
        return TruncatedElement(
            self.xbar * scale_self + o.xbar * scale_other,
            self.ybar * scale_self + o.ybar * scale_other,
            self.config,
            precision,
            shift,
        )

    __radd__ = __add__

    def __sub__(self, other: object) -> TruncatedElement:
        if isinstance(other, (int, Fraction)):
            other = FieldElement.of(other, self.config)
        if isinstance(other, (FieldElement, TruncatedElement)):
            return self + (-other)
        return NotImplemented

    def norm(self) -> TruncatedElement:
        return self * self.conj()

    def agrees_with(self, value: FieldElement) -> bool:
        """True when ``value`` reduces to this element at the working precision."""
        return (self - value).is_zero()


def solve_norm(target: FieldElement | Scalar, precision: int, config: PrimeConfig) -> TruncatedElement:
    """Find c with N(c) = target mod p^precision for a unit target in F_0.

    Picks y with target + epsilon*y^2 a nonzero square mod p and lifts its
    square root to Z/p^precision, so x^2 - epsilon*y^2 = target.
    """
    if precision < 1:
        raise PrecisionError(f"precision must be at least 1, got {precision}")
    target = FieldElement.of(target, config)
    if not target.in_base_field() or rational_valuation(target.x, config.p) != 0:
        raise InvalidInputError(f"solve_norm needs a unit of F_0, got {target}")
    p = config.p
    modulus = p ** precision
    t = reduce_rational(target.x, modulus)
    for y in range(p):
        a = (t + config.epsilon * y * y) % modulus
        if a % p and legendre_symbol(a % p, p) == 1:
            x = sqrt_mod(a, modulus)
            result = TruncatedElement(x, y, config, precision)
            logger.debug(
                "norm equation solved",
                target=str(target),
                precision=precision,
                **_tags.get_log_kwargs(LogType.ARITHMETIC),
            )
            return result
    # unreachable: the norm is surjective on units of an unramified extension
    raise PrecisionError(f"no residue solution for norm equation with target {target}")
