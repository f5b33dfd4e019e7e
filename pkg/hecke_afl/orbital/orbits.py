"""Regular semisimple orbits in S_2 and their matching unitary elements."""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from random import Random

import structlog

from ..constants import MATCHING_PRECISION_MARGIN
from ..exceptions import InvalidInputError, NotRegularSemisimpleError, PrecisionError
from ..localfield import FieldElement, PrimeConfig, TruncatedElement, solve_norm
from ..logging_utils import LogTagging, LogType

logger = structlog.get_logger(__name__)
_tags = LogTagging({"component": "orbital"})

Matrix = tuple[tuple[FieldElement, FieldElement], tuple[FieldElement, FieldElement]]

SPLIT = "split"
NONSPLIT = "nonsplit"


def _conj_matrix(matrix: Matrix) -> Matrix:
    return tuple(tuple(entry.conj() for entry in row) for row in matrix)  # type: ignore[return-value]


def _matmul(left: Sequence[Sequence], right: Sequence[Sequence]) -> tuple[tuple, ...]:
    return tuple(
        tuple(left[i][0] * right[0][j] + left[i][1] * right[1][j] for j in range(2))
        for i in range(2)
    )


@dataclass(frozen=True)
class SOrbit:
    """gamma = [[a, b], [c, d]] in S_2(F_0): gamma * conj(gamma) = 1, with bc != 0."""

    gamma: Matrix

    def __post_init__(self) -> None:
        gamma = tuple(tuple(row) for row in self.gamma)
        if len(gamma) != 2 or any(len(row) != 2 for row in gamma):
            raise InvalidInputError("gamma must be a 2 x 2 matrix")
        object.__setattr__(self, "gamma", gamma)
        product = _matmul(gamma, _conj_matrix(gamma))
        if not (product[0][0] == 1 and product[1][1] == 1 and product[0][1] == 0 and product[1][0] == 0):
            raise InvalidInputError("gamma * conj(gamma) is not the identity")
        if not (self.b * self.c):
            raise NotRegularSemisimpleError("bc = 0: gamma is not regular semisimple")

    @property
    def config(self) -> PrimeConfig:
        return self.gamma[0][0].config

    @property
    def a(self) -> FieldElement:
        return self.gamma[0][0]

    @property
    def b(self) -> FieldElement:
        return self.gamma[0][1]

    @property
    def c(self) -> FieldElement:
        return self.gamma[1][0]

    @property
    def d(self) -> FieldElement:
        return self.gamma[1][1]

    @property
    def r(self) -> int:
        """v(1 - a conj(a))."""
        return int((1 - self.a.norm()).valuation())

    @property
    def normalized(self) -> bool:
        return self.c.valuation() == 0

    def invariants(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        return self.a, self.d, self.b * self.c

    def as_dict(self) -> dict[str, object]:
        return {"a": str(self.a), "b": str(self.b), "r": self.r}


def make_gamma(a: FieldElement, b: FieldElement) -> SOrbit:
    """gamma(a, b) = [[a, b], [(1 - Na)/conj(b), -conj(a) b / conj(b)]].

    v(c) = v(1 - Na) - v(b), so the orbit is normalized when v(b) = v(1 - Na).

    Raises:
        NotRegularSemisimpleError: when Na = 1 or b = 0.
    """
    if not b:
        raise NotRegularSemisimpleError("b must be nonzero")
    one_minus_norm = 1 - a.norm()
    if not one_minus_norm:
        raise NotRegularSemisimpleError(f"N({a}) = 1: gamma(a, b) is not regular semisimple")
    b_bar = b.conj()
    c = one_minus_norm / b_bar
    d = -(a.conj() * b) / b_bar
    return SOrbit(((a, b), (c, d)))


def match_class(orbit: SOrbit) -> str:
    """``split`` when v(1 - a conj(a)) is even, ``nonsplit`` when odd."""
    return NONSPLIT if orbit.r % 2 else SPLIT


def transfer_factor(orbit: SOrbit) -> int:
    """omega(gamma) = (-1)^v(b)."""
    return -1 if int(orbit.b.valuation()) % 2 else 1


def _random_rational(rng: Random, config: PrimeConfig, bound: int = 9) -> Fraction:
    p = config.p
    den = rng.choice([k for k in range(1, bound + 1) if k % p])
    return Fraction(rng.randint(-bound, bound), den)


def _random_unit(rng: Random, config: PrimeConfig) -> FieldElement:
    while True:
        value = FieldElement(_random_rational(rng, config), _random_rational(rng, config), config)
        if value and value.valuation() == 0:
            return value


def _random_base_unit(rng: Random, config: PrimeConfig) -> Fraction:
    while True:
        x = _random_rational(rng, config)
        if x and x.numerator % config.p:
            return x


def sample_orbit(config: PrimeConfig, rng: Random, r: int) -> SOrbit:
    """A normalized orbit with v(1 - a conj(a)) = r.

    r >= 1: a = (z / conj z)(1 + p^r w) with Tr w a unit; r = 0: a with 1 - Na a
    unit; r < 0 (even): a = p^{r/2} * unit.  In all cases b = p^r * unit.

    Raises:
        InvalidInputError: for odd negative r, which no orbit attains.
    """
    p = config.p
    if r < 0 and r % 2:
        raise InvalidInputError(f"v(1 - Na) cannot be odd and negative, got {r}")
    scale = FieldElement.of(Fraction(p) ** r, config)
    while True:
        if r >= 1:
            z = _random_unit(rng, config)
            w = FieldElement(_random_base_unit(rng, config), _random_rational(rng, config), config)
            a = z / z.conj() * (1 + scale * w)
        elif r == 0:
            a = FieldElement(_random_rational(rng, config), _random_rational(rng, config), config)
        else:
            a = _random_unit(rng, config) * FieldElement.of(Fraction(p) ** (r // 2), config)
        one_minus_norm = 1 - a.norm()
        if one_minus_norm and one_minus_norm.valuation() == r:
            break
    b = scale * _random_unit(rng, config)
    orbit = make_gamma(a, b)
    logger.debug(
        "orbit sampled",
        r=r,
        a=str(a),
        b=str(b),
        **_tags.get_log_kwargs(LogType.ORBITAL),
    )
    return orbit


@dataclass(frozen=True)
class UOrbit:
    """g in U(V) for V with diagonal Gram ``gram``, entries known mod p^precision.

    ``gram`` is (1, 1) for the split space W_0 and (1, p) for the nonsplit one.
    """

    g: tuple[tuple[TruncatedElement, TruncatedElement], tuple[TruncatedElement, TruncatedElement]]
    gram: tuple[int, int]
    config: PrimeConfig
    precision: int

    def __post_init__(self) -> None:
        g = tuple(
            tuple(
                entry if isinstance(entry, TruncatedElement) else TruncatedElement.from_exact(
                    FieldElement.of(entry, self.config), self.precision,
                )
                for entry in row
            )
            for row in self.g
        )
        object.__setattr__(self, "g", g)
        for i in range(2):
            for j in range(2):
                value = g[0][i].conj() * g[0][j] * self.gram[0] + g[1][i].conj() * g[1][j] * self.gram[1]
                expected = self.gram[i] if i == j else 0
                if not (value - expected).is_zero():
                    raise PrecisionError(f"g is not unitary at entry ({i}, {j}) to precision {self.precision}")

    @property
    def is_split(self) -> bool:
        return self.gram == (1, 1)

    @property
    def a(self) -> TruncatedElement:
        return self.g[0][0]

    @property
    def d(self) -> TruncatedElement:
        return self.g[1][1]

    @property
    def bc(self) -> TruncatedElement:
        return self.g[0][1] * self.g[1][0]

    @property
    def r(self) -> int:
        return (self.a.norm() - 1).valuation()

    def entry_valuations(self) -> list[int]:
        return [entry.valuation() for row in self.g for entry in row]

    def invariants(self) -> tuple[TruncatedElement, TruncatedElement, TruncatedElement]:
        return self.a, self.d, self.bc

    def matches(self, orbit: SOrbit) -> bool:
        """True when (a, d, bc) agree with the orbit's invariants at this precision."""
        return all(mine.agrees_with(theirs) for mine, theirs in zip(self.invariants(), orbit.invariants()))


def _shifted_norm_root(target: FieldElement, precision: int, config: PrimeConfig) -> TruncatedElement:
    """x with N(x) = target for target in F_0 of even valuation."""
    v = int(target.valuation())
    if v % 2:
        raise InvalidInputError(f"{target} has odd valuation and is not a norm")
    root = solve_norm(target.unit_part(), precision, config)
    return TruncatedElement(root.xbar, root.ybar, config, precision, v // 2)


def matched_unitary(orbit: SOrbit, precision: int | None = None) -> UOrbit:
    """A unitary g with the invariants (a, d, bc) of the orbit.

    r even: g = [[a, b'], [-lam conj(b'), lam conj(a)]] in U(W_0), N(b') = 1 - Na.
    r odd: g = [[a, -p lam conj(c')], [c', lam conj(a)]] in U(diag(1, p)), N(c') = (1 - Na)/p.
    Here lam = -b / conj(b).
    """
    config = orbit.config
    r = orbit.r
    working = max(precision or config.precision, abs(r) + MATCHING_PRECISION_MARGIN)
    a = orbit.a
    lam = -orbit.b / orbit.b.conj()
    target = 1 - a.norm()
    exact_a = TruncatedElement.from_exact(a, working)
    lower_right = TruncatedElement.from_exact(lam * a.conj(), working)
    if r % 2 == 0:
        b_prime = _shifted_norm_root(target, working, config)
        g = ((exact_a, b_prime), (-(b_prime.conj() * lam), lower_right))
        gram = (1, 1)
    else:
        c_prime = _shifted_norm_root(target / config.p, working, config)
        g = ((exact_a, -(c_prime.conj() * (lam * config.p))), (c_prime, lower_right))
        gram = (1, config.p)
    unitary = UOrbit(g, gram, config, working)
    if not unitary.matches(orbit):
        raise PrecisionError("constructed unitary element does not match the orbit invariants")
    return unitary
