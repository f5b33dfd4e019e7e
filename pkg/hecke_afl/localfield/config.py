from dataclasses import dataclass, field

from sympy import isprime, legendre_symbol

from ..constants import DEFAULT_PRECISION, DEFAULT_PRIME
from ..exceptions import InvalidInputError


def smallest_nonresidue(p: int) -> int:
    """Smallest positive integer that is not a square mod p."""
    for candidate in range(2, p):
        if legendre_symbol(candidate, p) == -1:
            return candidate
    raise InvalidInputError(f"no quadratic non-residue mod {p}")


@dataclass(frozen=True, slots=True)
class PrimeConfig:
    """Residue characteristic, the non-square defining F = Q_p(delta), and precision.

    The base field is Q_p, so p is also the uniformizer and the residue
    cardinality q.

    Attributes:
        p: Odd prime.
        epsilon: Integer unit, non-square mod p, with delta^2 = epsilon.
            Defaults to the smallest positive non-residue.
        precision: Working precision N for truncated elements.
    """

    p: int = DEFAULT_PRIME
    epsilon: int | None = field(default=None)
    precision: int = DEFAULT_PRECISION

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p < 3 or not isprime(self.p):
            raise InvalidInputError(f"p must be an odd prime, got {self.p!r}")
        if self.epsilon is None:
            object.__setattr__(self, "epsilon", smallest_nonresidue(self.p))
        if self.epsilon % self.p == 0 or legendre_symbol(self.epsilon % self.p, self.p) != -1:
            raise InvalidInputError(
                f"epsilon={self.epsilon} is not a quadratic non-residue mod {self.p}",
            )
        if self.precision < 1:
            raise InvalidInputError(f"precision must be positive, got {self.precision}")

    @property
    def q(self) -> int:
        return self.p

    def as_dict(self) -> dict[str, int]:
        return {"p": self.p, "epsilon": self.epsilon, "precision": self.precision}
