"""Exception hierarchy for hecke_afl."""


class HeckeAflError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(HeckeAflError, ValueError):
    """An argument is out of range, has the wrong parity or is malformed."""


class FieldDivisionError(HeckeAflError, ZeroDivisionError):
    """Inversion of zero in F."""


class NotSymmetricError(InvalidInputError):
    """A Laurent polynomial is not invariant under the symmetric group."""


class NotInvariantError(InvalidInputError):
    """A Laurent polynomial is not invariant under signed permutations."""


class RankMismatchError(InvalidInputError):
    """Two Hecke elements of different rank were combined."""


class NotRegularSemisimpleError(InvalidInputError):
    """An orbit representative is not regular semisimple."""


class NotNormalizedError(InvalidInputError):
    """An orbit representative does not satisfy v(c) = 0."""


class PrecisionError(HeckeAflError, ArithmeticError):
    """A truncated computation cannot answer at the working precision."""


class BudgetExceededError(HeckeAflError):
    """An enumeration would exceed its configured cap."""


class WindowError(BudgetExceededError):
    """A lattice left the tracked window between p^r and p^-r times the standard lattice."""


class UnimplementedRegimeError(HeckeAflError, NotImplementedError):
    """Requested a formula outside the regime that is implemented."""


class CriteriaDisagreeError(HeckeAflError):
    """Two independent criteria for the same quantity disagree."""


class VerificationError(HeckeAflError):
    """A built-in self-check of a computed quantity failed."""
