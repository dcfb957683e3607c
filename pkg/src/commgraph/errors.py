"""Exception hierarchy.

Precondition violations derive from ``PreconditionError`` so callers (the
CLI in particular) can map them to a single exit status.
"""


class CommGraphError(Exception):
    """Base class for all library errors."""


class PreconditionError(CommGraphError, ValueError):
    pass


class FieldMismatch(PreconditionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class DimensionTooSmall(PreconditionError):
    pass


class DimensionTooLarge(PreconditionError):
    pass


class CentralInput(PreconditionError):
    pass


class IdenticalInputs(PreconditionError):
    pass


class ZeroPolynomial(PreconditionError):
    pass


class NotCoprime(PreconditionError):
    pass


class NotADivisor(PreconditionError):
    pass


class NotDerogatory(PreconditionError):
    pass


class NotNilpotent(PreconditionError):
    pass


class ZeroInput(PreconditionError):
    pass


class SingularMatrix(PreconditionError):
    pass


class DegreeLimitExceeded(CommGraphError):
    """Rational factorization refused: degree above the configured cap."""


# the witness layer reports the cap under this name
CapExceeded = DegreeLimitExceeded


class BudgetExceeded(CommGraphError):
    """Exhaustive enumeration would exceed the configured vertex budget."""
