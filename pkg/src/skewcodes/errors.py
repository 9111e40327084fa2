"""Exception types shared across the package."""


class SkewcodesError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(SkewcodesError):
    """Operands belong to different fields or ring contexts."""


class BudgetExceededError(SkewcodesError):
    """An enumeration would exceed the configured work budget."""


class PreconditionError(SkewcodesError):
    """A documented precondition of an operation does not hold."""


class NotInvariantError(PreconditionError):
    """The polynomial does not generate a two-sided ideal (Rf != fR)."""


class NotDivisorError(PreconditionError):
    """Expected an exact division but the remainder was nonzero."""
