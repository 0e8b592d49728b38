"""Exceptions raised across the package."""
from typing import Optional


class UnitGroupError(Exception):
    """Base class for every error this package raises on purpose."""


class InvalidParameters(UnitGroupError, ValueError):
    """Input parameters violate a hypothesis of the construction."""


class NotThreeKPlusOne(InvalidParameters):
    """m is not of the form 3k + 1."""


class TNotOrderThree(InvalidParameters):
    """t does not have multiplicative order exactly 3 modulo m."""


class GcdViolation(InvalidParameters):
    """gcd(m, t - 1) is not 1."""


class DegreeOutOfRange(InvalidParameters):
    """A field degree (or the exponent n of q = 3^n) is outside the supported range."""


class SampleSizeTooSmall(InvalidParameters):
    """Too few samples were requested for a statistical check."""


class FieldMismatch(UnitGroupError, TypeError):
    """Operands live in different fields."""


class DivisionByZero(UnitGroupError, ZeroDivisionError):
    """The zero element has no inverse."""


class NoSuchRoot(UnitGroupError, ValueError):
    """The requested root of unity does not exist in the field."""


class NotASubfield(UnitGroupError, ValueError):
    """The source field does not embed in the target field."""


class Mismatch(UnitGroupError, TypeError):
    """Group ring elements over different groups or fields were combined."""


class EmptySubset(UnitGroupError, ValueError):
    """The hat of the empty set was requested."""


class NoSolution(UnitGroupError, ArithmeticError):
    """A linear system is inconsistent."""


class NotAUnit(UnitGroupError, ArithmeticError):
    """A group ring element has no inverse."""


class VerificationFailure(UnitGroupError, AssertionError):
    """An independent check disagreed with the computed structure.

    Args:
        check: Short name of the check that failed
        detail: What was observed

    """

    def __init__(self, check: str, detail: Optional[str] = None) -> None:
        self.check = check
        self.detail = detail
        message = check if detail is None else f"{check}: {detail}"
        super().__init__(message)


class ConstructionFailure(VerificationFailure):
    """A representation failed its own defining relations."""
