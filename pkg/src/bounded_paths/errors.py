"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class BoundedPathsError(Exception):
    """Base class for all errors raised by :mod:`bounded_paths`."""


class ParseError(BoundedPathsError, ValueError):
    """Malformed polynomial or step-set text."""


class NotDivisible(BoundedPathsError, ArithmeticError):
    """An exact polynomial division has a nonzero remainder."""


class NonUnitConstantTerm(BoundedPathsError, ValueError):
    """A series denominator does not start with the constant 1."""


class InvalidModel(BoundedPathsError, ValueError):
    """A step model violates the preconditions of the requested operation."""


class NotSymmetric(InvalidModel):
    """The step model is not symmetric (``-S = S`` with mirrored weights)."""


class IndexOutOfRange(BoundedPathsError, IndexError):
    pass


class OrderTooLarge(BoundedPathsError, ValueError):
    pass


class IdentityFailed(BoundedPathsError, AssertionError):
    """A polynomial identity that the theory guarantees did not hold."""

    def __init__(self, message: str, k: int | None = None, ell: int | None = None):
        super().__init__(message)
        self.k = k
        self.ell = ell


class TailNotZero(IdentityFailed):
    """Trailing series coefficients did not vanish past the numerator bound."""


class DegreeMismatch(BoundedPathsError, AssertionError):
    pass


class LeadingTermMismatch(BoundedPathsError, AssertionError):
    pass
