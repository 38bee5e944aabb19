"""Exception types shared across the package.

Division by zero and out-of-range sequence indexing reuse the builtins
(`ZeroDivisionError`, `IndexError`); everything domain specific derives
from `MinpolyError`.
"""


class MinpolyError(Exception):
    """Base class for all package-specific errors."""


class FieldMismatchError(MinpolyError):
    """Operands belong to different coefficient fields."""


class ZeroPolynomialError(MinpolyError):
    """Operation is undefined for the zero polynomial."""


class NotMonicError(MinpolyError):
    """A monic polynomial was required."""


class DegreeUnderflowError(MinpolyError):
    """Requested degree is smaller than the polynomial's degree."""


class EmptySequenceError(MinpolyError):
    """Operation requires at least one sequence term."""


class ParityError(MinpolyError):
    """Internal state corruption: the exponent/index parity invariant broke."""


class BudgetExceededError(MinpolyError):
    """Exhaustive search would enumerate more candidates than allowed."""


class InfiniteFieldError(MinpolyError):
    """Exhaustive search is only possible over a finite field."""


class ParseError(MinpolyError):
    """Malformed textual input.

    `position` is the 1-based index of the offending token, when known.
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"token {position}: {message}")
        self.position = position
