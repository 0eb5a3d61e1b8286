"""
Exception hierarchy for the simplex toolkit.

Validation errors map to CLI exit code 2, computational limits to exit code 3.
"""

from fractions import Fraction
from typing import Optional, Tuple


class SimplexToolkitError(Exception):
    """Base class for every error raised by the toolkit."""


class ValidationError(SimplexToolkitError):
    """Input does not satisfy an operation's preconditions."""
    exit_code = 2


class ComputationLimitError(SimplexToolkitError):
    """Operation refused because it exceeds a configured computational limit."""
    exit_code = 3


class DimensionMismatch(ValidationError):
    pass


class DegenerateSimplex(ValidationError):
    pass


class NonSquareMatrix(ValidationError):
    pass


class SingularMatrix(ValidationError):
    pass


class NonBinaryEntry(ValidationError):
    pass


class UnknownName(ValidationError):
    pass


class ZeroNormal(ValidationError):
    pass


class NotInsideCube(ValidationError):
    pass


class DomainError(ValidationError):
    pass


class UnsupportedOrder(ValidationError):
    pass


class InputFormatError(ValidationError):
    """Malformed text input (simplex/matrix files, rational literals)."""


class PieceBoundary(ValidationError):
    """
    Raised by the piecewise cut-volume formulas at a piece boundary.

    The one-sided limits of both v1 and v2 are attached so callers can report
    them instead of silently choosing a side.
    """

    def __init__(self, t: Fraction, boundaries: Tuple[Fraction, ...],
                 v1_limits: Tuple[Optional[Fraction], Optional[Fraction]],
                 v2_limits: Tuple[Optional[Fraction], Optional[Fraction]]):
        self.t = t
        self.boundaries = boundaries
        self.v1_limits = v1_limits
        self.v2_limits = v2_limits
        super().__init__(
            f"t = {t} is a piece boundary; v1 limits (left, right) = {v1_limits}, "
            f"v2 limits (left, right) = {v2_limits}"
        )


class DimensionTooLarge(ComputationLimitError):
    def __init__(self, n: int, cap: int, what: str = "enumeration"):
        self.n = n
        self.cap = cap
        super().__init__(f"n = {n} exceeds the {what} cap {cap}; raise the cap to override")


class LongRunningNotAllowed(ComputationLimitError):
    def __init__(self, what: str):
        super().__init__(f"{what} is long-running; pass --allow-long (or set SIMPLEX_ALLOW_LONG=true)")


__all__ = [
    'SimplexToolkitError',
    'ValidationError',
    'ComputationLimitError',
    'DimensionMismatch',
    'DegenerateSimplex',
    'NonSquareMatrix',
    'SingularMatrix',
    'NonBinaryEntry',
    'UnknownName',
    'ZeroNormal',
    'NotInsideCube',
    'DomainError',
    'UnsupportedOrder',
    'InputFormatError',
    'PieceBoundary',
    'DimensionTooLarge',
    'LongRunningNotAllowed',
]
