"""Exception hierarchy shared by the symbolic engine and the oracle."""

from __future__ import annotations


class RepZetaError(Exception):
    """Base class for every error raised by this package."""


class InconsistencyError(RepZetaError):
    """Internal inconsistency between tables and derived data (CLI exit code 3)."""


class NotDivisible(InconsistencyError, ArithmeticError):
    def __init__(self, dividend, divisor, remainder, context: str = ""):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        self.context = context
        msg = f"({dividend}) is not divisible by ({divisor}); remainder {remainder}"
        if context:
            msg = f"{context}: {msg}"
        super().__init__(msg)


class ZeroPolynomial(RepZetaError, ValueError):
    pass


class ZeroIndex(RepZetaError, ValueError):
    pass


class EpsilonMismatch(RepZetaError, ValueError):
    pass


class UnsupportedSpec(RepZetaError, ValueError):
    pass


class UnknownSlotShape(RepZetaError, ValueError):
    pass


class UnsupportedCase(RepZetaError, ValueError):
    pass


class TooLarge(RepZetaError, ValueError):
    pass


class UnsupportedGroup(RepZetaError, ValueError):
    pass
