"""Exception hierarchy shared by every flycast module.

Three branches matter to callers:

* ``DataError``    -- the input violates a documented precondition
                      (CLI exit code 3, HTTP error kind ``data``)
* ``NumericError`` -- the computation became numerically unusable
                      (CLI exit code 4, HTTP error kind ``numeric``)
* ``UsageError``   -- bad flags or config at the CLI boundary (exit code 2)
"""


class FlycastError(Exception):
    """Base class for every error raised by this package."""


class DataError(FlycastError):
    """Input data or parameters violate a documented precondition."""


class NumericError(FlycastError):
    """A computation reached a numerically degenerate state."""


class UsageError(FlycastError):
    """Malformed command-line or config-file input."""


class NonPositiveValue(DataError):
    """Series values must be strictly positive, finite reals."""


class PeriodTooSmall(DataError):
    """Seasonal period must be at least 2."""


class LabelLengthMismatch(DataError):
    """Labels and values must have the same length."""


class SplitLengthMismatch(DataError):
    """Split counts must sum to the series length."""


class NotMultipleOfPeriod(DataError):
    """Training length must be a whole number of seasonal cycles."""


class TooShort(DataError):
    """Not enough data for the requested operation."""


class LengthMismatch(DataError):
    """Paired sequences must have equal lengths."""


class EmptyInput(DataError):
    """Operation requires at least one element."""


class NonPositiveActual(DataError):
    """Percentage errors divide by actuals, which must be positive."""


class HorizonMismatch(DataError):
    """Test slice length must equal the forecast horizon."""


class ParseError(DataError):
    """A data file could not be parsed; the message carries the line number."""


class InvalidParams(DataError):
    """Configuration or generator parameters are out of range."""


class DivisionBlowup(NumericError):
    """Smoothing state became degenerate (divisor magnitude below 1e-12)."""


class OriginSingularity(NumericError):
    """A fly sat exactly on the coordinate origin; its distance scalar is undefined."""


class NoViableCandidate(NumericError):
    """Every candidate evaluated by the optimizer failed; no parameters found."""
