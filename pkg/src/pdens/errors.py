"""Exception types raised by the library.

Everything derives from PdensError (a ValueError) so callers can catch
domain failures in one clause while still treating them as value errors.
"""


class PdensError(ValueError):
    """Base class for all library errors."""


class EmptyMotifError(PdensError):
    """Sequence constructed with no points."""


class NonPositivePeriodError(PdensError):
    """Sequence period must be > 0."""


class DuplicatePointError(PdensError):
    """Two motif points coincide modulo the period."""


class InconsistentCornerError(PdensError):
    """Corner list cannot describe a piecewise linear function."""


class SupportExceedsReflectionError(PdensError):
    """Function is nonzero beyond the reflection axis."""


class NegativeKError(PdensError):
    """Coverage multiplicity k must be >= 0."""


class KOutOfRangeError(PdensError):
    """k outside the range served by a closed-form construction."""


class NegativeRadiusError(PdensError):
    """Coverage radius must be >= 0."""


class NotGenericError(PdensError):
    """Sequence has tied gaps, so single-function reconstruction is not defined."""


class InconsistentFunctionError(PdensError):
    """Input function is not the first density function of any generic sequence."""
