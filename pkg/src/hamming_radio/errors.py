"""Exception types shared across the package."""


class RadioGraphError(Exception):
    """Base class for all errors raised by this package."""


class SpecError(RadioGraphError, ValueError):
    """A graph spec is malformed (empty, non-increasing factor sizes, bad values)."""


class ShapeError(RadioGraphError, ValueError):
    """A vertex, row, column index or permutation has the wrong shape or range."""


class RepetitionError(RadioGraphError, ValueError):
    """An operation that needs pairwise-distinct rows was given a repeated row."""


class NotAtBoundaryError(RadioGraphError, ValueError):
    """The spec has no factor whose cumulative width sits at the forced-structure boundary."""


class MembershipError(RadioGraphError, ValueError):
    """An instruction column or order generator violates its structural rules."""


class UnsupportedSizeError(RadioGraphError, ValueError):
    """Instruction machinery is only defined for complete factors on 3+ vertices."""


class TooLargeError(RadioGraphError):
    """The requested enumeration exceeds the configured size budget."""


class BudgetExceededError(RadioGraphError):
    """An exhaustive enumeration would exceed the configured cap."""


class DocumentError(RadioGraphError, ValueError):
    """An ordering or instruction file could not be parsed."""
