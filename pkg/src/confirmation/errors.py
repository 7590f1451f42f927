"""Exception hierarchy.

Everything derives from ``ValueError`` so callers that only care about bad
input can catch that.
"""


class ConfirmationError(ValueError):
    pass


class EmptyTable(ConfirmationError):
    """All four counts are zero (or no examples were supplied)."""


class NegativeCount(ConfirmationError):
    pass


class ZeroMarginal(ConfirmationError):
    """A conditional probability was requested on an event with zero count."""


class OutOfRange(ConfirmationError):
    pass


class UndefinedError(ConfirmationError):
    """A scalar result is 0/0 and has no meaningful value."""


class ZeroLogicalProbability(ConfirmationError):
    pass


class Degenerate(ConfirmationError):
    """The classifier reached a state where no label can be preferred."""
