"""Shared exception types."""


class ResourceBudgetError(RuntimeError):
    """Raised when an exhaustive search would exceed its configured budget.

    Carries whatever partial report was assembled before the budget ran out,
    so callers can still inspect what was checked.
    """

    def __init__(self, message, partial_report=None):
        super().__init__(message)
        self.partial_report = partial_report


class SingularSystemError(ValueError):
    """Raised when a linear system expected to be invertible is singular."""
