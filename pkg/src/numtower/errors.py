"""Exception hierarchy shared by every module."""


class DomainError(ValueError):
    """An operation was applied outside the set where it is defined."""

    kind = "domain"


class CannotSeparate(DomainError):
    """Two interval-represented reals could not be told apart within the probe budget."""

    kind = "cannot-separate"


class PrecisionError(DomainError):
    """The working precision was not enough to emit an honest bound."""

    kind = "precision"


class BudgetExceeded(DomainError):
    """A render or search request was larger than the allowed budget."""

    kind = "budget"
