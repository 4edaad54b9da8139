"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search ran past its configured visit or time budget.

    ``partial`` is the number of candidates examined before giving up; the
    search never reports a maximum over a truncated space.
    """

    def __init__(self, message: str, partial: int) -> None:
        super().__init__(f"{message} (examined {partial} before stopping)")
        self.partial = partial
