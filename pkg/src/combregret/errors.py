"""Shared exception types."""


class BudgetError(RuntimeError):
    """Raised when an enumeration or memo table would exceed its hard budget.

    Budget guards are hard errors on purpose: the exact evaluators must never
    silently truncate or approximate.
    """
