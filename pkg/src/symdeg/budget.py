"""Enumeration budget shared by the brute-force oracles.

Every routine that enumerates function tables first computes exactly how
many items the enumeration would visit and compares that against a budget,
so oversized requests fail fast instead of running away.  The default is
10**6 items and can be overridden per call or via the SYMDEG_BUDGET
environment variable.
"""

from __future__ import annotations

import os

DEFAULT_BUDGET = 10**6
BUDGET_ENV_VAR = "SYMDEG_BUDGET"


class BudgetExceededError(Exception):
    """An enumeration would exceed the configured budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"enumeration of {required} items exceeds the budget of {budget}"
            f" (raise it via {BUDGET_ENV_VAR} or an explicit budget argument)"
        )
        self.required = required
        self.budget = budget


def default_budget() -> int:
    """The enumeration budget: SYMDEG_BUDGET if set, else 10**6."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
    return value


def check_budget(required: int, budget: int | None = None) -> None:
    """Raise BudgetExceededError if `required` items exceed the budget."""
    limit = default_budget() if budget is None else budget
    if required > limit:
        raise BudgetExceededError(required, limit)
