"""
Errors Module

This module provides the exception hierarchy shared by the recolor modules.
"""

from typing import Optional


class RecolorError(Exception):
    """Base class for every error raised by recolor."""


class BudgetExceeded(RecolorError):
    """
    Raised when an enumeration grows past its configured budget.

    Args:
        what: What was being counted (e.g. "colorings")
        reached: The count reached when the enumeration stopped
        budget: The configured budget
    """

    def __init__(self, what: str, reached: int, budget: int):
        self.what = what
        self.reached = reached
        self.budget = budget
        super().__init__(f"{what} budget exceeded: reached {reached} (budget {budget})")


class UndecidedError(RecolorError):
    """A search ran out of time or expansions before reaching a verdict."""

    def __init__(self, message: str, elapsed: Optional[float] = None, expansions: Optional[int] = None):
        self.elapsed = elapsed
        self.expansions = expansions
        super().__init__(message)


class PreconditionError(RecolorError, ValueError):
    """A documented precondition of an operation does not hold."""


class UnsupportedError(RecolorError):
    """The request lies outside the sizes the exhaustive routines accept."""


class ConstructionError(RecolorError):
    """A constructive generator could not complete its listing."""
