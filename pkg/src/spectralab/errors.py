"""Exception types and the shared search budget."""

from __future__ import annotations

import os

DEFAULT_BUDGET = 10**8


class SpectralabError(Exception):
    """Base class for all library errors."""


class MalformedInput(SpectralabError, ValueError):
    pass


class InvalidParameters(SpectralabError, ValueError):
    pass


class BudgetExceeded(SpectralabError):
    def __init__(self, what: str, budget: int):
        super().__init__(f"{what}: node budget of {budget} exhausted")
        self.what = what
        self.budget = budget


class NotConnected(SpectralabError, ValueError):
    pass


class NonConvergence(SpectralabError, ArithmeticError):
    pass


class NotPlanar(SpectralabError, ValueError):
    pass


class InvalidRotationSystem(SpectralabError, ValueError):
    pass


class EmptyHypergraph(SpectralabError, ValueError):
    pass


class InfeasibleSeed(SpectralabError, ValueError):
    pass


def default_budget() -> int:
    """Node budget for exponential searches; ``SPECTRALAB_BUDGET`` overrides."""
    raw = os.environ.get("SPECTRALAB_BUDGET")
    if raw:
        try:
            value = int(float(raw))
        except ValueError:
            raise InvalidParameters(f"SPECTRALAB_BUDGET is not a number: {raw!r}") from None
        if value <= 0:
            raise InvalidParameters("SPECTRALAB_BUDGET must be positive")
        return value
    return DEFAULT_BUDGET


class Counter:
    """Counts search nodes and raises once the budget is spent."""

    __slots__ = ("what", "budget", "nodes")

    def __init__(self, what: str, budget: int | None = None):
        self.what = what
        self.budget = default_budget() if budget is None else budget
        self.nodes = 0

    def tick(self, k: int = 1) -> None:
        self.nodes += k
        if self.nodes > self.budget:
            raise BudgetExceeded(self.what, self.budget)
