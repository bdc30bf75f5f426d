"""Exception hierarchy shared by every subpackage.

The CLI maps these onto exit codes (see :mod:`hyperecc.app`); invariant
violations found by ``verify`` are results, not exceptions.
"""

from __future__ import annotations


class HyperEccError(RuntimeError):
    """Base class for all library errors."""


class GraphParseError(HyperEccError):
    """Raised when an edge list cannot be parsed."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DisconnectedGraphError(HyperEccError):
    """Raised when an operation that needs a connected graph meets a disconnected one."""


class BudgetExceededError(HyperEccError):
    """Raised when a quadratic/quartic computation would exceed its configured budget."""

    def __init__(self, what: str, needed: int, budget: int, hint: str = "") -> None:
        self.what = what
        self.needed = needed
        self.budget = budget
        message = f"{what} needs {needed:,} but the budget is {budget:,}"
        if hint:
            message = f"{message}; {hint}"
        super().__init__(message)


class MissingOracleError(HyperEccError):
    """Raised when a tree variant that needs exact eccentricities is built without them."""


class EstimatorContractError(HyperEccError):
    """Raised when a distance estimator breaks its declared (alpha, beta) guarantee."""


class GeneratorSpecError(HyperEccError):
    """Raised for malformed ``--gen`` specs or unsatisfiable generator requests."""
