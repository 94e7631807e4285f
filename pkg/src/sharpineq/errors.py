"""Exception types shared across the package.

Every rejection carries enough text to name the violated condition, since the
command line surfaces these messages verbatim (exit code 2).
"""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class HypothesisViolation(ValueError):
    """Parameters violate the hypotheses of the targeted inequality.

    The message lists each failed condition as ``name: condition (got ...)``
    so callers can report exactly which hypothesis broke.
    """

    def __init__(self, formula_id: str, failures: list[str]):
        self.formula_id = formula_id
        self.failures = list(failures)
        detail = "; ".join(failures)
        super().__init__(f"{formula_id}: hypothesis violation: {detail}")


class QuadratureError(RuntimeError):
    """An adaptive rule failed to converge within its subdivision budget.

    Carries the best estimate reached and a bound on its error, so callers
    can decide whether the partial answer is still useful.
    """

    def __init__(self, message: str, best: float = float("nan"),
                 error_bound: float = float("inf")):
        super().__init__(message)
        self.best = best
        self.error_bound = error_bound


class DivergenceError(ArithmeticError):
    """The requested quantity is genuinely infinite (non-integrable)."""


class TailTruncationError(RuntimeError):
    """A transform input does not decay inside the grid window."""
