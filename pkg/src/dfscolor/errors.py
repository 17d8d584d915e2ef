"""Exception hierarchy shared by every module."""

from __future__ import annotations

from collections.abc import Iterable, Sequence


class DfsColorError(Exception):
    """Base class for all errors raised by this package."""


class GraphStructureError(DfsColorError, ValueError):
    """Malformed input: self-loops, out-of-range ids, shape mismatches."""


class BudgetExceeded(DfsColorError):
    """An exhaustive oracle was asked to run above its vertex budget."""

    def __init__(self, what: str, n: int, limit: int) -> None:
        self.what = what
        self.n = n
        self.limit = limit
        super().__init__(f"{what}: graph has {n} vertices, budget is {limit} (raise the limit explicitly)")


class NoOddCycle(DfsColorError):
    """The graph is bipartite, so the odd circumference is undefined."""


class ParameterError(DfsColorError, ValueError):
    """An algorithm parameter is outside its admissible range."""


class ContractViolation(DfsColorError):
    """A pluggable algorithm broke the contract it declared."""


class HypothesisViolation(DfsColorError):
    """The input does not satisfy a coloring method's hypothesis.

    ``witness`` holds concrete cycles of the input graph (vertex sequences,
    closing edge implied) certifying the violation, when one was extracted.
    """

    def __init__(self, message: str, witness: Iterable[Sequence[int]] = ()) -> None:
        self.witness: tuple[tuple[int, ...], ...] = tuple(tuple(c) for c in witness)
        super().__init__(message)
