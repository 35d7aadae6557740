"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class QuiverError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(QuiverError, ValueError):
    """Input data violates a structural invariant."""


class CyclicQuiver(ValidationError):
    def __init__(self, cycle: list[int]):
        self.cycle = cycle
        path = " -> ".join(str(v) for v in cycle)
        super().__init__(f"quiver has a directed cycle: {path}")


class Disconnected(ValidationError):
    pass


class BadVertexId(ValidationError):
    pass


class SelfLoop(ValidationError):
    pass


class NotDominant(ValidationError):
    pass


class TruncationViolation(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


class UnboundedPolytope(QuiverError):
    """A coordinate of a polytope that should be bounded has no finite range."""


class BudgetExceeded(QuiverError):
    pass


class BoundExceeded(QuiverError):
    pass


class ParseError(QuiverError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
