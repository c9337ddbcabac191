"""Exception hierarchy shared by every module."""

from __future__ import annotations


class MatchDecompError(Exception):
    """Base class for all library errors."""


class ConstraintError(MatchDecompError, ValueError):
    """Input violates a structural invariant of a graph or instance."""


class DuplicateEdge(ConstraintError):
    pass


class ZeroOrNegativeWeight(ConstraintError):
    pass


class IndexOutOfRange(ConstraintError):
    pass


class HOutOfRange(ConstraintError):
    pass


class TooManyEdges(ConstraintError):
    pass


class NonUnitWeights(ConstraintError):
    pass


class InfeasibleInput(MatchDecompError, ValueError):
    """A matching or cover handed to a checker is not valid for the graph."""


class NotAMatching(InfeasibleInput):
    pass


class InternalInconsistency(MatchDecompError, AssertionError):
    """Two routes that must agree did not. Always a bug in this package."""


class ValidationError(MatchDecompError):
    """A supplied or computed object failed an optimality check."""


class MatchingNotMaximum(ValidationError):
    pass


class CoverNotOptimal(ValidationError):
    pass


class MatchingNotOptimal(ValidationError):
    pass


class TooLarge(MatchDecompError):
    """Instance exceeds the size guard of an exhaustive routine."""


class ParseError(MatchDecompError):
    """Malformed instance or result text.

    ``line`` and ``column`` are 1-based; ``column`` is 0 when the whole
    line (or the file as a whole) is at fault.
    """

    def __init__(self, line: int, reason: str, column: int = 0):
        self.line = line
        self.column = column
        self.reason = reason
        where = f"line {line}" + (f", column {column}" if column else "")
        super().__init__(f"{where}: {reason}")
