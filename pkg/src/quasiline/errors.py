"""Exception types raised by the package."""

from __future__ import annotations

from typing import Sequence


class QuasilineError(Exception):
    """Base class for every error raised by this package."""


class GraphFormatError(QuasilineError, ValueError):
    """Malformed serialized graph. ``offset`` is the byte index, when known."""

    def __init__(self, message: str, offset: int | None = None) -> None:
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class GraphLengthError(GraphFormatError):
    """A graph6 bit stream ended before all adjacency bits were read."""


class EdgeListError(QuasilineError, ValueError):
    """Bad line in an edge-list input."""


class VertexRangeError(QuasilineError, IndexError):
    """A vertex label lies outside ``0..n-1``."""


class PreconditionError(QuasilineError, ValueError):
    """An operation's input violates a stated precondition.

    ``witness`` carries the offending vertices when there are any.
    """

    def __init__(self, message: str, witness: Sequence[int] | None = None) -> None:
        super().__init__(message)
        self.witness = tuple(witness) if witness is not None else None


class CompleteGraphError(PreconditionError):
    """Raised by the partition routine when the graph has no non-adjacent pair."""


class CapacityError(QuasilineError, ValueError):
    """Input too large for an exhaustive routine."""


class PatternError(QuasilineError, ValueError):
    """Bad pattern expression or pattern parameters."""
