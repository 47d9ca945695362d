"""Exception hierarchy shared by all turanlab modules."""

from __future__ import annotations


class TuranLabError(Exception):
    """Base class for every error raised by turanlab."""


class Graph6Error(TuranLabError, ValueError):
    """Malformed graph6 input. ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class DomainError(TuranLabError, ValueError):
    """Parameters outside the domain of a formula or operation."""


class PreconditionError(TuranLabError):
    """Input graph violates an operation's precondition.

    ``witness`` carries a certificate of the violation when one is available,
    e.g. a 6-cycle for a graph that was required to be C6-free.
    """

    def __init__(self, message: str, witness: tuple[int, ...] | None = None):
        self.witness = witness
        super().__init__(message)


class InvariantError(TuranLabError, AssertionError):
    """An internal structural assertion failed."""


class CapExceeded(TuranLabError):
    """Requested search is beyond the configured size cap."""
