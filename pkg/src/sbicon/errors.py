"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for all errors raised by sbicon."""


class ConstructionError(GraphError):
    """Raised when a digraph cannot be built from the given arcs."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(GraphError):
    """An operation was called on a graph outside its domain.

    ``reason`` is a stable machine-readable code such as
    ``"not_strongly_connected"`` or ``"underlying_not_biconnected"``.
    """

    def __init__(self, reason: str, message: str | None = None, detail=None):
        self.reason = reason
        self.detail = detail
        super().__init__(message or reason.replace("_", " "))


class InternalContradiction(RuntimeError):
    """A state that a correct implementation on valid input cannot reach."""
