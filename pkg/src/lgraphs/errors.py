"""Exception types raised across the package."""

from __future__ import annotations


class LGraphError(Exception):
    """Base class for all package errors."""


class InputError(LGraphError, ValueError):
    """An argument violates an operation's precondition."""


class NotMonotoneError(LGraphError):
    """Embedding corners are not collinear."""


class NotOuterplanarError(LGraphError):
    """The graph has no one-page spine order."""


class ConvexityError(InputError):
    """A red vertex's neighbourhood is not contiguous under the blue ordering."""

    def __init__(self, red: int, gap: int, message: str | None = None) -> None:
        self.red = red
        self.gap = gap
        super().__init__(message or f"vertex {red} skips blue vertex {gap}")


class NotDistanceHereditaryError(LGraphError):
    """Pruning got stuck: no pendant or twin vertex in the residual graph."""

    def __init__(self, residual: list[int], message: str | None = None) -> None:
        self.residual = residual
        super().__init__(
            message or f"no pendant or twin among residual vertices {residual}"
        )


class ParseError(LGraphError):
    """A text document failed to parse.

    ``code`` is a stable identifier (``MALFORMED_LINE``, ``DUP_EDGE``, ...)
    that callers can match on; ``line`` and ``col`` are 1-based.
    """

    def __init__(self, code: str, message: str, line: int = 0, col: int = 0) -> None:
        self.code = code
        self.line = line
        self.col = col
        loc = f"{line}:{col}: " if line else ""
        super().__init__(f"{loc}{code}: {message}")
