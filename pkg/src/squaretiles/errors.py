"""Exception types shared across the package.

Every domain failure maps onto one of these, so the CLI and the HTTP
service can translate them into stable exit codes / error payloads.
"""

from __future__ import annotations


class SquareTilesError(Exception):
    """Base class for all library errors."""


class TilingParseError(SquareTilesError):
    """A tiling text document is malformed. Carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidTilingError(SquareTilesError):
    """An operation required a valid tiling and the candidate is not one."""

    def __init__(self, report):
        self.report = report
        details = "; ".join(v.message for v in report.violations)
        super().__init__(f"invalid tiling: {details}")


class UnsupportedCountError(SquareTilesError):
    """The requested tile count admits no tiling (or no defined minimum)."""


class BadParameterError(SquareTilesError):
    """A parameter is outside the documented domain."""


class PreconditionUnmetError(SquareTilesError):
    """The input does not satisfy the operation's structural hypothesis."""


class ResourceLimitError(SquareTilesError):
    """An enumeration exceeded its node budget; results were not truncated."""


class MalformedProfileError(SquareTilesError):
    """A step profile violates its structural invariants."""
