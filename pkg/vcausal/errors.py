"""Error types shared by the engines and the CLI.

Every error carries the process exit code the CLI maps it to.
"""

from __future__ import annotations

from typing import Optional


class VCausalError(Exception):
    """Base class for all errors raised by vcausal."""

    exit_code: int = 1


class ConfigError(VCausalError):
    """An experiment description could not be turned into a runnable config."""


class ParseError(ConfigError):
    """Malformed JSON, unknown or missing fields, or wrongly typed values."""

    exit_code = 2

    def __init__(
        self,
        message: str,
        *,
        line: Optional[int] = None,
        column: Optional[int] = None,
        field: Optional[str] = None,
    ) -> None:
        self.line = line
        self.column = column
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
            if column is not None:
                where.append(f"column {column}")
        if field:
            where.append(f"field '{field}'")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class ValidationError(ConfigError):
    """A well-formed config value violates a module invariant."""

    exit_code = 3

    def __init__(self, message: str, *, field: Optional[str] = None) -> None:
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


class DomainError(VCausalError, ValueError):
    """An operation was called outside its mathematical domain."""

    exit_code = 4


class FrameMismatch(DomainError):
    """An event was handed to a transform expecting the other frame."""


class CompositionSingularity(DomainError):
    """Velocity composition hit its pole at v*u = 1 (or v*u' = -1)."""


class ModelSourceConflict(DomainError):
    """The influence model cannot explain the requested source."""


class OutputError(VCausalError):
    """Results could not be written."""

    exit_code = 5
