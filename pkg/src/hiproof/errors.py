"""Error types raised across the package."""

from __future__ import annotations

__all__ = ["DomainError", "ParseError"]


class DomainError(ValueError):
    """A quantity is outside its physical or configured domain.

    Carries the name of the offending field so command-line and HTTP layers
    can point at the exact input that was rejected.
    """

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
        self.message = message


class ParseError(ValueError):
    """Malformed case-study input. Reports the line (and column) at fault."""

    def __init__(self, message: str, line: int | None = None, column: str | None = None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column:
                where += f", column {column!r}"
            where = f" ({where})"
        super().__init__(f"{message}{where}")
        self.line = line
        self.column = column
