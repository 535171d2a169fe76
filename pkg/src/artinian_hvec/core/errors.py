"""Exception hierarchy shared by the core modules and the CLI.

The CLI maps each family to an exit code:
``InvalidInputError`` -> 2, ``InfeasiblePairError`` -> 3, ``BudgetExceededError`` -> 4.
"""

from __future__ import annotations


class HVecError(Exception):
    """Base class for every error raised by artinian_hvec."""


class InvalidInputError(HVecError, ValueError):
    """Malformed vector, out-of-range argument or violated precondition."""


class FormParseError(InvalidInputError):
    """A polynomial line could not be parsed.

    ``line`` is the 1-based line number in the source file, or None when the
    text did not come from a file.
    """

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InfeasiblePairError(HVecError):
    """The socle-vector swallows the whole algebra before its socle degree."""

    def __init__(self, message: str, degree: int) -> None:
        self.degree = degree
        super().__init__(f"{message} (degree {degree})")


class BudgetExceededError(HVecError):
    """An enumeration was refused because it exceeds the configured budget."""

    def __init__(self, requested: int, limit: int) -> None:
        self.requested = requested
        self.limit = limit
        super().__init__(
            f"socle degree {requested} exceeds the enumeration budget {limit} "
            "(raise it with --budget or ARTINIAN_HVEC_BUDGET)"
        )
