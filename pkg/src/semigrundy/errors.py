"""Exception types shared across the package."""

__all__ = ["ContractViolation", "FormatError", "ResourceLimitError"]


class ContractViolation(ValueError):
    """A stated precondition of an operation does not hold."""


class ResourceLimitError(RuntimeError):
    """An input exceeds a documented size guard."""


class FormatError(ValueError):
    """A document failed to parse; carries position info when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
