"""Exception types shared across the package."""


class CogclustError(Exception):
    """Base class for all cogclust errors."""


class ParseError(CogclustError):
    """A source file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MatrixFormatError(ParseError):
    """A segment-score matrix file violates the expected format."""


class ValidationError(CogclustError):
    """Input data or configuration violates a documented constraint."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MeaningNotFoundError(CogclustError, KeyError):
    """Lookup of a meaning identifier that is not in the word list."""

    def __str__(self) -> str:
        return self.args[0] if self.args else ""


class DegenerateInputError(CogclustError):
    """Input carries no usable content (no words, or no aligned segments)."""
