"""Exception types shared across the toolkit."""


class PlaParseError(ValueError):
    """A .pla document could not be parsed (bad row, etc.)."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PlaStructureError(PlaParseError):
    """Structural problem: missing/duplicated directives, row-count mismatch."""


class PlaLexicalError(PlaParseError):
    """A row contains a character outside the permitted alphabet."""


class ResourceLimitError(RuntimeError):
    """An exhaustive operation would exceed its configured budget."""
