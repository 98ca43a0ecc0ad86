"""Exception types shared across the package."""


class StructureError(ValueError):
    """Malformed input object (mismatched ambient ring, non-closed complex, ...)."""


class PreconditionError(ValueError):
    """An operation was called on input outside its hypotheses."""


class BudgetExceeded(RuntimeError):
    """A computation would exceed its configured size budget."""


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
