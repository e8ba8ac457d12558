"""Exception types raised by the library and mapped to exit codes by the CLI."""


class CtrlHubsError(Exception):
    """Base class for all library errors."""


class ParseError(CtrlHubsError):
    """Malformed edge-list input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyGraphError(CtrlHubsError):
    """The graph has no nodes."""


class ParameterError(CtrlHubsError, ValueError):
    """Invalid generator or benchmark parameters."""


class ContractViolation(CtrlHubsError, ValueError):
    """A precondition of an operation does not hold (e.g. a non-maximum matching)."""
