from __future__ import annotations


class GraphZipError(Exception):
    """Base class for every error raised by graphzip."""

    pass


class EdgeListParseError(GraphZipError, ValueError):
    """Raised when an edge-list line cannot be parsed."""

    def __init__(self, line_number: int, line: str, reason: str) -> None:
        super().__init__(f"line {line_number}: {reason}: {line!r}")
        self.line_number = line_number
        self.line = line


class GraphDomainError(GraphZipError, ValueError):
    """Raised for invalid generator parameters or malformed matrices."""

    pass


class UnsupportedGraphError(GraphZipError):
    """Raised when an operation is asked to handle a graph it cannot."""

    pass


class MalformedTreeError(GraphZipError, ValueError):
    """Raised when a cardinality tree violates its structural invariants."""

    pass


class ContractViolation(GraphZipError, AssertionError):
    """Raised when a caller breaks an operation's precondition."""

    pass


class BitstreamDecodeError(GraphZipError):
    """Raised when a bitstream header or payload cannot be decoded."""

    pass


class EmptyGraphError(GraphZipError, ValueError):
    """Raised when asked to encode a graph with no vertices."""

    pass


class CoderConfigError(GraphZipError, ValueError):
    """Raised for an unusable coder configuration (missing stats, bad spec)."""

    pass


class SolverConvergenceError(GraphZipError):
    """Raised when the graphical lasso does not converge."""

    def __init__(self, message: str, residual: float) -> None:
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class CompletionError(GraphZipError):
    """Raised when the maximum-likelihood covariance completion fails."""

    def __init__(self, message: str, residual: float = float("nan")) -> None:
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class SelectionError(GraphZipError):
    """Raised when no regularization value yields a usable model."""

    pass
