"""Exception types shared across the package."""


class AggloRankError(Exception):
    """Base class for all errors raised by agglorank."""


class EdgeListError(AggloRankError):
    """Malformed edge-list input: self-loop, duplicate edge, bad id, bad syntax."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConnectivityError(AggloRankError):
    """The operation requires a connected graph."""

    def __init__(self, message: str, unreachable: int | None = None):
        super().__init__(message)
        self.unreachable = unreachable


class DegenerateOrderError(AggloRankError):
    """The operation is undefined for graphs this small (usually order 1)."""


class FamilyParameterError(AggloRankError):
    """Family parameters violate the family definition."""


class FormulaDomainError(AggloRankError):
    """A closed form was evaluated outside the range where it is established."""
