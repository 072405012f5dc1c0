"""Exception types shared across the package."""


class DualEqError(Exception):
    """Base class for all package errors."""


class DomainError(DualEqError, ValueError):
    """An argument lies outside the domain of an operation."""


class ResourceError(DualEqError):
    """A configured size bound would be exceeded."""


class NotSchurPositive(DualEqError):
    """Greedy Schur extraction met a negative or unreachable term."""

    def __init__(self, message: str, signature=None):
        super().__init__(message)
        self.signature = signature


class TransformObstruction(DualEqError):
    """A rewiring map could not be applied at the requested anchor."""

    def __init__(self, message: str, i: int | None = None, anchor=None, target=None):
        super().__init__(message)
        self.i = i
        self.anchor = anchor
        self.target = target


class TransformFailed(DualEqError):
    """The driver could not turn a graph into a dual equivalence graph."""

    def __init__(self, message: str, events=None, detail=None):
        super().__init__(message)
        self.events = list(events or [])
        self.detail = detail
