"""Exception types shared across the library."""


class DomainError(ValueError):
    """An input lies outside the documented domain of an operation."""


class ConvergenceError(RuntimeError):
    """A series, continued fraction, or quadrature failed to converge."""


class SearchError(RuntimeError):
    """An iterative parameter search hit its step cap without succeeding."""


class InternalError(RuntimeError):
    """An internal consistency guard fired; indicates a bug, not bad input."""
