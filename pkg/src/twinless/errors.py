"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed or out-of-range graph input."""


class PreconditionError(ValueError):
    """An operation was called on a graph that does not meet its requirements."""


class InvariantViolation(RuntimeError):
    """Internal consistency check failed; indicates a bug, not bad input."""


class OracleBudgetExceeded(RuntimeError):
    """A brute-force oracle was asked to enumerate beyond its budget."""
