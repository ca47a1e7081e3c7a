"""Exception hierarchy shared by every layer of the package."""


class PPIError(Exception):
    """Base class for all errors raised by ppimod."""


class PreconditionError(PPIError, ValueError):
    """An input violates a documented precondition."""


class NotInvertibleError(PreconditionError):
    """A digit (or number) has no inverse modulo the radix."""


class InexactDivisionError(PreconditionError):
    """Exact division was requested but the divisor does not divide."""


class ResourceLimitError(PreconditionError):
    """A configured size or search cap was exceeded."""


class InvariantViolation(PPIError, RuntimeError):
    """An internal invariant failed in checked mode.

    This never signals bad input; it means an algorithm produced a state
    that its bounds forbid.
    """
