class CapacityError(ValueError):
    """An interval or matrix would exceed the configured size cap."""


class DimensionError(ValueError):
    """Operands live in different rings or have incompatible shapes."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; this always indicates a bug."""


class Inconclusive(Exception):
    """The question cannot be decided by the available method."""
