class ParameterError(ValueError):
    """Arguments outside the supported range or of the wrong shape."""


class DomainError(ValueError):
    """A mathematical precondition fails (non-unit constant term, zero tail sum, ...)."""
