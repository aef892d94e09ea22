"""Exception hierarchy. Every error raised by the library derives from TorientedError."""


class TorientedError(Exception):
    pass


class DimensionMismatchError(TorientedError, ValueError):
    pass


class DomainError(TorientedError, ValueError):
    pass


class DegeneracyError(TorientedError, ValueError):
    """Polytope (or point set) is not full-dimensional."""


class ValidationError(TorientedError, ValueError):
    pass


class ResourceLimitError(TorientedError):
    """A brute-force routine would exceed its configured cap."""
