"""Exception hierarchy shared by every engine in the package."""


class RepGLError(Exception):
    """Base class for all domain errors raised by :mod:`repgl`."""


class ParseError(RepGLError, ValueError):
    """Malformed bipartition text; ``position`` is the offending character index."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class BoundExceeded(RepGLError):
    """A size or length bound guarding exponential work was exceeded."""


class PeelingFailure(RepGLError):
    """A multiset could not be written as a sum of linkage classes."""


class NotContained(RepGLError):
    pass


class DoesNotFit(RepGLError):
    pass


class NotAlmostCross(RepGLError):
    pass


class NoRemovableBox(RepGLError):
    pass


class InternalContradiction(RepGLError):
    """Raised when a proven structural guarantee fails; always a bug."""
