"""Exceptions raised by the algebra library.

Management commands map ``CapExceeded`` to exit code 2 and every other
``GesselError`` to exit code 1.
"""


class GesselError(Exception):
    """Base class for library errors."""


class CapExceeded(GesselError):
    def __init__(self, what, requested, limit):
        self.what = what
        self.requested = requested
        self.limit = limit
        super().__init__(f"{what}: {requested} exceeds the configured cap {limit}")


class FormatError(GesselError, ValueError):
    """Malformed textual or JSON input."""


class CyclicGraphError(GesselError, ValueError):
    pass


class NotBipartiteError(GesselError, ValueError):
    pass


class BipartitionError(GesselError, ValueError):
    pass


class BasisMismatchError(GesselError, TypeError):
    pass


class NotInSpanError(GesselError):
    """The target vector is not a combination of the family."""


class NotACycleError(GesselError, ValueError):
    pass


class PreconditionError(GesselError, ValueError):
    pass
