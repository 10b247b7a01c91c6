"""Exception hierarchy shared by every module."""


class SplineError(Exception):
    """Base class for all errors raised by gspline."""


class Incompatible(SplineError):
    """A congruence system has no solution.

    ``i`` and ``j`` index a violating pair of the input list when known.
    """

    def __init__(self, i=None, j=None, message=None):
        self.i = i
        self.j = j
        if message is None:
            if i is None:
                message = "congruence system has no solution"
            else:
                message = f"congruences {i} and {j} are incompatible"
        super().__init__(message)


class InvalidGraph(SplineError):
    pass


class InvalidVertex(SplineError):
    pass


class NotSimple(SplineError):
    pass


class Disconnected(SplineError):
    pass


class LengthMismatch(SplineError):
    pass


class ZeroSpline(SplineError):
    pass


class NotInSpan(SplineError):
    pass


class InternalInconsistency(SplineError, AssertionError):
    """Raised when a proven invariant fails; always a bug."""


class ResourceLimit(SplineError):
    """A search exceeded its configured cap."""

    def __init__(self, message, count, limit):
        self.count = count
        self.limit = limit
        super().__init__(message)


class PathExplosion(ResourceLimit):
    def __init__(self, count, limit):
        super().__init__(f"more than {limit} paths (stopped at {count}); raise the path limit", count, limit)


class CapExceeded(ResourceLimit):
    def __init__(self, count, limit):
        super().__init__(f"residue enumeration exceeded cap of {limit} nodes", count, limit)


class SearchBoundExceeded(ResourceLimit):
    def __init__(self, count, limit):
        super().__init__(f"divisor scan needs {count} trials, bound is {limit}", count, limit)


class ScanTooLarge(ResourceLimit):
    def __init__(self, count, limit):
        super().__init__(f"scan range {count} exceeds {limit}", count, limit)
