"""Exception types shared across the library."""


class DivgapError(Exception):
    """Base class for every library-specific error."""


class OracleBoundExceeded(DivgapError):
    """The trial-division path was asked about an integer above its configured bound."""


class ResourceLimit(DivgapError):
    """A computation would exceed a configured resource cap (divisor count, term size)."""


class NoQualifyingPair(DivgapError):
    """No complementary-divisor pair has a difference above the requested threshold."""


class SimulationCapExceeded(DivgapError):
    """The requested circle size exceeds the configured simulation cap."""


class InsufficientPrecision(DivgapError):
    """An interval is too wide to pin down the requested value unambiguously."""


class EmptyIntersection(DivgapError):
    """Constraint intervals have an empty intersection.

    Carries the 1-based index of the first constraint that emptied the
    running intersection; this situation would falsify the ceiling closed
    form, so callers must surface it rather than clamp.
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index
