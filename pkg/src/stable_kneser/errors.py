"""Exception types shared across the package."""


class StableKneserError(Exception):
    """Base class for all package-specific errors."""


class CapacityError(StableKneserError, ValueError):
    """Instance exceeds a hard size limit (ground set > 64, exhaustive cap, ...)."""


class InternalContractError(StableKneserError, RuntimeError):
    """A mathematically-impossible state was reached.

    Raised on code paths that a proof argument rules out (a vertex avoiding
    the coloring interval, a color class that is neither a star nor a
    triangle, ...).  Seeing this exception means the implementation is wrong,
    not the input.
    """


class StateError(StableKneserError, RuntimeError):
    """An operation was called before its required predecessor."""
