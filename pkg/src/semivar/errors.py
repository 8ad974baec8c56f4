"""Exception types shared across the package."""

from __future__ import annotations


class SemivarError(Exception):
    """Base class for all errors raised by this package."""


class SpaceMismatchError(SemivarError, ValueError):
    """Two objects live in incompatible normed spaces."""


class UnsupportedRepresentationError(SemivarError, ValueError):
    """The requested computation has no exact representation here.

    Raised e.g. for tails under a non-Euclidean sequence norm, for exact
    maximization over too many sign patterns, or for operator arithmetic
    that would leave the closed-form registry.
    """


class LimitDoesNotExistError(SemivarError):
    """A one-sided limit requested at a point where it does not exist."""

    def __init__(self, point: float, side: str, message: str | None = None):
        self.point = point
        self.side = side
        super().__init__(message or f"one-sided limit does not exist at t={point} (side={side})")


class PartitionDepthError(SemivarError):
    """Bisection depth cap exceeded while searching for a fine partition."""

    def __init__(self, subinterval: tuple[float, float], depth: int):
        self.subinterval = subinterval
        self.depth = depth
        super().__init__(
            f"depth cap {depth} exceeded; smallest uncovered subinterval {subinterval}"
        )


class NoConvergenceError(SemivarError):
    """Refinement iteration did not reach the requested tolerance."""

    def __init__(self, gaps: list[float], tol: float):
        self.gaps = list(gaps)
        self.tol = tol
        super().__init__(
            f"no convergence to tol={tol:g} after {len(gaps)} refinements; "
            f"last gaps {gaps[-3:] if len(gaps) >= 3 else gaps}"
        )


class SchemaError(SemivarError, ValueError):
    """Malformed JSON input; carries the offending path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")
