"""Exception types shared across the package.

Numeric failures carry enough context (point, bound) for callers to retry
with nudged domains or higher precision instead of guessing.
"""

from __future__ import annotations


class CritlineError(Exception):
    """Base class for all package-specific errors."""


class ParseError(CritlineError):
    """Malformed user input (complex literal, window spec, config line)."""


class NumericError(CritlineError):
    """Base class for evaluation and root-finding failures."""


class PoleAtOne(NumericError):
    """Hurwitz zeta requested too close to its simple pole at s = 1."""


class GammaPole(NumericError):
    """log-gamma (or the functional-equation multiplier) hit a gamma pole."""


class ExactZeroMultiplier(CritlineError):
    """Signal: cos(pi*s/2) vanishes exactly, so the multiplier is degenerate.

    Raised for odd-integer real s.  Not a failure: callers mark the sample
    and move on (the identity cannot be tested as a ratio there).
    """

    def __init__(self, s):
        super().__init__(f"multiplier degenerate at s = {s}: cos(pi*s/2) = 0")
        self.s = s


class PrecisionExhausted(NumericError):
    """The certified error bound cannot reach the target within parameter limits."""


class BoundaryTooClose(NumericError):
    """A contour sample sits too close to a zero for a trustworthy winding.

    Carries the offending point and which edge it was sampled on so the
    caller can nudge that edge and retry.
    """

    def __init__(self, point, edge: str, magnitude, threshold):
        super().__init__(
            f"|f| = {magnitude} at {point} on edge '{edge}' is below "
            f"the safe threshold {threshold}"
        )
        self.point = point
        self.edge = edge
        self.magnitude = magnitude
        self.threshold = threshold


class NewtonDiverged(NumericError):
    """Newton and the Muller fallback both failed to converge to a zero."""


class MaxDepthExceeded(NumericError):
    """Rectangle subdivision hit its depth limit without isolating zeros."""


class RatioUndefined(NumericError):
    """L(5,3,s) vanished at a ratio-diagnostic sample point."""
