"""Exception hierarchy shared by all divbounds modules."""


class DivBoundsError(Exception):
    """Base class for all errors raised by this package."""


class EmptyOrTooShort(DivBoundsError):
    """Input vector has fewer than two entries."""


class NegativeEntry(DivBoundsError):
    """Input vector contains a negative weight."""


class ZeroEntry(DivBoundsError):
    """Normalized distribution would contain an exact zero."""


class NonFinite(DivBoundsError):
    """A NaN or infinity appeared where a finite real is required."""


class NotNormalized(DivBoundsError):
    """Distribution entries do not sum to 1 within tolerance."""


class NonPositiveAlpha(DivBoundsError):
    """Smoothing constant must be strictly positive."""


class LengthMismatch(DivBoundsError):
    """The two distributions have different support sizes."""


class InvalidRange(DivBoundsError):
    """Ratio range violates 0 < r <= R (or the bound's extra hypotheses)."""


class UnknownMeasure(DivBoundsError):
    """Measure identifier not recognized."""


class NonPositiveX(DivBoundsError):
    """Generator argument must lie in (0, inf)."""


class NotTabulated(DivBoundsError):
    """No tabulated global extremum for this (measure, s) pair."""


class DegeneratePair(DivBoundsError):
    """P equals Q coordinatewise; ratio estimators are 0/0 there."""


class VanishingDenominator(DivBoundsError):
    """An estimator denominator underflowed to (near) zero."""


class UnknownSuite(DivBoundsError):
    """Verification suite identifier not recognized."""
