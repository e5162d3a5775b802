"""Exception hierarchy shared by every weakval module.

Precondition and configuration problems derive from ``ValueError`` as well, so callers
that only know the standard library still catch them. Numerical and physics failures
derive from ``NumericalError``; the CLI maps them to exit code 3.
"""


class WeakValError(Exception):
    """Base class for all weakval errors."""


class NumericalError(WeakValError):
    """A numerical or physical precondition failed during a computation."""


# Configuration / precondition errors


class ConfigError(WeakValError, ValueError):
    """Invalid configuration value."""


class InvalidRange(WeakValError, ValueError):
    """A numeric range or size is outside its documented domain."""


class GridMismatch(WeakValError, ValueError):
    """Two objects that must share a grid do not."""


class BasisError(WeakValError, ValueError):
    """A wavefunction is in the wrong basis for the requested transform."""


class EmptyMixture(WeakValError, ValueError):
    """A mixture has no components or zero total weight."""


class NegativeWeight(WeakValError, ValueError):
    """A mixture weight is negative."""


class UnsupportedObservable(WeakValError, ValueError):
    """The observable cannot be handled by the requested operation."""


class ComplexField(WeakValError, ValueError):
    """A real-valued quasiprobability field was required."""


class NotNonnegative(WeakValError, ValueError):
    """A function declared nonnegative takes negative values."""


# Numerical / physics errors


class TruncationError(NumericalError):
    """The grid is too narrow for the state: boundary density exceeds tolerance."""


class AllMasked(NumericalError):
    """No grid point carries enough postselection density."""


class MaskedPoint(NumericalError):
    """The requested point lies below the density floor."""


class CurrentDensityViolation(NumericalError):
    """The pointer carries a nonzero probability current."""

    def __init__(self, message: str, maximum: float):
        super().__init__(message)
        self.maximum = maximum


class GridOverflow(NumericalError):
    """The coupling would shift pointer mass off the pointer grid."""


class PositivityViolation(NumericalError):
    """A classical weak value of a nonnegative variable came out negative."""


class DerivativeUnavailable(NumericalError):
    """Partial derivatives needed by a kick could not be obtained."""


class ConservationViolation(NumericalError):
    """A quantity conserved by the kick flow drifted beyond tolerance."""
