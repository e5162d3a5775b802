"""Pointer states and the zero-current-density check."""

import logging
from dataclasses import dataclass

import numpy as np

from weakval.core import MixedState, QuadratureGrid, WaveFunction
from weakval.core.errors import CurrentDensityViolation, InvalidRange
from weakval.core.spectral import spectral_derivative

logger = logging.getLogger(__name__)

POINTER_SPAN = 12.0
POINTER_POINTS = 512
CURRENT_TOLERANCE = 1e-10


@dataclass(frozen=True, slots=True, eq=False)
class PointerState:
    """Pointer of a von Neumann measurement, read out in its position Q.

    Attributes:
        representation: Pointer state on its own Q grid.
        sigma: Standard deviation of Q before the coupling.
        label: Short description used in file headers.
    """

    representation: MixedState
    sigma: float
    label: str = "pointer"

    def __post_init__(self) -> None:
        """Validate the pointer width."""
        if not np.isfinite(self.sigma) or self.sigma <= 0.0:
            raise InvalidRange(f"pointer sigma must be positive and finite, got {self.sigma}")

    @property
    def grid(self) -> QuadratureGrid:
        """Pointer Q grid."""
        return self.representation.grid

    def density(self) -> np.ndarray:
        """Probability density of Q."""
        return sum(w * wf.density for w, wf in self.representation.components)


@dataclass(frozen=True, slots=True)
class CurrentDensityReport:
    """Outcome of the zero-current check on a pointer."""

    max_current: float
    max_density: float
    tolerance: float = CURRENT_TOLERANCE

    @property
    def accepted(self) -> bool:
        return self.max_current < self.tolerance * self.max_density


def pointer_grid(
    sigma: float, n_points: int = POINTER_POINTS, span: float = POINTER_SPAN
) -> QuadratureGrid:
    """Symmetric Q grid covering ``span`` standard deviations on each side."""
    if span <= 0.0:
        raise InvalidRange(f"pointer span must be positive, got {span}")
    return QuadratureGrid(-span * sigma, span * sigma, n_points)


def _gaussian(grid: QuadratureGrid, sigma: float, momentum: float) -> WaveFunction:
    Q = grid.q
    amplitudes = (2.0 * np.pi * sigma**2) ** -0.25 * np.exp(-(Q**2) / (4.0 * sigma**2))
    amplitudes = amplitudes * np.exp(1j * momentum * Q)
    return WaveFunction(grid, amplitudes).normalized()


def gaussian_pointer(
    sigma: float = 1.0,
    grid: QuadratureGrid | None = None,
    momentum: float = 0.0,
    span: float = POINTER_SPAN,
    n_points: int = POINTER_POINTS,
) -> PointerState:
    """Gaussian pointer of width ``sigma``, optionally with a mean momentum ``momentum``.

    A nonzero ``momentum`` makes the pointer drift and is rejected by
    :func:`validate_pointer`.
    """
    if not np.isfinite(sigma) or sigma <= 0.0:
        raise InvalidRange(f"pointer sigma must be positive and finite, got {sigma}")
    grid = grid or pointer_grid(sigma, n_points, span)
    label = "gaussian" if momentum == 0.0 else f"gaussian-drift-{momentum:g}"
    return PointerState(MixedState.pure(_gaussian(grid, sigma, momentum)), sigma, label)


def gaussian_mixture_pointer(
    sigmas: list[float],
    weights: list[float] | None = None,
    grid: QuadratureGrid | None = None,
    span: float = POINTER_SPAN,
    n_points: int = POINTER_POINTS,
) -> PointerState:
    """Incoherent mixture of centred real Gaussians.

    The reported sigma is the standard deviation of the mixture density.
    """
    if not sigmas:
        raise InvalidRange("a mixture pointer needs at least one width")
    weights = weights or [1.0 / len(sigmas)] * len(sigmas)
    if len(weights) != len(sigmas):
        raise InvalidRange("one weight is needed per pointer width")
    total = float(sum(weights))
    weights = [w / total for w in weights]
    grid = grid or pointer_grid(max(sigmas), n_points, span)
    components = tuple((w, _gaussian(grid, s, 0.0)) for w, s in zip(weights, sigmas, strict=True))
    sigma = float(np.sqrt(sum(w * s**2 for w, s in zip(weights, sigmas, strict=True))))
    return PointerState(MixedState(components), sigma, "gaussian-mixture")


def current_density(pointer: PointerState) -> np.ndarray:
    """J(Q) = Im[sum_k w_k conj(phi_k) phi_k'] by spectral differentiation."""
    dQ = pointer.grid.dq
    current = np.zeros(pointer.grid.n_points)
    for weight, wf in pointer.representation.components:
        phi = wf.amplitudes
        current += weight * np.imag(np.conj(phi) * spectral_derivative(phi, dQ))
    return current


def current_density_report(pointer: PointerState) -> CurrentDensityReport:
    """Measure the pointer current without raising."""
    return CurrentDensityReport(
        max_current=float(np.abs(current_density(pointer)).max()),
        max_density=float(pointer.density().max()),
    )


def validate_pointer(pointer: PointerState) -> CurrentDensityReport:
    """Require a vanishing pointer current; raise :class:`CurrentDensityViolation` otherwise."""
    report = current_density_report(pointer)
    if not report.accepted:
        raise CurrentDensityViolation(
            f"pointer {pointer.label!r} carries a probability current: max |J| = "
            f"{report.max_current:.3e} exceeds {report.tolerance:g} x max density "
            f"{report.max_density:.3e}",
            report.max_current,
        )
    logger.debug(f"pointer {pointer.label!r} accepted, max |J| = {report.max_current:.3e}")
    return report
