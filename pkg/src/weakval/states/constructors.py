"""Grid and state constructors."""

import logging

import numpy as np

from weakval.core import Basis, MixedState, QuadratureGrid, WaveFunction
from weakval.core.errors import (
    EmptyMixture,
    GridMismatch,
    InvalidRange,
    NegativeWeight,
    TruncationError,
)

logger = logging.getLogger(__name__)

# Boundary density must stay below this fraction of the peak density.
BOUNDARY_TOLERANCE = 1e-12

MAX_FOCK_NUMBER = 50

DEFAULT_GRID = (-16.0, 16.0, 1024)


def make_grid(q_min: float, q_max: float, n_points: int) -> QuadratureGrid:
    """Build a quadrature grid; rejects inverted ranges and non-power-of-two sizes."""
    return QuadratureGrid(float(q_min), float(q_max), int(n_points))


def default_grid() -> QuadratureGrid:
    """Grid q in [-16, 16) with 1024 points; holds |alpha_r|, |alpha_i| <= 6."""
    return make_grid(*DEFAULT_GRID)


def alpha_from_quadratures(alpha_r: float, alpha_i: float) -> complex:
    """Complex amplitude alpha = (alpha_r + i*alpha_i)/sqrt(2)."""
    return complex(alpha_r, alpha_i) / np.sqrt(2.0)


def quadratures_of(alpha: complex) -> tuple[float, float]:
    """Inverse of :func:`alpha_from_quadratures`."""
    scaled = complex(alpha) * np.sqrt(2.0)
    return scaled.real, scaled.imag


def _check_boundary(grid: QuadratureGrid, edge_density: float, peak_density: float, what: str):
    if peak_density <= 0.0 or edge_density > BOUNDARY_TOLERANCE * peak_density:
        ratio = edge_density / peak_density if peak_density > 0 else np.inf
        raise TruncationError(
            f"{what}: boundary density is {ratio:.3g} of the peak on "
            f"[{grid.q_min}, {grid.q_max}] (tolerance {BOUNDARY_TOLERANCE:g})"
        )


def coherent_state(alpha: complex, grid: QuadratureGrid) -> WaveFunction:
    """Quadrature representation of the coherent state |alpha>.

    Samples pi^(-1/4) exp(-q^2/2 + sqrt(2) alpha q - |alpha|^2/2 - alpha^2/2) and
    renormalizes on the grid. The density peaks at q = sqrt(2) Re(alpha).
    """
    alpha = complex(alpha)
    alpha_r, _ = quadratures_of(alpha)
    # relative density at the edges is exp(-(edge - alpha_r)^2)
    edge_exponent = min((grid.q_min - alpha_r) ** 2, (grid.q_max - alpha_r) ** 2)
    _check_boundary(grid, np.exp(-edge_exponent), 1.0, f"coherent state alpha={alpha:.4g}")

    q = grid.q
    exponent = (
        -0.5 * q**2 + np.sqrt(2.0) * alpha * q - 0.5 * abs(alpha) ** 2 - 0.5 * alpha**2
    )
    amplitudes = np.pi**-0.25 * np.exp(exponent)
    return WaveFunction(grid, amplitudes, Basis.POSITION).normalized()


def coherent_state_from_quadratures(
    alpha_r: float, alpha_i: float, grid: QuadratureGrid
) -> WaveFunction:
    """Coherent state with alpha = (alpha_r + i*alpha_i)/sqrt(2)."""
    return coherent_state(alpha_from_quadratures(alpha_r, alpha_i), grid)


def _hermite_functions(n: int, q: np.ndarray) -> np.ndarray:
    """Normalized Hermite function psi_n(q) by the stable three-term recurrence."""
    previous = np.zeros_like(q)
    current = np.pi**-0.25 * np.exp(-0.5 * q**2)
    for k in range(n):
        previous, current = current, (
            np.sqrt(2.0 / (k + 1)) * q * current - np.sqrt(k / (k + 1)) * previous
        )
    return current


def fock_state(n: int, grid: QuadratureGrid) -> WaveFunction:
    """Number state |n>: the n-th Hermite-Gaussian, normalized on the grid."""
    if int(n) != n or n < 0:
        raise InvalidRange(f"Fock number must be a nonnegative integer, got {n}")
    if n > MAX_FOCK_NUMBER:
        raise InvalidRange(f"Fock number {n} exceeds the cutoff {MAX_FOCK_NUMBER}")
    points = np.append(grid.q, grid.q_max)
    values = _hermite_functions(int(n), points)
    density = values**2
    edge = max(density[0], density[-1], density[-2])
    _check_boundary(grid, edge, density.max(), f"Fock state n={n}")
    return WaveFunction(grid, values[:-1], Basis.POSITION).normalized()


def mix(components: list[tuple[float, WaveFunction]]) -> MixedState:
    """Build a mixture, renormalizing weights to sum to one."""
    if not components:
        raise EmptyMixture("a mixture needs at least one component")
    for weight, _ in components:
        if weight < 0.0:
            raise NegativeWeight(f"mixture weight {weight} is negative")
    grid = components[0][1].grid
    if any(wf.grid != grid for _, wf in components):
        raise GridMismatch("all mixture components must share one grid")
    total = float(sum(w for w, _ in components))
    if total <= 0.0:
        raise EmptyMixture("mixture weights sum to zero")
    return MixedState(tuple((w / total, wf) for w, wf in components))


def as_mixed(state: WaveFunction | MixedState) -> MixedState:
    """Accept a pure or mixed state and return a mixture."""
    if isinstance(state, MixedState):
        return state
    return MixedState.pure(state)
