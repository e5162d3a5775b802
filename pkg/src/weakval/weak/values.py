"""Numerical weak values for states postselected on position."""

import logging

import numpy as np

from weakval.core import MixedState, ObservableSpec, QuadratureGrid, WaveFunction
from weakval.core.errors import AllMasked, GridMismatch
from weakval.core.spectral import interval_integral
from weakval.states import as_mixed, coherent_state, in_position
from weakval.states.operators import apply_to_amplitudes
from weakval.weak.closed_form import negativity_region
from weakval.weak.profile import DENSITY_FLOOR, WeakValueProfile

logger = logging.getLogger(__name__)


def _resolve(state: WaveFunction | MixedState, grid: QuadratureGrid | None) -> MixedState:
    mixture = as_mixed(state)
    if grid is not None and grid != mixture.grid:
        raise GridMismatch("state grid differs from the requested grid")
    return mixture


def _profile(
    grid: QuadratureGrid, numerator: np.ndarray, density: np.ndarray
) -> WeakValueProfile:
    floor = DENSITY_FLOOR * float(density.max())
    valid = density >= floor
    if floor <= 0.0 or not valid.any():
        raise AllMasked("no grid point carries postselection density above the floor")
    values = np.full(grid.n_points, np.nan + 1j * np.nan, dtype=np.complex128)
    values[valid] = numerator[valid] / density[valid]
    logger.debug(f"weak value profile: {int((~valid).sum())} of {grid.n_points} points masked")
    return WeakValueProfile(
        grid=grid,
        values=values,
        postselection_density=density,
        valid_mask=valid,
        density_floor=floor,
    )


def weak_value(
    obs: ObservableSpec, state: WaveFunction | MixedState, grid: QuadratureGrid | None = None
) -> WeakValueProfile:
    """Weak value c_w(q) = <q|c rho|q> / <q|rho|q> for every grid position.

    For a mixture the numerator is sum_k w_k (c psi_k)(q) psi_k(q)* and the denominator
    sum_k w_k |psi_k(q)|^2.
    """
    mixture = _resolve(state, grid)
    grid = mixture.grid
    numerator = np.zeros(grid.n_points, dtype=np.complex128)
    density = np.zeros(grid.n_points)
    for weight, wf in mixture.components:
        psi = in_position(wf).amplitudes
        numerator += weight * apply_to_amplitudes(obs, grid, psi) * np.conj(psi)
        density += weight * np.abs(psi) ** 2
    return _profile(grid, numerator, density)


def weak_energy_relation(
    state: WaveFunction | MixedState, grid: QuadratureGrid | None = None
) -> WeakValueProfile:
    """Profile of 2 Re[E_w(q)] - q^2, the energy route to Re[(p^2)_w](q)."""
    energy = weak_value(ObservableSpec.energy(), state, grid)
    q = energy.grid.q
    values = np.full(q.shape, np.nan + 1j * np.nan, dtype=np.complex128)
    mask = energy.valid_mask
    values[mask] = 2.0 * energy.values.real[mask] - q[mask] ** 2
    return WeakValueProfile(
        grid=energy.grid,
        values=values,
        postselection_density=energy.postselection_density,
        valid_mask=mask,
        density_floor=energy.density_floor,
    )


def negativity_probability_numeric(alpha: complex, grid: QuadratureGrid) -> float:
    """Probability that postselection lands where Re[(p^2)_w] < 0, by quadrature.

    Integrates the sampled coherent-state density over the two tails outside the
    negativity region using the band-limited interpolant of the samples.
    """
    density = coherent_state(alpha, grid).density
    q_low, q_high = negativity_region(alpha)
    a = min(max(q_low, grid.q_min), grid.q_max)
    b = min(max(q_high, grid.q_min), grid.q_max)
    total = float(density.sum() * grid.dq)
    inside = interval_integral(density, grid.q_min, grid.dq, a, b)
    return total - inside


def observed_negativity_probability(profile: WeakValueProfile) -> float:
    """Postselection mass on valid points where Re c_w < 0 (any state)."""
    mask = profile.valid_mask & (np.nan_to_num(profile.values.real, nan=0.0) < 0.0)
    return float(profile.postselection_density[mask].sum() * profile.grid.dq)
