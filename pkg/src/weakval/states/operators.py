"""Operator application and expectation values."""

import numpy as np

from weakval.core import (
    Basis,
    MixedState,
    ObservableKind,
    ObservableSpec,
    QuadratureGrid,
    WaveFunction,
)
from weakval.states.constructors import as_mixed
from weakval.states.transforms import (
    in_position,
    momentum_to_position,
    position_to_momentum,
    to_momentum,
)


def apply_to_amplitudes(
    obs: ObservableSpec, grid: QuadratureGrid, amplitudes: np.ndarray
) -> np.ndarray:
    """Apply ``obs`` to position-basis amplitudes.

    q-diagonal observables multiply pointwise; p-diagonal ones multiply by their symbol
    in the momentum basis (spectral differentiation), then transform back.
    """
    match obs.kind:
        case ObservableKind.DIAGONAL_IN_Q | ObservableKind.Q_SQUARED:
            return obs.symbol(grid.q) * amplitudes
        case ObservableKind.DIAGONAL_IN_P | ObservableKind.P_SQUARED:
            momentum = position_to_momentum(grid, amplitudes)
            return momentum_to_position(grid, obs.symbol(grid.p) * momentum)
        case ObservableKind.ENERGY | ObservableKind.COMBINATION:
            return sum(a * apply_to_amplitudes(term, grid, amplitudes) for a, term in obs.terms)
    raise AssertionError(f"unhandled observable kind {obs.kind}")


def apply_observable(obs: ObservableSpec, wf: WaveFunction) -> WaveFunction:
    """Return the unnormalized function c|psi> in the same basis as ``wf``."""
    psi = in_position(wf)
    result = WaveFunction(wf.grid, apply_to_amplitudes(obs, wf.grid, psi.amplitudes))
    return result if wf.basis is Basis.POSITION else to_momentum(result)


def expectation(obs: ObservableSpec, state: WaveFunction | MixedState) -> float:
    """Real part of Tr(c rho)."""
    mixture = as_mixed(state)
    grid = mixture.grid
    total = 0.0
    for weight, wf in mixture.components:
        psi = in_position(wf).amplitudes
        applied = apply_to_amplitudes(obs, grid, psi)
        total += weight * float(np.real(np.vdot(psi, applied)) * grid.dq)
    return total


def _moments(points: np.ndarray, density: np.ndarray, weight: float) -> tuple[float, float]:
    mass = density.sum() * weight
    mean = float((points * density).sum() * weight / mass)
    variance = float(((points - mean) ** 2 * density).sum() * weight / mass)
    return mean, variance


def position_moments(state: WaveFunction | MixedState) -> tuple[float, float]:
    """Mean and variance of q."""
    mixture = as_mixed(state)
    grid = mixture.grid
    density = sum(w * in_position(wf).density for w, wf in mixture.components)
    return _moments(grid.q, density, grid.dq)


def momentum_moments(state: WaveFunction | MixedState) -> tuple[float, float]:
    """Mean and variance of p."""
    mixture = as_mixed(state)
    grid = mixture.grid
    density = sum(
        w * np.abs(position_to_momentum(grid, in_position(wf).amplitudes)) ** 2
        for w, wf in mixture.components
    )
    return _moments(grid.p, density, grid.dp)
