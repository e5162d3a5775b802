"""Unitary position <-> momentum transforms.

Convention: <q|p> = exp(i q p) / sqrt(2 pi), so
psi~(p) = (2 pi)^(-1/2) * integral dq exp(-i q p) psi(q). The discrete transform carries
the grid-offset phases so that it reproduces this integral to discretization error and
is exactly unitary on the grid.
"""

import numpy as np
from scipy import fft

from weakval.config import get_settings
from weakval.core import Basis, QuadratureGrid, WaveFunction
from weakval.core.errors import BasisError


def _along(vector: np.ndarray, ndim: int, axis: int) -> np.ndarray:
    shape = [1] * ndim
    shape[axis] = vector.shape[0]
    return vector.reshape(shape)


def _alternating(n: int) -> np.ndarray:
    return np.where(np.arange(n) % 2 == 0, 1.0, -1.0)


def position_to_momentum(grid: QuadratureGrid, values: np.ndarray, axis: int = 0) -> np.ndarray:
    """Apply the forward transform along one axis of an amplitude array."""
    values = np.asarray(values, dtype=np.complex128)
    n = grid.n_points
    sign = _along(_alternating(n), values.ndim, axis)
    phase = _along(np.exp(-1j * grid.q_min * grid.p), values.ndim, axis)
    spectrum = fft.fft(values * sign, axis=axis, workers=get_settings().threads)
    return grid.dq / np.sqrt(2.0 * np.pi) * phase * spectrum


def momentum_to_position(grid: QuadratureGrid, values: np.ndarray, axis: int = 0) -> np.ndarray:
    """Apply the inverse transform along one axis of an amplitude array."""
    values = np.asarray(values, dtype=np.complex128)
    n = grid.n_points
    sign = _along(_alternating(n), values.ndim, axis)
    phase = _along(np.exp(1j * grid.q_min * grid.p), values.ndim, axis)
    samples = fft.ifft(values * phase, axis=axis, workers=get_settings().threads)
    return grid.dp * n / np.sqrt(2.0 * np.pi) * sign * samples


def to_momentum(wf: WaveFunction) -> WaveFunction:
    """Transform a position-basis wavefunction to the momentum basis."""
    if wf.basis is not Basis.POSITION:
        raise BasisError("wavefunction is already in the momentum basis")
    return WaveFunction(wf.grid, position_to_momentum(wf.grid, wf.amplitudes), Basis.MOMENTUM)


def to_position(wf: WaveFunction) -> WaveFunction:
    """Transform a momentum-basis wavefunction to the position basis."""
    if wf.basis is not Basis.MOMENTUM:
        raise BasisError("wavefunction is already in the position basis")
    return WaveFunction(wf.grid, momentum_to_position(wf.grid, wf.amplitudes), Basis.POSITION)


def in_position(wf: WaveFunction) -> WaveFunction:
    """Return ``wf`` in the position basis, transforming only if needed."""
    return wf if wf.basis is Basis.POSITION else to_position(wf)


def in_momentum(wf: WaveFunction) -> WaveFunction:
    """Return ``wf`` in the momentum basis, transforming only if needed."""
    return wf if wf.basis is Basis.MOMENTUM else to_momentum(wf)
