"""Wigner function, used as a nonnegative contrast for coherent states."""

import numpy as np
from scipy import fft
from scipy.signal import resample

from weakval.config import get_settings
from weakval.core import MixedState, QuadratureGrid, QuasiprobKind, WaveFunction
from weakval.quasiprob.base import Distribution
from weakval.quasiprob.field import QuasiprobField
from weakval.states import as_mixed, in_position


def _alternating(n: int) -> np.ndarray:
    return np.where(np.arange(n) % 2 == 0, 1.0, -1.0)


def _pure_wigner(grid: QuadratureGrid, psi: np.ndarray) -> np.ndarray:
    """W(q, p) = (1/2pi) int dy exp(-ipy) psi(q + y/2) conj(psi(q - y/2)).

    psi is interpolated onto the doubled grid (spacing dq/2) so that q +/- y/2 are grid
    points for y = m*dq; the y-sum over m = -n/2..n/2-1 is then an FFT onto the dual p grid.
    """
    n = grid.n_points
    fine = resample(psi, 2 * n)
    m = np.arange(n) - n // 2
    centre = 2 * np.arange(n)
    plus = centre[:, np.newaxis] + m[np.newaxis, :]
    minus = centre[:, np.newaxis] - m[np.newaxis, :]
    inside = (plus >= 0) & (plus < 2 * n) & (minus >= 0) & (minus < 2 * n)
    correlation = np.zeros((n, n), dtype=np.complex128)
    correlation[inside] = fine[plus[inside]] * np.conj(fine[minus[inside]])
    sign = _alternating(n)[np.newaxis, :]
    spectrum = fft.fft(correlation * sign, axis=1, workers=get_settings().threads)
    return (grid.dq / (2.0 * np.pi) * sign * spectrum).real


class WignerDistribution(Distribution):
    """Symmetric-ordering quasiprobability on the same (q, p) grid as the others."""

    kind = QuasiprobKind.WIGNER

    def compute(self, state: WaveFunction | MixedState) -> QuasiprobField:
        mixture = as_mixed(state)
        grid = mixture.grid
        values = sum(
            weight * _pure_wigner(grid, in_position(wf).amplitudes)
            for weight, wf in mixture.components
        )
        return QuasiprobField(grid, values, self.kind)


def wigner(state: WaveFunction | MixedState) -> QuasiprobField:
    """Wigner function of ``state``."""
    return WignerDistribution().compute(state)
