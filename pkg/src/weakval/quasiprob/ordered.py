"""Standard-ordered, Kirkwood and Margenau-Hill distributions.

S(q, p) = <q|p><p|rho|q>. With <q|p> = exp(iqp)/sqrt(2 pi) and
rho = sum_k w_k |psi_k><psi_k|:

    S(q, p) = sum_k w_k exp(iqp)/sqrt(2 pi) * psi~_k(p) * conj(psi_k(q))

The Kirkwood distribution is conj(S); Margenau-Hill is Re S.
"""

import numpy as np

from weakval.core import MixedState, QuasiprobKind, WaveFunction
from weakval.quasiprob.base import Distribution
from weakval.quasiprob.field import QuasiprobField
from weakval.states import as_mixed, in_position
from weakval.states.transforms import position_to_momentum


class StandardOrderedDistribution(Distribution):
    """S(q, p) = <q|p><p|rho|q>; complex, with exact discrete marginals."""

    kind = QuasiprobKind.STANDARD_ORDERED

    def compute(self, state: WaveFunction | MixedState) -> QuasiprobField:
        mixture = as_mixed(state)
        grid = mixture.grid
        n = grid.n_points
        overlap = np.zeros((n, n), dtype=np.complex128)
        for weight, wf in mixture.components:
            psi = in_position(wf).amplitudes
            psi_p = position_to_momentum(grid, psi)
            overlap += weight * np.outer(np.conj(psi), psi_p)
        kernel = np.exp(1j * np.outer(grid.q, grid.p)) / np.sqrt(2.0 * np.pi)
        return QuasiprobField(grid, kernel * overlap, self.kind)


class KirkwoodDistribution(Distribution):
    """Complex conjugate of the standard-ordered distribution."""

    kind = QuasiprobKind.KIRKWOOD

    def compute(self, state: WaveFunction | MixedState) -> QuasiprobField:
        standard = StandardOrderedDistribution().compute(state)
        return QuasiprobField(standard.q_grid, np.conj(standard.values), self.kind)


class MargenauHillDistribution(Distribution):
    """Real part of the standard-ordered distribution; can be negative."""

    kind = QuasiprobKind.MARGENAU_HILL

    def compute(self, state: WaveFunction | MixedState) -> QuasiprobField:
        standard = StandardOrderedDistribution().compute(state)
        return QuasiprobField(standard.q_grid, standard.values.real, self.kind)


def standard_ordered(state: WaveFunction | MixedState) -> QuasiprobField:
    """Standard-ordered distribution of ``state``."""
    return StandardOrderedDistribution().compute(state)


def kirkwood(state: WaveFunction | MixedState) -> QuasiprobField:
    """Kirkwood distribution of ``state``."""
    return KirkwoodDistribution().compute(state)


def margenau_hill(state: WaveFunction | MixedState) -> QuasiprobField:
    """Margenau-Hill distribution of ``state``."""
    return MargenauHillDistribution().compute(state)
