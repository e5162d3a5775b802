"""Exact evolution under the coupling exp(-i eps c x P) and pointer readout."""

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np
import pandas as pd

from weakval.core import MixedState, ObservableSpec, QuadratureGrid, WaveFunction
from weakval.core.errors import (
    GridMismatch,
    GridOverflow,
    InvalidRange,
    MaskedPoint,
    UnsupportedObservable,
)
from weakval.core.spectral import fourier_shift
from weakval.measurement.pointer import PointerState
from weakval.states import as_mixed, in_position
from weakval.states.transforms import momentum_to_position, position_to_momentum

logger = logging.getLogger(__name__)

TAIL_FLOOR = 1e-26
SUPPORT_THRESHOLD = 1e-12
CONDITIONING_FLOOR = 1e-10


@dataclass(frozen=True, slots=True, eq=False)
class JointDistribution:
    """Joint density of object position q and pointer position Q after the coupling.

    Attributes:
        q_grid: Object position grid (first axis).
        Q_grid: Pointer position grid (second axis).
        values: Nonnegative density indexed ``[q_index, Q_index]``.
        epsilon: Coupling strength used.
        label: Observable label.
    """

    q_grid: QuadratureGrid
    Q_grid: QuadratureGrid
    values: np.ndarray
    epsilon: float
    label: str = ""

    def __post_init__(self) -> None:
        """Validate shape and sign, then freeze."""
        values = np.array(self.values, dtype=np.float64)
        expected = (self.q_grid.n_points, self.Q_grid.n_points)
        if values.shape != expected:
            raise GridMismatch(f"joint density has shape {values.shape}, expected {expected}")
        if values.min() < 0.0:
            raise InvalidRange("joint density must be nonnegative")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    def total(self) -> float:
        """Integral over both axes."""
        return float(self.values.sum() * self.q_grid.dq * self.Q_grid.dq)

    def object_marginal(self) -> np.ndarray:
        """Density of q after the coupling."""
        return self.values.sum(axis=1) * self.Q_grid.dq

    def pointer_marginal(self) -> np.ndarray:
        """Density of Q after the coupling, without postselection."""
        return self.values.sum(axis=0) * self.q_grid.dq

    def conditioning_mask(self) -> np.ndarray:
        """Object positions whose marginal density clears the conditioning floor."""
        marginal = self.object_marginal()
        return marginal >= CONDITIONING_FLOOR * float(marginal.max())

    def conditional_density(self, q: float) -> np.ndarray:
        """Normalized pointer density conditioned on object position ``q``."""
        k = self.q_grid.index_of(q)
        if not self.conditioning_mask()[k]:
            raise MaskedPoint(f"object density at q={q} is below the conditioning floor")
        row = self.values[k]
        return row / (row.sum() * self.Q_grid.dq)

    def header(self) -> dict[str, Any]:
        """Grid metadata for binary dumps."""
        return {
            "kind": "joint",
            "observable": self.label,
            "epsilon": self.epsilon,
            "q_min": self.q_grid.q_min,
            "q_max": self.q_grid.q_max,
            "n_q": self.q_grid.n_points,
            "Q_min": self.Q_grid.q_min,
            "Q_max": self.Q_grid.q_max,
            "n_Q": self.Q_grid.n_points,
        }

    def to_slice_frame(self, qs: list[float]) -> pd.DataFrame:
        """Conditional pointer densities at the requested q values: columns ``q, Q, density``."""
        frames = [
            pd.DataFrame(
                {
                    "q": float(self.q_grid.q[self.q_grid.index_of(q)]),
                    "Q": self.Q_grid.q,
                    "density": self.conditional_density(q),
                }
            )
            for q in qs
        ]
        return pd.concat(frames, ignore_index=True)


def _retained(density: np.ndarray) -> np.ndarray:
    """Samples whose density clears the floor relative to the peak.

    The floor sits just above FFT round-off.
    """
    return density >= TAIL_FLOOR * float(density.max())


def _check_overflow(pointer: PointerState, shifts: np.ndarray) -> None:
    density = pointer.density()
    support = pointer.grid.q[density > SUPPORT_THRESHOLD * float(density.max())]
    low = float(support.min() + shifts.min())
    high = float(support.max() + shifts.max())
    Q = pointer.grid.q
    logger.debug(f"pointer support after shift: [{low:.4g}, {high:.4g}]")
    if low < Q[0] or high > Q[-1]:
        raise GridOverflow(
            f"coupling shifts pointer mass to [{low:.4g}, {high:.4g}], outside the pointer "
            f"grid [{Q[0]:.4g}, {Q[-1]:.4g}]; widen the pointer grid or reduce epsilon"
        )


def _evolve_pure_p(
    grid: QuadratureGrid, psi: np.ndarray, obs: ObservableSpec, epsilon: float, pointer: PointerState
) -> np.ndarray:
    """Psi(q, Q) = (2 pi)^(-1/2) int dp exp(iqp) psi~(p) phi(Q - eps c(p)), summed over pointers."""
    psi_p = position_to_momentum(grid, psi)
    mass = np.abs(psi_p) ** 2 * grid.dp
    keep = _retained(mass)
    logger.debug(f"neglected momentum tail mass {float(mass[~keep].sum()):.3e}")
    shifts = epsilon * obs.symbol(grid.p[keep])
    _check_overflow(pointer, shifts)
    density = np.zeros((grid.n_points, pointer.grid.n_points))
    for weight, wf in pointer.representation.components:
        shifted = np.zeros((grid.n_points, pointer.grid.n_points), dtype=np.complex128)
        shifted[keep] = fourier_shift(wf.amplitudes, pointer.grid.dq, shifts)
        joint = momentum_to_position(grid, psi_p[:, np.newaxis] * shifted, axis=0)
        density += weight * np.abs(joint) ** 2
    return density


def _evolve_pure_q(
    grid: QuadratureGrid, psi: np.ndarray, obs: ObservableSpec, epsilon: float, pointer: PointerState
) -> np.ndarray:
    """Psi(q, Q) = psi(q) phi(Q - eps c(q)), summed over pointers."""
    keep = _retained(np.abs(psi) ** 2 * grid.dq)
    shifts = epsilon * obs.symbol(grid.q[keep])
    _check_overflow(pointer, shifts)
    density = np.zeros((grid.n_points, pointer.grid.n_points))
    for weight, wf in pointer.representation.components:
        shifted = fourier_shift(wf.amplitudes, pointer.grid.dq, shifts)
        density[keep] += weight * np.abs(psi[keep, np.newaxis] * shifted) ** 2
    return density


def evolve_joint(
    state: WaveFunction | MixedState,
    pointer: PointerState,
    obs: ObservableSpec,
    epsilon: float,
) -> JointDistribution:
    """Apply exp(-i eps c x P) exactly and return the (q, Q) density.

    Pointer translations by non-grid amounts use band-limited interpolation, so the
    evolution is unitary to machine precision. Mixtures combine pure-pair results.
    """
    if not np.isfinite(epsilon) or epsilon < 0.0:
        raise InvalidRange(f"epsilon must be nonnegative, got {epsilon}")
    if obs.is_diagonal_in_p:
        evolve = _evolve_pure_p
    elif obs.is_diagonal_in_q:
        evolve = _evolve_pure_q
    else:
        raise UnsupportedObservable(
            f"observable {obs.label!r} is not diagonal in q or p; exact evolution unavailable"
        )
    mixture = as_mixed(state)
    grid = mixture.grid
    values = np.zeros((grid.n_points, pointer.grid.n_points))
    for weight, wf in mixture.components:
        values += weight * evolve(grid, in_position(wf).amplitudes, obs, epsilon, pointer)
    return JointDistribution(grid, pointer.grid, values, float(epsilon), obs.label)


def conditional_pointer_means(joint: JointDistribution) -> tuple[np.ndarray, np.ndarray]:
    """<Q> conditioned on every object position; NaN where the slice is masked."""
    mask = joint.conditioning_mask()
    rows = joint.values
    weights = rows.sum(axis=1)
    first = rows @ joint.Q_grid.q
    means = np.full(weights.shape, np.nan)
    means[mask] = first[mask] / weights[mask]
    return means, mask


def conditional_pointer_mean(joint: JointDistribution, q: float) -> float:
    """<Q> conditioned on object position ``q``."""
    k = joint.q_grid.index_of(q)
    means, mask = conditional_pointer_means(joint)
    if not mask[k]:
        raise MaskedPoint(f"object density at q={q} is below the conditioning floor")
    return float(means[k])


def conditional_means_frame(joint: JointDistribution) -> pd.DataFrame:
    """Columns ``q, mean_Q, valid`` for every object position."""
    means, mask = conditional_pointer_means(joint)
    return pd.DataFrame(
        {"q": joint.q_grid.q, "mean_Q": means, "valid": mask.astype(np.int64)}
    )
