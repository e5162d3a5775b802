"""Weakness diagnostics and the epsilon-convergence study of the pointer-shift law."""

import logging
import time
from dataclasses import dataclass

import numpy as np
import pandas as pd

from weakval.core import MixedState, ObservableSpec, QuadratureGrid, WaveFunction
from weakval.core.errors import InvalidRange
from weakval.measurement.joint import conditional_pointer_means, evolve_joint
from weakval.measurement.pointer import PointerState
from weakval.weak import WeakValueProfile, weak_value

logger = logging.getLogger(__name__)

WEAKNESS_THRESHOLD = 0.1
MIN_EPSILON_RATIO = 2.0


@dataclass(frozen=True, slots=True, eq=False)
class WeaknessReport:
    """Per-q ratio |eps Re c_w| / sigma with a flag above the threshold.

    Masked positions carry NaN and are never flagged.
    """

    grid: QuadratureGrid
    ratio: np.ndarray
    valid_mask: np.ndarray
    threshold: float = WEAKNESS_THRESHOLD

    @property
    def flagged(self) -> np.ndarray:
        return self.valid_mask & (np.nan_to_num(self.ratio, nan=0.0) > self.threshold)

    @property
    def violations(self) -> int:
        return int(self.flagged.sum())

    @property
    def max_ratio(self) -> float:
        return float(np.nanmax(self.ratio))

    @property
    def all_weak(self) -> bool:
        return self.violations == 0

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {"q": self.grid.q, "ratio": self.ratio, "flagged": self.flagged.astype(np.int64)}
        )


def weakness_ratio(
    epsilon: float,
    profile: WeakValueProfile,
    pointer: PointerState,
    threshold: float = WEAKNESS_THRESHOLD,
) -> WeaknessReport:
    """Compare the first-order pointer shift with the pointer width at every q."""
    ratio = np.abs(epsilon * profile.real) / pointer.sigma
    return WeaknessReport(profile.grid, ratio, profile.valid_mask.copy(), threshold)


@dataclass(frozen=True, slots=True)
class ConvergenceRow:
    """One coupling strength of the convergence study.

    Attributes:
        epsilon: Coupling strength.
        max_error: max |<Q>_q / eps - Re c_w| (the shift residual when eps = 0).
        max_shift_error: max |<Q>_q - eps Re c_w|.
        ratio_to_prev: ``max_error`` over the previous row's, when defined.
        weakness_violations: Valid positions where |eps Re c_w| / sigma exceeds the threshold.
        max_weakness_ratio: Largest weakness ratio over valid positions.
        marginal_deviation: max |object marginal after coupling - before|.
    """

    epsilon: float
    max_error: float
    max_shift_error: float
    ratio_to_prev: float | None
    weakness_violations: int
    max_weakness_ratio: float
    marginal_deviation: float


@dataclass(frozen=True, slots=True, eq=False)
class ConvergenceReport:
    """Convergence of the conditional pointer mean to eps * Re c_w."""

    label: str
    rows: tuple[ConvergenceRow, ...]
    compared_points: int

    @property
    def ratios(self) -> list[float | None]:
        return [row.ratio_to_prev for row in self.rows]

    @property
    def flagged(self) -> bool:
        """Whether any row violates the weakness condition."""
        return any(row.weakness_violations > 0 for row in self.rows)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "epsilon": [r.epsilon for r in self.rows],
                "max_error": [r.max_error for r in self.rows],
                "ratio_to_prev": [r.ratio_to_prev for r in self.rows],
                "max_shift_error": [r.max_shift_error for r in self.rows],
                "weakness_violations": [r.weakness_violations for r in self.rows],
                "max_weakness_ratio": [r.max_weakness_ratio for r in self.rows],
                "marginal_deviation": [r.marginal_deviation for r in self.rows],
            }
        )


def _validate_epsilons(epsilons: list[float]) -> list[float]:
    values = sorted(float(e) for e in epsilons)
    if len(values) < 2:
        raise InvalidRange("the convergence study needs at least two epsilon values")
    if values[0] < 0.0:
        raise InvalidRange("epsilon values must be nonnegative")
    positive = [e for e in values if e > 0.0]
    for previous, current in zip(positive, positive[1:], strict=False):
        if current < MIN_EPSILON_RATIO * previous * (1.0 - 1e-9):
            raise InvalidRange(
                f"consecutive epsilon values must differ by a factor >= {MIN_EPSILON_RATIO:g}, "
                f"got {previous:g} and {current:g}"
            )
    return values


def shift_convergence_study(
    state: WaveFunction | MixedState,
    pointer: PointerState,
    obs: ObservableSpec,
    epsilons: list[float],
    threshold: float = WEAKNESS_THRESHOLD,
) -> ConvergenceReport:
    """Check that <Q>_q approaches eps * Re c_w(q) with a quadratic residual.

    Errors are taken over positions inside the weak-value mask where the weakness ratio
    at the largest epsilon stays under ``threshold``; if no position qualifies the whole
    mask is used. Rows are sorted by epsilon.
    """
    values = _validate_epsilons(epsilons)
    start = time.perf_counter()
    profile = weak_value(obs, state)
    reference = profile.real
    density = profile.postselection_density
    largest = weakness_ratio(values[-1], profile, pointer, threshold)
    region = profile.valid_mask & ~largest.flagged
    if not region.any():
        logger.warning(
            f"weakness condition fails everywhere at epsilon={values[-1]:g}; "
            f"comparing over the full mask"
        )
        region = profile.valid_mask.copy()

    rows: list[ConvergenceRow] = []
    for epsilon in values:
        joint = evolve_joint(state, pointer, obs, epsilon)
        means, mask = conditional_pointer_means(joint)
        compare = region & mask
        shift_error = np.abs(means[compare] - epsilon * reference[compare])
        max_shift_error = float(shift_error.max())
        if epsilon > 0.0:
            max_error = float(np.abs(means[compare] / epsilon - reference[compare]).max())
        else:
            max_error = max_shift_error
        previous = rows[-1] if rows else None
        ratio = None
        if previous is not None and previous.epsilon > 0.0 and previous.max_error > 0.0:
            ratio = max_error / previous.max_error
        weakness = weakness_ratio(epsilon, profile, pointer, threshold)
        if weakness.violations:
            logger.warning(
                f"epsilon={epsilon:g}: weakness condition violated at "
                f"{weakness.violations} positions (max ratio {weakness.max_ratio:.3g})"
            )
        rows.append(
            ConvergenceRow(
                epsilon=epsilon,
                max_error=max_error,
                max_shift_error=max_shift_error,
                ratio_to_prev=ratio,
                weakness_violations=weakness.violations,
                max_weakness_ratio=weakness.max_ratio,
                marginal_deviation=float(np.abs(joint.object_marginal() - density).max()),
            )
        )
        logger.debug(f"epsilon={epsilon:g}: max error {max_error:.3e}")

    elapsed = time.perf_counter() - start
    logger.info(f"convergence study over {len(values)} couplings took {elapsed:.2f}s")
    return ConvergenceReport(obs.label, tuple(rows), int(region.sum()))
