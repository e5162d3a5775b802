"""Weighted Monte-Carlo ensembles of (q, p, Q, P) points."""

import logging
from dataclasses import dataclass
from typing import Self

import numpy as np
import pandas as pd
from scipy.integrate import trapezoid

from weakval.classical.density import PhaseSpaceDensity
from weakval.core.errors import CurrentDensityViolation, GridMismatch, InvalidRange, NegativeWeight

logger = logging.getLogger(__name__)

WEIGHT_TOLERANCE = 1e-12
DRIFT_TOLERANCE = 1e-8


@dataclass(frozen=True, slots=True, eq=False)
class ClassicalEnsemble:
    """Particles of the object (q, p) and pointer (Q, P) with normalized weights.

    Attributes:
        q, p: Object coordinates.
        Q, P: Pointer coordinates.
        weights: Nonnegative weights summing to one.
        rng_seed: Seed the ensemble was drawn with.
    """

    q: np.ndarray
    p: np.ndarray
    Q: np.ndarray
    P: np.ndarray
    weights: np.ndarray
    rng_seed: int

    def __post_init__(self) -> None:
        """Validate lengths and weights, then freeze the arrays."""
        arrays = {}
        for name in ("q", "p", "Q", "P", "weights"):
            values = np.array(getattr(self, name), dtype=np.float64)
            values.flags.writeable = False
            arrays[name] = values
        sizes = {values.shape for values in arrays.values()}
        if len(sizes) != 1 or arrays["q"].ndim != 1:
            raise GridMismatch("ensemble coordinate arrays must be 1-D and of equal length")
        if arrays["weights"].min() < 0.0:
            raise NegativeWeight("ensemble weights must be nonnegative")
        total = float(arrays["weights"].sum())
        if abs(total - 1.0) > WEIGHT_TOLERANCE:
            raise InvalidRange(f"ensemble weights sum to {total!r}, not 1")
        for name, values in arrays.items():
            object.__setattr__(self, name, values)

    @property
    def size(self) -> int:
        return int(self.q.shape[0])

    @property
    def effective_size(self) -> float:
        """Kish effective sample size."""
        return float(1.0 / np.sum(self.weights**2))

    def with_coordinates(
        self, q: np.ndarray, p: np.ndarray, Q: np.ndarray, P: np.ndarray
    ) -> Self:
        """Copy with new coordinates, keeping weights and seed."""
        return type(self)(q, p, Q, P, self.weights, self.rng_seed)

    def to_frame(self) -> pd.DataFrame:
        """Columns ``q, p, Q, P, weight``."""
        return pd.DataFrame(
            {"q": self.q, "p": self.p, "Q": self.Q, "P": self.P, "weight": self.weights}
        )


def pointer_drift(pointer: PhaseSpaceDensity) -> tuple[float, float]:
    """Largest |integral dP P F_a(Q, P)| over Q, with the peak Q-marginal for scale."""
    Q, P, values = pointer.tabulate()
    drift = trapezoid(values * P[np.newaxis, :], P, axis=1)
    marginal = trapezoid(values, P, axis=1)
    return float(np.abs(drift).max()), float(marginal.max())


def sample_product_state(
    system: PhaseSpaceDensity, pointer: PhaseSpaceDensity, n: int, seed: int
) -> ClassicalEnsemble:
    """Draw ``n`` equally weighted particles from F_s(q, p) F_a(Q, P).

    The pointer must carry no mean momentum at any Q; otherwise the pointer translates
    on its own and :class:`CurrentDensityViolation` is raised.
    """
    if int(n) != n or n < 1:
        raise InvalidRange(f"sample count must be a positive integer, got {n}")
    if seed < 0:
        raise InvalidRange(f"seed must be nonnegative, got {seed}")
    drift, scale = pointer_drift(pointer)
    if drift > DRIFT_TOLERANCE * scale:
        raise CurrentDensityViolation(
            f"pointer {pointer.label!r} has nonzero mean momentum: "
            f"max |int P F_a dP| = {drift:.3e}",
            drift,
        )
    rng = np.random.default_rng(seed)
    q, p = system.sample(rng, int(n))
    Q, P = pointer.sample(rng, int(n))
    weights = np.full(int(n), 1.0 / n)
    logger.debug(f"sampled {n} particles from {system.label!r} x {pointer.label!r}, seed={seed}")
    return ClassicalEnsemble(q, p, Q, P, weights, int(seed))
