"""Classical weak values as conditional expectations, and binned pointer readout."""

import logging
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy.integrate import trapezoid

from weakval.classical.density import PhaseSpaceDensity
from weakval.classical.ensemble import ClassicalEnsemble
from weakval.core.errors import InvalidRange, MaskedPoint, NotNonnegative, PositivityViolation

logger = logging.getLogger(__name__)

Function2D = Callable[[np.ndarray, np.ndarray], np.ndarray]

QUADRATURE_POINTS = 2001
CONDITIONING_FLOOR = 1e-10
POSITIVITY_TOLERANCE = 1e-12
DEFAULT_BINS = 64
BIN_SPAN = 4.0
MIN_EFFECTIVE_SAMPLES = 100


def classical_weak_values(
    c: Function2D, density: PhaseSpaceDensity, qs: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """c_w(q) = int dp c(q, p) F(q, p) / int dp F(q, p) for every q in ``qs``.

    Returns ``(values, valid)``; values are NaN where the conditional mass is below the
    floor relative to the density's peak.
    """
    qs = np.atleast_1d(np.asarray(qs, dtype=np.float64))
    _, _, p_min, p_max = density.bounds
    p = np.linspace(p_min, p_max, QUADRATURE_POINTS)
    Q, P = np.meshgrid(qs, p, indexing="ij")
    weights = density(Q, P)
    mass = trapezoid(weights, p, axis=1)
    first = trapezoid(np.asarray(c(Q, P), dtype=np.float64) * weights, p, axis=1)
    valid = mass > CONDITIONING_FLOOR * density.peak * (p_max - p_min)
    values = np.full(qs.shape, np.nan)
    values[valid] = first[valid] / mass[valid]
    return values, valid


def classical_weak_value(c: Function2D, density: PhaseSpaceDensity, q: float) -> float:
    """Conditional expectation of c(q, p) at fixed q."""
    values, valid = classical_weak_values(c, density, np.array([q]))
    if not valid[0]:
        raise MaskedPoint(f"conditional density at q={q} is below the floor")
    return float(values[0])


@dataclass(frozen=True, slots=True, eq=False)
class PositivityReport:
    """Classical weak values of a nonnegative variable at sampled positions."""

    q: np.ndarray
    values: np.ndarray
    minimum: float
    certified: bool

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"q": self.q, "c_w": self.values})


def positivity_certificate(
    c: Function2D, density: PhaseSpaceDensity, q_samples: np.ndarray
) -> PositivityReport:
    """Certify c_w(q) >= 0 for a nonnegative c, as any nonnegative density guarantees.

    ``c`` is checked for nonnegativity on the density's support first. A negative
    classical weak value raises :class:`PositivityViolation`.
    """
    x, y = density.axes()
    X, Y = np.meshgrid(x, y, indexing="ij")
    if float(np.min(c(X, Y))) < 0.0:
        raise NotNonnegative("positivity can only be certified for a nonnegative variable")
    values, valid = classical_weak_values(c, density, q_samples)
    if not valid.any():
        raise MaskedPoint("no sampled position carries conditional mass above the floor")
    minimum = float(np.nanmin(values))
    if minimum < -POSITIVITY_TOLERANCE:
        raise PositivityViolation(f"classical weak value {minimum:.3e} is negative")
    return PositivityReport(np.atleast_1d(q_samples), values, minimum, True)


def default_bins(density: PhaseSpaceDensity, count: int = DEFAULT_BINS) -> np.ndarray:
    """Bin edges: ``count`` uniform bins over the mean +/- 4 sigma of q."""
    if count < 1:
        raise InvalidRange(f"bin count must be positive, got {count}")
    mean, sigma = density.x_mean(), density.x_std()
    return np.linspace(mean - BIN_SPAN * sigma, mean + BIN_SPAN * sigma, count + 1)


@dataclass(frozen=True, slots=True, eq=False)
class BinReport:
    """Pointer position conditioned on binned object position.

    Attributes:
        edges: Bin edges in q.
        mean_Q: Weighted mean of Q per bin (NaN for empty bins).
        stderr: Standard error of the mean, sqrt(var / n_eff).
        count: Raw particle count per bin.
        effective_count: Kish effective sample size per bin.
        eps_times_cw: Predicted shift eps*c_w at bin centres, if supplied.
        pointer_sigma: Pre-kick pointer width, if supplied.
    """

    edges: np.ndarray
    mean_Q: np.ndarray
    stderr: np.ndarray
    count: np.ndarray
    effective_count: np.ndarray
    eps_times_cw: np.ndarray | None = None
    pointer_sigma: float | None = None

    @property
    def centers(self) -> np.ndarray:
        return 0.5 * (self.edges[1:] + self.edges[:-1])

    @property
    def flagged(self) -> np.ndarray:
        """Bins with too few effective samples to be trusted."""
        return self.effective_count < MIN_EFFECTIVE_SAMPLES

    @property
    def weakness_ratio(self) -> np.ndarray | None:
        if self.eps_times_cw is None or self.pointer_sigma is None:
            return None
        return np.abs(self.eps_times_cw) / self.pointer_sigma

    def deviations(self) -> np.ndarray:
        """(mean_Q - eps*c_w) / stderr per bin."""
        if self.eps_times_cw is None:
            raise InvalidRange("no predicted shift attached to this report")
        return (self.mean_Q - self.eps_times_cw) / self.stderr

    def to_frame(self) -> pd.DataFrame:
        """Columns ``q_center, mean_Q, stderr, count, eps_times_cw`` plus diagnostics."""
        nan = np.full(self.centers.shape, np.nan)
        ratio = self.weakness_ratio
        return pd.DataFrame(
            {
                "q_center": self.centers,
                "mean_Q": self.mean_Q,
                "stderr": self.stderr,
                "count": self.count,
                "eps_times_cw": self.eps_times_cw if self.eps_times_cw is not None else nan,
                "weakness_ratio": ratio if ratio is not None else nan,
                "flagged": self.flagged.astype(np.int64),
            }
        )


def conditional_mean_Q(
    ensemble: ClassicalEnsemble,
    q_bins: np.ndarray,
    eps_times_cw: np.ndarray | None = None,
    pointer_sigma: float | None = None,
) -> BinReport:
    """Weighted mean of Q in each bin of the (post-kick) object position q.

    Bins with fewer than ``MIN_EFFECTIVE_SAMPLES`` effective samples are flagged and
    logged, not rejected.
    """
    edges = np.asarray(q_bins, dtype=np.float64)
    if edges.ndim != 1 or edges.size < 2 or np.any(np.diff(edges) <= 0.0):
        raise InvalidRange("bin edges must be a strictly increasing sequence of length >= 2")
    n_bins = edges.size - 1
    if eps_times_cw is not None and np.shape(eps_times_cw) != (n_bins,):
        raise InvalidRange("one predicted shift is needed per bin")

    index = np.searchsorted(edges, ensemble.q, side="right") - 1
    inside = (index >= 0) & (index < n_bins)
    index, w = index[inside], ensemble.weights[inside]
    Q = ensemble.Q[inside]

    count = np.bincount(index, minlength=n_bins)
    mass = np.bincount(index, weights=w, minlength=n_bins)
    mass_sq = np.bincount(index, weights=w**2, minlength=n_bins)
    first = np.bincount(index, weights=w * Q, minlength=n_bins)
    occupied = mass > 0.0
    mean = np.full(n_bins, np.nan)
    mean[occupied] = first[occupied] / mass[occupied]
    centred = np.bincount(
        index, weights=w * (Q - np.nan_to_num(mean)[index]) ** 2, minlength=n_bins
    )
    effective = np.zeros(n_bins)
    effective[occupied] = mass[occupied] ** 2 / mass_sq[occupied]
    stderr = np.full(n_bins, np.nan)
    stderr[occupied] = np.sqrt(centred[occupied] / mass[occupied] / effective[occupied])

    report = BinReport(
        edges=edges,
        mean_Q=mean,
        stderr=stderr,
        count=count,
        effective_count=effective,
        eps_times_cw=None if eps_times_cw is None else np.asarray(eps_times_cw, dtype=np.float64),
        pointer_sigma=pointer_sigma,
    )
    flagged = int(report.flagged.sum())
    if flagged:
        logger.warning(
            f"{flagged} of {n_bins} bins hold fewer than {MIN_EFFECTIVE_SAMPLES} effective samples"
        )
    return report
