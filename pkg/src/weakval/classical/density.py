"""Nonnegative phase-space densities used as classical object and pointer states."""

import logging
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import trapezoid

from weakval.core.errors import InvalidRange, NotNonnegative

logger = logging.getLogger(__name__)

Evaluator = Callable[[np.ndarray, np.ndarray], np.ndarray]
Sampler = Callable[[np.random.Generator, int], tuple[np.ndarray, np.ndarray]]

NORMALIZATION_TOLERANCE = 1e-8
CHECK_POINTS = 401
GAUSSIAN_SPAN = 8.0
REJECTION_BATCH = 65536


@dataclass(frozen=True, slots=True, eq=False)
class PhaseSpaceDensity:
    """A normalized nonnegative density F(x, y) over a rectangular support.

    ``x`` is the position-like and ``y`` the momentum-like coordinate, (q, p) for the
    object and (Q, P) for the pointer. Normalization and sign are checked by trapezoid
    quadrature on a ``CHECK_POINTS`` square grid over the support.

    Attributes:
        evaluator: Vectorized F(x, y).
        bounds: Support box ``(x_min, x_max, y_min, y_max)``.
        sampler: Optional exact sampler; rejection sampling is used otherwise.
        label: Short description used in file headers.
        normalization: Integral over the support (computed).
    """

    evaluator: Evaluator
    bounds: tuple[float, float, float, float]
    sampler: Sampler | None = None
    label: str = "density"
    normalization: float = field(init=False, default=0.0)
    peak: float = field(init=False, default=0.0)

    def __post_init__(self) -> None:
        """Check sign and normalization on the support."""
        x_min, x_max, y_min, y_max = self.bounds
        if not (x_max > x_min and y_max > y_min):
            raise InvalidRange(f"invalid support bounds {self.bounds}")
        x, y, values = self.tabulate()
        if values.min() < 0.0:
            raise NotNonnegative(f"density {self.label!r} takes negative values")
        total = float(trapezoid(trapezoid(values, y, axis=1), x))
        if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
            raise InvalidRange(f"density {self.label!r} integrates to {total:.12g}, not 1")
        object.__setattr__(self, "normalization", total)
        object.__setattr__(self, "peak", float(values.max()))

    def __call__(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.asarray(self.evaluator(x, y), dtype=np.float64)

    def axes(self, n_points: int = CHECK_POINTS) -> tuple[np.ndarray, np.ndarray]:
        x_min, x_max, y_min, y_max = self.bounds
        return np.linspace(x_min, x_max, n_points), np.linspace(y_min, y_max, n_points)

    def tabulate(self, n_points: int = CHECK_POINTS) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Values on a square grid over the support, indexed ``[x, y]``."""
        x, y = self.axes(n_points)
        X, Y = np.meshgrid(x, y, indexing="ij")
        return x, y, self(X, Y)

    def x_marginal(self, n_points: int = CHECK_POINTS) -> tuple[np.ndarray, np.ndarray]:
        """Marginal density of the position-like coordinate."""
        x, y, values = self.tabulate(n_points)
        return x, trapezoid(values, y, axis=1)

    def x_std(self) -> float:
        """Standard deviation of the position-like coordinate."""
        x, marginal = self.x_marginal()
        mean = trapezoid(x * marginal, x)
        return float(np.sqrt(trapezoid((x - mean) ** 2 * marginal, x)))

    def x_mean(self) -> float:
        x, marginal = self.x_marginal()
        return float(trapezoid(x * marginal, x))

    def sample(self, rng: np.random.Generator, n: int) -> tuple[np.ndarray, np.ndarray]:
        """Draw ``n`` points, exactly if a sampler is attached, else by rejection."""
        if self.sampler is not None:
            return self.sampler(rng, n)
        return self._rejection_sample(rng, n)

    def _rejection_sample(self, rng: np.random.Generator, n: int) -> tuple[np.ndarray, np.ndarray]:
        x_min, x_max, y_min, y_max = self.bounds
        envelope = 1.1 * self.peak
        xs: list[np.ndarray] = []
        ys: list[np.ndarray] = []
        accepted = 0
        while accepted < n:
            x = rng.uniform(x_min, x_max, REJECTION_BATCH)
            y = rng.uniform(y_min, y_max, REJECTION_BATCH)
            keep = rng.uniform(0.0, envelope, REJECTION_BATCH) < self(x, y)
            xs.append(x[keep])
            ys.append(y[keep])
            accepted += int(keep.sum())
        logger.debug(f"rejection sampling {self.label!r}: {accepted} accepted for {n} requested")
        return np.concatenate(xs)[:n], np.concatenate(ys)[:n]


def gaussian_density(
    sigma_x: float,
    sigma_y: float,
    mean_x: float = 0.0,
    mean_y: float = 0.0,
    label: str = "gaussian",
) -> PhaseSpaceDensity:
    """Uncorrelated Gaussian with an exact sampler, supported on +/-8 sigma."""
    if sigma_x <= 0.0 or sigma_y <= 0.0:
        raise InvalidRange("Gaussian widths must be positive")

    def evaluate(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        zx = (x - mean_x) / sigma_x
        zy = (y - mean_y) / sigma_y
        return np.exp(-0.5 * (zx**2 + zy**2)) / (2.0 * np.pi * sigma_x * sigma_y)

    def draw(rng: np.random.Generator, n: int) -> tuple[np.ndarray, np.ndarray]:
        return rng.normal(mean_x, sigma_x, n), rng.normal(mean_y, sigma_y, n)

    bounds = (
        mean_x - GAUSSIAN_SPAN * sigma_x,
        mean_x + GAUSSIAN_SPAN * sigma_x,
        mean_y - GAUSSIAN_SPAN * sigma_y,
        mean_y + GAUSSIAN_SPAN * sigma_y,
    )
    return PhaseSpaceDensity(evaluate, bounds, draw, label)


def coherent_density(alpha_r: float = 0.0, alpha_i: float = 0.0) -> PhaseSpaceDensity:
    """(1/pi) exp(-((q - a_r)^2 + (p - a_i)^2)), the coherent-state Wigner function."""
    width = 1.0 / np.sqrt(2.0)
    label = "vacuum" if alpha_r == 0.0 and alpha_i == 0.0 else f"coherent({alpha_r:g},{alpha_i:g})"
    return gaussian_density(width, width, alpha_r, alpha_i, label)


def pointer_density(sigma: float = 1.0, drift: float = 0.0) -> PhaseSpaceDensity:
    """Minimum-uncertainty pointer: sigma_Q = sigma, sigma_P = 1/(2 sigma), mean P = drift."""
    label = "pointer" if drift == 0.0 else f"pointer-drift-{drift:g}"
    return gaussian_density(sigma, 0.5 / sigma, 0.0, drift, label)
