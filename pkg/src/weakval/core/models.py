"""Core value objects: grids, wavefunctions, mixtures and observables.

Units are dimensionless with hbar = 1 and oscillator frequency 1.
"""

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Self

import numpy as np

from weakval.core.errors import (
    EmptyMixture,
    GridMismatch,
    InvalidRange,
    NegativeWeight,
)
from weakval.core.types import Basis, ObservableKind

RealFunction = Callable[[np.ndarray], np.ndarray]

NORM_TOLERANCE = 1e-10
WEIGHT_TOLERANCE = 1e-12


def _frozen_array(values: np.ndarray) -> np.ndarray:
    values.flags.writeable = False
    return values


@dataclass(frozen=True, slots=True)
class QuadratureGrid:
    """Uniform periodic position grid and its Fourier-dual momentum grid.

    Position points are ``q_min + k*dq`` for ``k = 0..n-1`` (``q_max`` itself is the
    periodic image of ``q_min``). Momentum points are ``(j - n/2)*dp`` with
    ``dp = 2*pi/(n*dq)``.

    Attributes:
        q_min: Left edge of the position window.
        q_max: Right edge of the position window.
        n_points: Number of samples, a power of two no smaller than 8.
    """

    q_min: float
    q_max: float
    n_points: int

    def __post_init__(self) -> None:
        """Validate grid parameters."""
        if not (np.isfinite(self.q_min) and np.isfinite(self.q_max)):
            raise InvalidRange("grid edges must be finite")
        if self.q_max <= self.q_min:
            raise InvalidRange(f"q_max ({self.q_max}) must exceed q_min ({self.q_min})")
        n = self.n_points
        if int(n) != n or n < 8 or (int(n) & (int(n) - 1)) != 0:
            raise InvalidRange(f"n_points must be a power of two >= 8, got {n}")

    @property
    def dq(self) -> float:
        """Position spacing."""
        return (self.q_max - self.q_min) / self.n_points

    @property
    def dp(self) -> float:
        """Momentum spacing of the dual grid."""
        return 2.0 * np.pi / (self.n_points * self.dq)

    @property
    def length(self) -> float:
        """Period of the position window."""
        return self.q_max - self.q_min

    @property
    def q(self) -> np.ndarray:
        """Position sample points."""
        return self.q_min + self.dq * np.arange(self.n_points)

    @property
    def p(self) -> np.ndarray:
        """Momentum sample points, centered on zero."""
        return self.dp * (np.arange(self.n_points) - self.n_points // 2)

    def measure(self, basis: Basis) -> float:
        """Quadrature weight of one sample in the given basis."""
        return self.dq if basis is Basis.POSITION else self.dp

    def index_of(self, q: float) -> int:
        """Index of the position sample nearest to ``q`` on the periodic window.

        Points within half a step of ``q_max`` wrap to index 0, the image of ``q_max``.
        """
        if not self.q_min <= q <= self.q_max:
            raise InvalidRange(f"q = {q} lies outside the grid [{self.q_min}, {self.q_max}]")
        return int(round((q - self.q_min) / self.dq)) % self.n_points

    def momentum_index_of(self, p: float) -> int:
        """Index of the momentum sample nearest to ``p``."""
        j = int(round(p / self.dp)) + self.n_points // 2
        if not 0 <= j < self.n_points:
            raise InvalidRange(f"p = {p} lies outside the momentum grid")
        return j


@dataclass(frozen=True, slots=True, eq=False)
class WaveFunction:
    """Complex amplitudes of a pure state sampled on a grid.

    Constructors normalize; operator application returns unnormalized functions, so
    the norm is not enforced here.

    Attributes:
        grid: Grid the amplitudes live on.
        amplitudes: One complex amplitude per grid point (read-only).
        basis: Whether amplitudes are position or momentum samples.
    """

    grid: QuadratureGrid
    amplitudes: np.ndarray
    basis: Basis = Basis.POSITION

    def __post_init__(self) -> None:
        """Validate shape and freeze the amplitude array."""
        values = np.array(self.amplitudes, dtype=np.complex128)
        if values.shape != (self.grid.n_points,):
            raise GridMismatch(
                f"expected {self.grid.n_points} amplitudes, got shape {values.shape}"
            )
        object.__setattr__(self, "amplitudes", _frozen_array(values))

    @property
    def norm_squared(self) -> float:
        """Squared norm with the basis-appropriate quadrature weight."""
        weight = self.grid.measure(self.basis)
        return float(np.sum(np.abs(self.amplitudes) ** 2) * weight)

    @property
    def density(self) -> np.ndarray:
        """Probability density |psi|^2 in the stored basis."""
        return np.abs(self.amplitudes) ** 2

    def normalized(self) -> Self:
        """Return a copy scaled to unit norm."""
        norm = np.sqrt(self.norm_squared)
        if norm == 0.0:
            raise InvalidRange("cannot normalize the zero function")
        return type(self)(self.grid, self.amplitudes / norm, self.basis)

    def is_normalized(self, tolerance: float = NORM_TOLERANCE) -> bool:
        """Check the unit-norm invariant."""
        return abs(self.norm_squared - 1.0) <= tolerance


@dataclass(frozen=True, slots=True, eq=False)
class MixedState:
    """Convex mixture of pure states on a common grid.

    Attributes:
        components: Pairs of (weight, state); weights sum to one.
    """

    components: tuple[tuple[float, WaveFunction], ...]

    def __post_init__(self) -> None:
        """Validate weights and grids."""
        components = tuple((float(w), wf) for w, wf in self.components)
        if not components:
            raise EmptyMixture("a mixture needs at least one component")
        for weight, _ in components:
            if weight < 0.0:
                raise NegativeWeight(f"mixture weight {weight} is negative")
        total = sum(w for w, _ in components)
        if abs(total - 1.0) > WEIGHT_TOLERANCE:
            raise InvalidRange(f"mixture weights sum to {total}, not 1")
        grid = components[0][1].grid
        if any(wf.grid != grid for _, wf in components):
            raise GridMismatch("all mixture components must share one grid")
        object.__setattr__(self, "components", components)

    @classmethod
    def pure(cls, state: WaveFunction) -> Self:
        """Wrap a pure state as a trivial mixture."""
        return cls(((1.0, state),))

    @property
    def grid(self) -> QuadratureGrid:
        """Grid shared by all components."""
        return self.components[0][1].grid

    @property
    def weights(self) -> np.ndarray:
        """Mixture weights."""
        return np.array([w for w, _ in self.components])

    @property
    def states(self) -> list[WaveFunction]:
        """Component states."""
        return [wf for _, wf in self.components]

    @property
    def is_pure(self) -> bool:
        """Whether the mixture has a single component."""
        return len(self.components) == 1


@dataclass(frozen=True, slots=True, eq=False)
class ObservableSpec:
    """An object observable: diagonal in q or p, or a real linear combination.

    Use the classmethod constructors rather than building instances directly.

    Attributes:
        kind: Which family the observable belongs to.
        function: Real symbol f(q) or g(p) for the diagonal kinds.
        terms: (coefficient, observable) pairs for combinations and energy.
        label: Short name used in logs and file headers.
    """

    kind: ObservableKind
    function: RealFunction | None = None
    terms: tuple[tuple[float, "ObservableSpec"], ...] = field(default=())
    label: str = ""

    @classmethod
    def diagonal_in_q(cls, f: RealFunction, label: str = "f(q)") -> Self:
        return cls(ObservableKind.DIAGONAL_IN_Q, function=f, label=label)

    @classmethod
    def diagonal_in_p(cls, g: RealFunction, label: str = "g(p)") -> Self:
        return cls(ObservableKind.DIAGONAL_IN_P, function=g, label=label)

    @classmethod
    def p_squared(cls) -> Self:
        return cls(ObservableKind.P_SQUARED, function=np.square, label="p^2")

    @classmethod
    def q_squared(cls) -> Self:
        return cls(ObservableKind.Q_SQUARED, function=np.square, label="q^2")

    @classmethod
    def energy(cls) -> Self:
        """Oscillator energy, exactly (p^2 + q^2)/2."""
        return cls(
            ObservableKind.ENERGY,
            terms=((0.5, cls.p_squared()), (0.5, cls.q_squared())),
            label="E",
        )

    @classmethod
    def linear_combination(cls, terms: list[tuple[float, "ObservableSpec"]]) -> Self:
        """Real linear combination of observables."""
        if not terms:
            raise InvalidRange("a combination needs at least one term")
        label = " + ".join(f"{a:g}*{obs.label}" for a, obs in terms)
        return cls(
            ObservableKind.COMBINATION,
            terms=tuple((float(a), obs) for a, obs in terms),
            label=label,
        )

    @property
    def is_diagonal_in_q(self) -> bool:
        if self.kind in (ObservableKind.DIAGONAL_IN_Q, ObservableKind.Q_SQUARED):
            return True
        if self.kind is ObservableKind.COMBINATION:
            return all(obs.is_diagonal_in_q for _, obs in self.terms)
        return False

    @property
    def is_diagonal_in_p(self) -> bool:
        if self.kind in (ObservableKind.DIAGONAL_IN_P, ObservableKind.P_SQUARED):
            return True
        if self.kind is ObservableKind.COMBINATION:
            return all(obs.is_diagonal_in_p for _, obs in self.terms)
        return False

    def symbol(self, x: np.ndarray) -> np.ndarray:
        """Evaluate the diagonal symbol c(q) or c(p) of a diagonal observable."""
        if self.function is not None:
            return np.asarray(self.function(x), dtype=np.float64) * np.ones_like(x)
        if self.kind is ObservableKind.COMBINATION and (
            self.is_diagonal_in_p or self.is_diagonal_in_q
        ):
            return sum(a * obs.symbol(x) for a, obs in self.terms)
        raise InvalidRange(f"observable {self.label!r} has no diagonal symbol")
