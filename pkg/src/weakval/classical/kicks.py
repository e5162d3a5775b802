"""Impulsive classical couplings H = eps delta(t) c(q, p) P.

Over the impulse P is conserved, Q advances by eps*c(q, p), and (q, p) follow the flow
generated by lambda*c(q, p) for unit time with lambda = eps*P. Because c is itself
conserved by that flow, the pointer shift uses the pre-kick value of c.
"""

import logging
from abc import ABC, abstractmethod
from collections.abc import Callable

import numpy as np

from weakval.classical.ensemble import ClassicalEnsemble
from weakval.core import ObservableKind, ObservableSpec
from weakval.core.errors import (
    ConservationViolation,
    DerivativeUnavailable,
    InvalidRange,
    UnsupportedObservable,
)

logger = logging.getLogger(__name__)

Function1D = Callable[[np.ndarray], np.ndarray]
Function2D = Callable[[np.ndarray, np.ndarray], np.ndarray]

CONSERVATION_TOLERANCE = 1e-8
DIFFERENCE_STEP = 1e-6


def _central_difference(f: Function1D, x: np.ndarray) -> np.ndarray:
    h = DIFFERENCE_STEP * np.maximum(1.0, np.abs(x))
    return (f(x + h) - f(x - h)) / (2.0 * h)


def _finite(values: np.ndarray, what: str) -> np.ndarray:
    values = np.asarray(values, dtype=np.float64)
    if not np.all(np.isfinite(values)):
        raise DerivativeUnavailable(f"{what} is not finite on the ensemble")
    return values


class Kick(ABC):
    """Abstract base class for impulse maps of a classical variable c(q, p)."""

    label: str = "c"

    @abstractmethod
    def value(self, q: np.ndarray, p: np.ndarray) -> np.ndarray:
        """Evaluate c(q, p)."""
        pass

    @abstractmethod
    def flow(
        self, q: np.ndarray, p: np.ndarray, strength: np.ndarray
    ) -> tuple[np.ndarray, np.ndarray]:
        """Time-1 flow of the Hamiltonian strength*c(q, p), one strength per particle."""
        pass

    def apply(self, ensemble: ClassicalEnsemble, epsilon: float) -> ClassicalEnsemble:
        """Apply the impulse of coupling strength ``epsilon`` to every particle."""
        if not np.isfinite(epsilon) or epsilon < 0.0:
            raise InvalidRange(f"epsilon must be nonnegative, got {epsilon}")
        q, p = ensemble.q, ensemble.p
        if epsilon == 0.0:
            return ensemble.with_coordinates(q, p, ensemble.Q, ensemble.P)
        shift = epsilon * self.value(q, p)
        q_new, p_new = self.flow(q, p, epsilon * ensemble.P)
        return ensemble.with_coordinates(q_new, p_new, ensemble.Q + shift, ensemble.P)


class MomentumKick(Kick):
    """c = g(p): p is conserved and q <- q + eps*P*g'(p)."""

    def __init__(self, g: Function1D, dg: Function1D | None = None, label: str = "g(p)"):
        self.g = g
        self.dg = dg
        self.label = label

    def value(self, q: np.ndarray, p: np.ndarray) -> np.ndarray:
        return np.asarray(self.g(p), dtype=np.float64) * np.ones_like(q)

    def flow(
        self, q: np.ndarray, p: np.ndarray, strength: np.ndarray
    ) -> tuple[np.ndarray, np.ndarray]:
        slope = self.dg(p) if self.dg is not None else _central_difference(self.g, p)
        return q + strength * _finite(slope, "dc/dp"), p.copy()


class PositionKick(Kick):
    """c = f(q): q is conserved and p <- p - eps*P*f'(q)."""

    def __init__(self, f: Function1D, df: Function1D | None = None, label: str = "f(q)"):
        self.f = f
        self.df = df
        self.label = label

    def value(self, q: np.ndarray, p: np.ndarray) -> np.ndarray:
        return np.asarray(self.f(q), dtype=np.float64) * np.ones_like(p)

    def flow(
        self, q: np.ndarray, p: np.ndarray, strength: np.ndarray
    ) -> tuple[np.ndarray, np.ndarray]:
        slope = self.df(q) if self.df is not None else _central_difference(self.f, q)
        return q.copy(), p - strength * _finite(slope, "dc/dq")


class OscillatorEnergyKick(Kick):
    """c = (q^2 + p^2)/2: a phase-space rotation by angle eps*P."""

    label = "E"

    def value(self, q: np.ndarray, p: np.ndarray) -> np.ndarray:
        return 0.5 * (q**2 + p**2)

    def flow(
        self, q: np.ndarray, p: np.ndarray, strength: np.ndarray
    ) -> tuple[np.ndarray, np.ndarray]:
        cos, sin = np.cos(strength), np.sin(strength)
        return q * cos + p * sin, p * cos - q * sin


class NumericalKick(Kick):
    """General c(q, p) integrated with the implicit midpoint rule.

    Missing partial derivatives are taken by central differences. The rule is
    symplectic; drift of c along the flow is checked against ``CONSERVATION_TOLERANCE``.
    """

    def __init__(
        self,
        c: Function2D,
        dc_dq: Function2D | None = None,
        dc_dp: Function2D | None = None,
        steps: int = 64,
        label: str = "c(q,p)",
        max_iterations: int = 100,
    ):
        if steps < 1:
            raise InvalidRange("the impulse needs at least one sub-step")
        self.c = c
        self.dc_dq = dc_dq
        self.dc_dp = dc_dp
        self.steps = steps
        self.label = label
        self.max_iterations = max_iterations

    def value(self, q: np.ndarray, p: np.ndarray) -> np.ndarray:
        return np.asarray(self.c(q, p), dtype=np.float64)

    def _gradient(self, q: np.ndarray, p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        if self.dc_dq is not None:
            gq = self.dc_dq(q, p)
        else:
            h = DIFFERENCE_STEP * np.maximum(1.0, np.abs(q))
            gq = (self.c(q + h, p) - self.c(q - h, p)) / (2.0 * h)
        if self.dc_dp is not None:
            gp = self.dc_dp(q, p)
        else:
            h = DIFFERENCE_STEP * np.maximum(1.0, np.abs(p))
            gp = (self.c(q, p + h) - self.c(q, p - h)) / (2.0 * h)
        return _finite(gq, "dc/dq"), _finite(gp, "dc/dp")

    def flow(
        self, q: np.ndarray, p: np.ndarray, strength: np.ndarray
    ) -> tuple[np.ndarray, np.ndarray]:
        dt = 1.0 / self.steps
        start = self.value(q, p)
        q, p = q.copy(), p.copy()
        for _ in range(self.steps):
            q_next, p_next = q.copy(), p.copy()
            for _ in range(self.max_iterations):
                gq, gp = self._gradient(0.5 * (q + q_next), 0.5 * (p + p_next))
                q_new = q + dt * strength * gp
                p_new = p - dt * strength * gq
                change = max(np.abs(q_new - q_next).max(), np.abs(p_new - p_next).max())
                q_next, p_next = q_new, p_new
                if change < 1e-14:
                    break
            q, p = q_next, p_next
        drift = float(np.abs(self.value(q, p) - start).max())
        logger.debug(f"numerical kick {self.label!r}: max drift of c = {drift:.3e}")
        if drift > CONSERVATION_TOLERANCE:
            raise ConservationViolation(
                f"c drifted by {drift:.3e} along the kick; increase the number of sub-steps"
            )
        return q, p


def classical_symbol(obs: ObservableSpec) -> Function2D:
    """The classical variable c(q, p) corresponding to an observable spec."""
    if obs.kind is ObservableKind.DIAGONAL_IN_Q or obs.kind is ObservableKind.Q_SQUARED:
        return lambda q, p: obs.symbol(q) * np.ones_like(p)
    if obs.kind is ObservableKind.DIAGONAL_IN_P or obs.kind is ObservableKind.P_SQUARED:
        return lambda q, p: obs.symbol(p) * np.ones_like(q)
    if obs.terms:
        parts = [(a, classical_symbol(term)) for a, term in obs.terms]
        return lambda q, p: sum(a * part(q, p) for a, part in parts)
    raise UnsupportedObservable(f"observable {obs.label!r} has no classical counterpart")


def kick_for(obs: ObservableSpec) -> Kick:
    """Exact impulse map where one exists, otherwise the implicit midpoint integrator."""
    match obs.kind:
        case ObservableKind.P_SQUARED:
            return MomentumKick(np.square, lambda p: 2.0 * p, label=obs.label)
        case ObservableKind.Q_SQUARED:
            return PositionKick(np.square, lambda q: 2.0 * q, label=obs.label)
        case ObservableKind.ENERGY:
            return OscillatorEnergyKick()
        case ObservableKind.DIAGONAL_IN_P:
            return MomentumKick(obs.symbol, label=obs.label)
        case ObservableKind.DIAGONAL_IN_Q:
            return PositionKick(obs.symbol, label=obs.label)
    if obs.is_diagonal_in_p:
        return MomentumKick(obs.symbol, label=obs.label)
    if obs.is_diagonal_in_q:
        return PositionKick(obs.symbol, label=obs.label)
    return NumericalKick(classical_symbol(obs), label=obs.label)


def apply_kick(
    ensemble: ClassicalEnsemble, c: Kick | ObservableSpec | Function2D, epsilon: float
) -> ClassicalEnsemble:
    """Apply the impulse for ``c``: a ready kick, an observable, or a plain c(q, p)."""
    if isinstance(c, Kick):
        kick = c
    elif isinstance(c, ObservableSpec):
        kick = kick_for(c)
    else:
        kick = NumericalKick(c)
    return kick.apply(ensemble, epsilon)
