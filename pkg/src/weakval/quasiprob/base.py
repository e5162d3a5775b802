"""Base class for phase-space distributions."""

from abc import ABC, abstractmethod

from weakval.core import MixedState, QuasiprobKind, WaveFunction
from weakval.quasiprob.field import QuasiprobField


class Distribution(ABC):
    """Abstract base class for quasiprobability distributions of a state."""

    kind: QuasiprobKind

    @abstractmethod
    def compute(self, state: WaveFunction | MixedState) -> QuasiprobField:
        """Compute the distribution of ``state`` on its (q, p) grid."""
        pass
