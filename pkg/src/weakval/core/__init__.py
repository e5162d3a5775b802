"""Core domain types and models."""

from weakval.core.models import MixedState, ObservableSpec, QuadratureGrid, WaveFunction
from weakval.core.types import Basis, ObservableKind, QuasiprobKind

__all__ = [
    "Basis",
    "MixedState",
    "ObservableKind",
    "ObservableSpec",
    "QuadratureGrid",
    "QuasiprobKind",
    "WaveFunction",
]
