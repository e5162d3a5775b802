"""Classical Liouville counterpart of the weak measurement."""

from weakval.classical.density import (
    PhaseSpaceDensity,
    coherent_density,
    gaussian_density,
    pointer_density,
)
from weakval.classical.ensemble import ClassicalEnsemble, pointer_drift, sample_product_state
from weakval.classical.kicks import (
    Kick,
    MomentumKick,
    NumericalKick,
    OscillatorEnergyKick,
    PositionKick,
    apply_kick,
    classical_symbol,
    kick_for,
)
from weakval.classical.weak import (
    BinReport,
    PositivityReport,
    classical_weak_value,
    classical_weak_values,
    conditional_mean_Q,
    default_bins,
    positivity_certificate,
)

__all__ = [
    "BinReport",
    "ClassicalEnsemble",
    "Kick",
    "MomentumKick",
    "NumericalKick",
    "OscillatorEnergyKick",
    "PhaseSpaceDensity",
    "PositionKick",
    "PositivityReport",
    "apply_kick",
    "classical_symbol",
    "classical_weak_value",
    "classical_weak_values",
    "coherent_density",
    "conditional_mean_Q",
    "default_bins",
    "gaussian_density",
    "kick_for",
    "pointer_density",
    "pointer_drift",
    "positivity_certificate",
    "sample_product_state",
]
