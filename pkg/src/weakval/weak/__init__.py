"""Weak values postselected on position."""

from weakval.weak.closed_form import (
    coherent_p2_closed_form,
    negativity_probability,
    negativity_region,
)
from weakval.weak.profile import DENSITY_FLOOR, WeakValueProfile
from weakval.weak.values import (
    negativity_probability_numeric,
    observed_negativity_probability,
    weak_energy_relation,
    weak_value,
)

__all__ = [
    "DENSITY_FLOOR",
    "WeakValueProfile",
    "coherent_p2_closed_form",
    "negativity_probability",
    "negativity_probability_numeric",
    "negativity_region",
    "observed_negativity_probability",
    "weak_energy_relation",
    "weak_value",
]
