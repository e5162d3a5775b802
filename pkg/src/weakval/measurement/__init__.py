"""Exact von Neumann weak-measurement simulation."""

from weakval.measurement.joint import (
    JointDistribution,
    conditional_means_frame,
    conditional_pointer_mean,
    conditional_pointer_means,
    evolve_joint,
)
from weakval.measurement.pointer import (
    CurrentDensityReport,
    PointerState,
    current_density,
    current_density_report,
    gaussian_mixture_pointer,
    gaussian_pointer,
    pointer_grid,
    validate_pointer,
)
from weakval.measurement.study import (
    ConvergenceReport,
    ConvergenceRow,
    WeaknessReport,
    shift_convergence_study,
    weakness_ratio,
)

__all__ = [
    "ConvergenceReport",
    "ConvergenceRow",
    "CurrentDensityReport",
    "JointDistribution",
    "PointerState",
    "WeaknessReport",
    "conditional_means_frame",
    "conditional_pointer_mean",
    "conditional_pointer_means",
    "current_density",
    "current_density_report",
    "evolve_joint",
    "gaussian_mixture_pointer",
    "gaussian_pointer",
    "pointer_grid",
    "shift_convergence_study",
    "validate_pointer",
    "weakness_ratio",
]
