"""Closed forms, conditional moments and negativity of quasiprobability fields."""

import numpy as np

from weakval.core.errors import ComplexField, MaskedPoint
from weakval.quasiprob.field import QuasiprobField
from weakval.weak.profile import DENSITY_FLOOR


def vacuum_standard_closed_form(q: float | np.ndarray, p: float | np.ndarray) -> complex | np.ndarray:
    """S_0(q, p) = exp(-(q^2 + p^2)/2 + iqp) / (sqrt(2) pi)."""
    q = np.asarray(q, dtype=np.float64)
    p = np.asarray(p, dtype=np.float64)
    result = np.exp(-0.5 * (q**2 + p**2) + 1j * q * p) / (np.sqrt(2.0) * np.pi)
    return complex(result) if np.ndim(result) == 0 else result


def _require_real(field: QuasiprobField) -> None:
    if not field.kind.is_real:
        raise ComplexField(f"{field.kind.value} fields are complex; a real field is required")


def conditional_moments(field: QuasiprobField, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Conditional n-th p-moment for every q, with the validity mask.

    Returns ``(moments, valid)``; moments are NaN where the q-marginal is below the floor.
    """
    _require_real(field)
    marginal = field.q_marginal()
    valid = marginal >= DENSITY_FLOOR * float(marginal.max())
    weighted = (field.values * field.p[np.newaxis, :] ** n).sum(axis=1) * field.q_grid.dp
    moments = np.full(marginal.shape, np.nan)
    moments[valid] = weighted[valid] / marginal[valid]
    return moments, valid


def conditional_moment(field: QuasiprobField, n: int, q: float) -> float:
    """integral dp p^n M(q, p) / <q|rho|q>; for n = 2 this is Re[(p^2)_w](q)."""
    if int(n) != n or n < 0:
        raise ValueError(f"moment order must be a nonnegative integer, got {n}")
    moments, valid = conditional_moments(field, int(n))
    k = field.q_grid.index_of(q)
    if not valid[k]:
        raise MaskedPoint(f"postselection density at q={q} is below the floor")
    return float(moments[k])


def negativity_volume(field: QuasiprobField) -> float:
    """Integral of the negative part of a real field."""
    _require_real(field)
    return float(np.maximum(0.0, -field.values).sum() * field.cell_area)
