"""Closed-form coherent-state results for the weak value of p^2."""

import numpy as np
from scipy.special import erfc

from weakval.states.constructors import quadratures_of


def coherent_p2_closed_form(alpha: complex, q: float | np.ndarray) -> complex | np.ndarray:
    """(p^2)_w(q) = 1 - (q - sqrt(2) alpha)^2 for a coherent state postselected on q.

    The real part is 1 + alpha_i^2 - (q - alpha_r)^2 with alpha = (alpha_r + i alpha_i)/sqrt(2).
    """
    result = 1.0 - (np.asarray(q) - np.sqrt(2.0) * complex(alpha)) ** 2
    return complex(result) if np.ndim(result) == 0 else result


def negativity_region(alpha: complex) -> tuple[float, float]:
    """Interval outside of which Re[(p^2)_w] < 0: alpha_r -/+ sqrt(1 + alpha_i^2)."""
    alpha_r, alpha_i = quadratures_of(alpha)
    half_width = float(np.sqrt(1.0 + alpha_i**2))
    return alpha_r - half_width, alpha_r + half_width


def negativity_probability(alpha: complex) -> float:
    """erfc(sqrt(1 + alpha_i^2)); independent of alpha_r."""
    _, alpha_i = quadratures_of(alpha)
    return float(erfc(np.sqrt(1.0 + alpha_i**2)))
