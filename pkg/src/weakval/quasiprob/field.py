"""Quasiprobability fields on the (q, p) tensor grid."""

from dataclasses import dataclass
from typing import Any

import numpy as np
import pandas as pd

from weakval.core import QuadratureGrid, QuasiprobKind
from weakval.core.errors import GridMismatch, InvalidRange

IMAGINARY_TOLERANCE = 1e-12


@dataclass(frozen=True, slots=True, eq=False)
class QuasiprobField:
    """Dense quasiprobability values indexed ``[q_index, p_index]``.

    The p axis is the Fourier-dual grid of ``q_grid``, so discrete marginals are
    consistent with the discrete transforms used everywhere else.

    Attributes:
        q_grid: Position grid (also defines the dual momentum grid).
        values: Complex for standard-ordered/Kirkwood, real for Margenau-Hill/Wigner.
        kind: Which distribution the values represent.
    """

    q_grid: QuadratureGrid
    values: np.ndarray
    kind: QuasiprobKind

    def __post_init__(self) -> None:
        n = self.q_grid.n_points
        values = np.asarray(self.values)
        if values.shape != (n, n):
            raise GridMismatch(f"field has shape {values.shape}, expected ({n}, {n})")
        if self.kind.is_real:
            if np.iscomplexobj(values):
                scale = max(float(np.abs(values).max()), 1.0)
                if float(np.abs(values.imag).max()) > IMAGINARY_TOLERANCE * scale:
                    raise InvalidRange(f"{self.kind.value} field must be real")
                values = values.real
            values = np.array(values, dtype=np.float64)
        else:
            values = np.array(values, dtype=np.complex128)
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def p(self) -> np.ndarray:
        """Momentum axis."""
        return self.q_grid.p

    @property
    def q(self) -> np.ndarray:
        """Position axis."""
        return self.q_grid.q

    @property
    def cell_area(self) -> float:
        return self.q_grid.dq * self.q_grid.dp

    def q_marginal(self) -> np.ndarray:
        """Sum over p times dp; equals <q|rho|q>."""
        return self.values.sum(axis=1) * self.q_grid.dp

    def p_marginal(self) -> np.ndarray:
        """Sum over q times dq; equals <p|rho|p>."""
        return self.values.sum(axis=0) * self.q_grid.dq

    def total(self) -> complex:
        """Integral over the whole grid (the trace)."""
        return complex(self.values.sum() * self.cell_area)

    def minimum(self) -> float:
        """Smallest real part over the grid."""
        return float(np.real(self.values).min())

    def value_at(self, q: float, p: float) -> complex:
        """Field value at the grid cell nearest to (q, p)."""
        return complex(self.values[self.q_grid.index_of(q), self.q_grid.momentum_index_of(p)])

    def header(self) -> dict[str, Any]:
        """Grid metadata for binary dumps."""
        grid = self.q_grid
        return {
            "kind": self.kind.value,
            "q_min": grid.q_min,
            "q_max": grid.q_max,
            "n_q": grid.n_points,
            "p_min": float(grid.p[0]),
            "dp": grid.dp,
            "n_p": grid.n_points,
        }

    def to_frame(self) -> pd.DataFrame:
        """Columns ``q, p, re, im`` in row-major q-then-p order."""
        n = self.q_grid.n_points
        values = np.asarray(self.values, dtype=np.complex128).ravel()
        return pd.DataFrame(
            {
                "q": np.repeat(self.q, n),
                "p": np.tile(self.p, n),
                "re": values.real,
                "im": values.imag,
            }
        )
