"""Weak-value profile over postselected positions."""

from dataclasses import dataclass

import numpy as np
import pandas as pd

from weakval.core import QuadratureGrid
from weakval.core.errors import GridMismatch, MaskedPoint

# Points whose postselection density falls below this fraction of the peak are masked.
DENSITY_FLOOR = 1e-12


@dataclass(frozen=True, slots=True, eq=False)
class WeakValueProfile:
    """Weak values c_w(q) for every postselected position on a grid.

    Attributes:
        grid: Position grid of the postselection.
        values: Complex weak value per grid point; NaN where masked.
        postselection_density: <q|rho|q> per grid point.
        valid_mask: False exactly where the density is below the floor.
        density_floor: Absolute density floor used to build the mask.
    """

    grid: QuadratureGrid
    values: np.ndarray
    postselection_density: np.ndarray
    valid_mask: np.ndarray
    density_floor: float

    def __post_init__(self) -> None:
        n = self.grid.n_points
        for name in ("values", "postselection_density", "valid_mask"):
            array = getattr(self, name)
            if array.shape != (n,):
                raise GridMismatch(f"{name} has shape {array.shape}, expected ({n},)")
            array.flags.writeable = False

    @property
    def real(self) -> np.ndarray:
        """Re c_w(q), NaN where masked."""
        return self.values.real

    @property
    def valid_count(self) -> int:
        return int(self.valid_mask.sum())

    def at(self, q: float) -> complex:
        """Weak value at the grid point nearest to ``q``."""
        k = self.grid.index_of(q)
        if not self.valid_mask[k]:
            raise MaskedPoint(
                f"postselection density {self.postselection_density[k]:.3g} at q={q} is "
                f"below the floor {self.density_floor:.3g}"
            )
        return complex(self.values[k])

    def to_frame(self) -> pd.DataFrame:
        """Columns ``q, re_cw, im_cw, density, valid``."""
        return pd.DataFrame(
            {
                "q": self.grid.q,
                "re_cw": self.values.real,
                "im_cw": self.values.imag,
                "density": self.postselection_density,
                "valid": self.valid_mask.astype(int),
            }
        )
