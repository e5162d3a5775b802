"""Columnar text format for wavefunctions.

Header ``# basis=<position|momentum> q_min=<f> q_max=<f> n=<d>`` followed by one
``index,re,im`` row per grid point.
"""

import re
from pathlib import Path

import numpy as np

from weakval.core import Basis, QuadratureGrid, WaveFunction
from weakval.core.errors import InvalidRange
from weakval.export.files import atomic_write_text

HEADER_PATTERN = re.compile(
    r"^#\s*basis=(?P<basis>position|momentum)\s+q_min=(?P<q_min>\S+)\s+"
    r"q_max=(?P<q_max>\S+)\s+n=(?P<n>\d+)\s*$"
)


def format_state(wf: WaveFunction) -> str:
    """Serialize a wavefunction to the columnar text format."""
    grid = wf.grid
    lines = [
        f"# basis={wf.basis.value} q_min={grid.q_min!r} q_max={grid.q_max!r} n={grid.n_points}"
    ]
    lines.extend(
        f"{k},{float(a.real)!r},{float(a.imag)!r}" for k, a in enumerate(wf.amplitudes)
    )
    return "\n".join(lines) + "\n"


def parse_state(text: str) -> WaveFunction:
    """Parse the columnar text format."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InvalidRange("empty state file")
    match = HEADER_PATTERN.match(lines[0])
    if match is None:
        raise InvalidRange(f"malformed state header: {lines[0]!r}")
    grid = QuadratureGrid(float(match["q_min"]), float(match["q_max"]), int(match["n"]))
    amplitudes = np.zeros(grid.n_points, dtype=np.complex128)
    seen = np.zeros(grid.n_points, dtype=bool)
    for line in lines[1:]:
        if line.startswith("#"):
            continue
        index, re_part, im_part = line.split(",")
        k = int(index)
        if not 0 <= k < grid.n_points:
            raise InvalidRange(f"row index {k} outside grid of {grid.n_points} points")
        amplitudes[k] = complex(float(re_part), float(im_part))
        seen[k] = True
    if not seen.all():
        raise InvalidRange(f"state file is missing {int((~seen).sum())} rows")
    return WaveFunction(grid, amplitudes, Basis(match["basis"]))


def write_state(path: Path, wf: WaveFunction) -> None:
    """Write a wavefunction atomically."""
    atomic_write_text(Path(path), format_state(wf))


def read_state(path: Path) -> WaveFunction:
    """Read a wavefunction written by :func:`write_state`."""
    return parse_state(Path(path).read_text())
