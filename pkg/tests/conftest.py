"""Shared pytest fixtures."""

import numpy as np
import pytest

from weakval.config import configure
from weakval.core import MixedState, QuadratureGrid, WaveFunction
from weakval.measurement import PointerState, gaussian_pointer
from weakval.states import coherent_state_from_quadratures, default_grid, fock_state, mix


@pytest.fixture(autouse=True)
def _reset_settings():
    """Re-read settings from the environment in every test."""
    configure(None)
    yield
    configure(None)


@pytest.fixture
def grid() -> QuadratureGrid:
    """Default grid q in [-16, 16) with 1024 points."""
    return default_grid()


@pytest.fixture
def small_grid() -> QuadratureGrid:
    """Coarser grid for the (q, p) fields and simulations."""
    return QuadratureGrid(-12.0, 12.0, 256)


@pytest.fixture
def vacuum(grid: QuadratureGrid) -> WaveFunction:
    return coherent_state_from_quadratures(0.0, 0.0, grid)


@pytest.fixture
def coherent_21(grid: QuadratureGrid) -> WaveFunction:
    """Coherent state with alpha_r = 2, alpha_i = 1."""
    return coherent_state_from_quadratures(2.0, 1.0, grid)


@pytest.fixture
def fock_1(grid: QuadratureGrid) -> WaveFunction:
    return fock_state(1, grid)


@pytest.fixture
def vacuum_fock_mixture(grid: QuadratureGrid) -> MixedState:
    """50/50 mixture of the vacuum and the first number state."""
    return mix([(0.5, fock_state(0, grid)), (0.5, fock_state(1, grid))])


@pytest.fixture
def pointer() -> PointerState:
    """Real Gaussian pointer, sigma = 1, on the default pointer grid."""
    return gaussian_pointer(1.0)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)
