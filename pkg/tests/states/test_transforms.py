"""Tests for basis transforms and operator application."""

import numpy as np
import pytest

from weakval.core import Basis, ObservableSpec, QuadratureGrid
from weakval.core.errors import BasisError
from weakval.states import (
    apply_observable,
    coherent_state_from_quadratures,
    expectation,
    fock_state,
    make_grid,
    to_momentum,
    to_position,
)


class TestToMomentum:
    """Tests for to_momentum / to_position."""

    def test_vacuum_self_transform(self, grid, vacuum):
        momentum = to_momentum(vacuum)
        assert momentum.basis is Basis.MOMENTUM
        expected = np.pi**-0.25 * np.exp(-0.5 * grid.p**2)
        np.testing.assert_allclose(momentum.amplitudes, expected, atol=1e-10)

    def test_imaginary_alpha_shifts_momentum(self, grid):
        wf = coherent_state_from_quadratures(0.0, 2.5, grid)
        density = to_momentum(wf).density
        assert grid.p[np.argmax(density)] == pytest.approx(2.5, abs=grid.dp / 2)

    def test_unitary(self, coherent_21):
        momentum = to_momentum(coherent_21)
        assert momentum.norm_squared == pytest.approx(coherent_21.norm_squared, abs=1e-10)

    def test_round_trip(self, coherent_21):
        back = to_position(to_momentum(coherent_21))
        np.testing.assert_allclose(back.amplitudes, coherent_21.amplitudes, atol=1e-10)

    def test_wrong_basis(self, vacuum):
        with pytest.raises(BasisError):
            to_position(vacuum)
        with pytest.raises(BasisError):
            to_momentum(to_momentum(vacuum))


class TestApplyObservable:
    """Tests for apply_observable and expectation."""

    def test_p_squared_on_vacuum(self, grid, vacuum):
        result = apply_observable(ObservableSpec.p_squared(), vacuum)
        region = np.abs(grid.q) <= 4.0
        expected = (1.0 - grid.q**2) * vacuum.amplitudes
        assert np.max(np.abs(result.amplitudes - expected)[region]) < 1e-8

    def test_identity(self, coherent_21):
        result = apply_observable(ObservableSpec.diagonal_in_q(np.ones_like), coherent_21)
        np.testing.assert_allclose(result.amplitudes, coherent_21.amplitudes)

    def test_energy_eigenvalue(self, vacuum):
        result = apply_observable(ObservableSpec.energy(), vacuum)
        np.testing.assert_allclose(result.amplitudes, 0.5 * vacuum.amplitudes, atol=1e-10)

    def test_momentum_basis_input_stays_in_momentum_basis(self, vacuum):
        result = apply_observable(ObservableSpec.q_squared(), to_momentum(vacuum))
        assert result.basis is Basis.MOMENTUM

    def test_spectral_consistency(self, grid, coherent_21):
        spectral = expectation(ObservableSpec.p_squared(), coherent_21)
        momentum = to_momentum(coherent_21)
        direct = float(np.sum(grid.p**2 * momentum.density) * grid.dp)
        assert spectral == pytest.approx(direct, abs=1e-8)

    def test_coherent_p_squared(self, coherent_21):
        # <p^2> = alpha_i^2 + 1/2
        assert expectation(ObservableSpec.p_squared(), coherent_21) == pytest.approx(1.5, abs=1e-8)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_fock_energy(self, grid, n):
        assert expectation(ObservableSpec.energy(), fock_state(n, grid)) == pytest.approx(
            n + 0.5, abs=1e-8
        )

    def test_grid_refinement(self):
        coarse = make_grid(-16, 16, 1024)
        fine = make_grid(-16, 16, 2048)
        obs = ObservableSpec.p_squared()
        a = expectation(obs, coherent_state_from_quadratures(2.0, 1.0, coarse))
        b = expectation(obs, coherent_state_from_quadratures(2.0, 1.0, fine))
        assert abs(a - b) < 1e-9

    def test_mixture_expectation(self, vacuum_fock_mixture):
        assert expectation(ObservableSpec.energy(), vacuum_fock_mixture) == pytest.approx(
            1.0, abs=1e-8
        )

    def test_linear_combination(self, coherent_21):
        combo = ObservableSpec.linear_combination(
            [(2.0, ObservableSpec.p_squared()), (-1.0, ObservableSpec.q_squared())]
        )
        p2 = expectation(ObservableSpec.p_squared(), coherent_21)
        q2 = expectation(ObservableSpec.q_squared(), coherent_21)
        assert expectation(combo, coherent_21) == pytest.approx(2.0 * p2 - q2, abs=1e-8)


def test_small_grid_round_trip():
    grid = QuadratureGrid(-8.0, 8.0, 64)
    wf = coherent_state_from_quadratures(0.5, 0.5, grid)
    np.testing.assert_allclose(to_position(to_momentum(wf)).amplitudes, wf.amplitudes, atol=1e-12)
