"""Tests for grids, wavefunctions, mixtures and observables."""

import numpy as np
import pytest

from weakval.core import (
    Basis,
    MixedState,
    ObservableKind,
    ObservableSpec,
    QuadratureGrid,
    WaveFunction,
)
from weakval.core.errors import EmptyMixture, GridMismatch, InvalidRange, NegativeWeight


class TestQuadratureGrid:
    """Tests for QuadratureGrid."""

    def test_spacings(self):
        grid = QuadratureGrid(-16.0, 16.0, 1024)
        assert grid.dq == pytest.approx(1.0 / 32.0)
        assert grid.dp == pytest.approx(2.0 * np.pi / 32.0)

    def test_points_exclude_right_edge(self):
        grid = QuadratureGrid(-4.0, 4.0, 8)
        assert grid.q[0] == -4.0
        assert grid.q[-1] == pytest.approx(3.0)

    def test_momentum_grid_is_centred(self):
        grid = QuadratureGrid(-4.0, 4.0, 8)
        assert grid.p[grid.n_points // 2] == 0.0
        assert grid.p[0] == pytest.approx(-4 * grid.dp)

    def test_rejects_inverted_range(self):
        with pytest.raises(InvalidRange):
            QuadratureGrid(1.0, -1.0, 64)

    @pytest.mark.parametrize("n", [0, 4, 100, 1000])
    def test_rejects_bad_sizes(self, n):
        with pytest.raises(InvalidRange):
            QuadratureGrid(-1.0, 1.0, n)

    def test_index_of_nearest_point(self):
        grid = QuadratureGrid(-16.0, 16.0, 1024)
        assert grid.q[grid.index_of(2.0)] == 2.0
        assert grid.q[grid.index_of(2.01)] == 2.0

    def test_index_of_wraps_at_right_edge(self):
        grid = QuadratureGrid(-4.0, 4.0, 64)
        assert grid.index_of(4.0) == 0
        assert grid.index_of(4.0 - 0.4 * grid.dq) == 0
        assert grid.index_of(4.0 - 0.6 * grid.dq) == 63

    def test_index_of_outside_grid(self):
        grid = QuadratureGrid(-4.0, 4.0, 64)
        with pytest.raises(InvalidRange):
            grid.index_of(5.0)

    def test_invalid_range_is_value_error(self):
        with pytest.raises(ValueError):
            QuadratureGrid(0.0, 0.0, 64)


class TestWaveFunction:
    """Tests for WaveFunction."""

    def test_amplitudes_are_read_only(self, grid):
        wf = WaveFunction(grid, np.ones(grid.n_points))
        with pytest.raises(ValueError):
            wf.amplitudes[0] = 2.0

    def test_shape_mismatch(self, grid):
        with pytest.raises(GridMismatch):
            WaveFunction(grid, np.ones(10))

    def test_normalized(self, grid):
        wf = WaveFunction(grid, 3.0 * np.exp(-grid.q**2)).normalized()
        assert wf.is_normalized()

    def test_cannot_normalize_zero(self, grid):
        with pytest.raises(InvalidRange):
            WaveFunction(grid, np.zeros(grid.n_points)).normalized()

    def test_momentum_norm_uses_dp(self, grid):
        wf = WaveFunction(grid, np.ones(grid.n_points), Basis.MOMENTUM)
        assert wf.norm_squared == pytest.approx(grid.n_points * grid.dp)


class TestMixedState:
    """Tests for MixedState."""

    def test_empty(self):
        with pytest.raises(EmptyMixture):
            MixedState(())

    def test_negative_weight(self, vacuum):
        with pytest.raises(NegativeWeight):
            MixedState(((1.5, vacuum), (-0.5, vacuum)))

    def test_weights_must_sum_to_one(self, vacuum):
        with pytest.raises(InvalidRange):
            MixedState(((0.5, vacuum), (0.4, vacuum)))

    def test_grid_mismatch(self, vacuum):
        other = WaveFunction(QuadratureGrid(-8.0, 8.0, 64), np.ones(64))
        with pytest.raises(GridMismatch):
            MixedState(((0.5, vacuum), (0.5, other)))

    def test_pure(self, vacuum):
        state = MixedState.pure(vacuum)
        assert state.is_pure
        assert state.grid == vacuum.grid


class TestObservableSpec:
    """Tests for ObservableSpec."""

    def test_energy_is_half_sum(self):
        energy = ObservableSpec.energy()
        assert energy.kind is ObservableKind.ENERGY
        assert [a for a, _ in energy.terms] == [0.5, 0.5]

    def test_diagonal_flags(self):
        assert ObservableSpec.p_squared().is_diagonal_in_p
        assert not ObservableSpec.p_squared().is_diagonal_in_q
        assert ObservableSpec.q_squared().is_diagonal_in_q
        assert not ObservableSpec.energy().is_diagonal_in_p

    def test_combination_of_p_terms_is_p_diagonal(self):
        obs = ObservableSpec.linear_combination(
            [(2.0, ObservableSpec.p_squared()), (1.0, ObservableSpec.diagonal_in_p(np.cos))]
        )
        assert obs.is_diagonal_in_p
        x = np.linspace(-1.0, 1.0, 5)
        np.testing.assert_allclose(obs.symbol(x), 2.0 * x**2 + np.cos(x))

    def test_empty_combination(self):
        with pytest.raises(InvalidRange):
            ObservableSpec.linear_combination([])

    def test_energy_has_no_diagonal_symbol(self):
        with pytest.raises(InvalidRange):
            ObservableSpec.energy().symbol(np.zeros(3))
