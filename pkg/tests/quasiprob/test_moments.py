"""Tests for conditional moments and negativity volume."""

import numpy as np
import pytest

from weakval.core import ObservableSpec
from weakval.core.errors import ComplexField, MaskedPoint
from weakval.quasiprob import (
    conditional_moment,
    conditional_moments,
    kirkwood,
    margenau_hill,
    negativity_volume,
    standard_ordered,
    wigner,
)
from weakval.states import coherent_state_from_quadratures, fock_state
from weakval.weak import weak_value


class TestConditionalMoment:
    """Tests for conditional_moment."""

    def test_zeroth_moment(self, coherent_21):
        moments, valid = conditional_moments(margenau_hill(coherent_21), 0)
        np.testing.assert_allclose(moments[valid], 1.0, atol=1e-12)

    def test_vacuum_second_moment_at_two(self, vacuum):
        assert conditional_moment(margenau_hill(vacuum), 2, 2.0) == pytest.approx(-3.0, abs=1e-6)

    def test_vacuum_first_moment(self, grid, vacuum):
        moments, valid = conditional_moments(margenau_hill(vacuum), 1)
        inner = valid & (np.abs(grid.q) <= 4.0)
        assert np.max(np.abs(moments[inner])) < 1e-6

    @pytest.mark.parametrize("which", ["vacuum", "coherent_21", "fock_1", "vacuum_fock_mixture"])
    def test_weak_value_bridge(self, request, which):
        state = request.getfixturevalue(which)
        moments, valid = conditional_moments(margenau_hill(state), 2)
        profile = weak_value(ObservableSpec.p_squared(), state)
        mask = valid & profile.valid_mask
        np.testing.assert_allclose(moments[mask], profile.real[mask], atol=1e-6)

    def test_fock_three_bridge(self, grid):
        state = fock_state(3, grid)
        moments, valid = conditional_moments(margenau_hill(state), 2)
        profile = weak_value(ObservableSpec.p_squared(), state)
        mask = valid & profile.valid_mask
        np.testing.assert_allclose(moments[mask], profile.real[mask], atol=1e-6)

    @pytest.mark.parametrize("n", [1, 4])
    def test_higher_moments_match_weak_values(self, grid, coherent_21, n):
        moments, valid = conditional_moments(margenau_hill(coherent_21), n)
        obs = ObservableSpec.diagonal_in_p(lambda p: p**n, label=f"p^{n}")
        profile = weak_value(obs, coherent_21)
        mask = valid & profile.valid_mask & (np.abs(grid.q - 2.0) <= 4.0)
        scale = np.maximum(1.0, np.abs(profile.real[mask]))
        assert np.all(np.abs(moments[mask] - profile.real[mask]) <= 1e-6 * scale)

    def test_masked_point(self, vacuum):
        with pytest.raises(MaskedPoint):
            conditional_moment(margenau_hill(vacuum), 2, -15.0)

    def test_complex_field_rejected(self, vacuum):
        with pytest.raises(ComplexField):
            conditional_moment(standard_ordered(vacuum), 2, 0.0)

    def test_negative_order_rejected(self, vacuum):
        with pytest.raises(ValueError):
            conditional_moment(margenau_hill(vacuum), -1, 0.0)


class TestNegativityVolume:
    """Tests for negativity_volume."""

    def test_vacuum_margenau_hill_positive(self, vacuum):
        assert negativity_volume(margenau_hill(vacuum)) > 1e-3

    def test_coherent_wigner_zero(self, coherent_21):
        assert negativity_volume(wigner(coherent_21)) < 1e-10

    def test_displacement_invariance(self, grid, vacuum):
        # grid-commensurate displacement: 64 cells in q, 5 cells in p
        displaced = coherent_state_from_quadratures(2.0, 5 * grid.dp, grid)
        base = negativity_volume(margenau_hill(vacuum))
        assert negativity_volume(margenau_hill(displaced)) == pytest.approx(base, abs=1e-8)

    def test_complex_field_rejected(self, vacuum):
        with pytest.raises(ComplexField):
            negativity_volume(kirkwood(vacuum))
