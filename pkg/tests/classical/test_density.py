"""Tests for classical phase-space densities and ensembles."""

import numpy as np
import pytest

from weakval.classical import (
    ClassicalEnsemble,
    PhaseSpaceDensity,
    coherent_density,
    gaussian_density,
    pointer_density,
    pointer_drift,
    sample_product_state,
)
from weakval.core.errors import (
    CurrentDensityViolation,
    GridMismatch,
    InvalidRange,
    NegativeWeight,
    NotNonnegative,
)


class TestPhaseSpaceDensity:
    """Tests for PhaseSpaceDensity validation and statistics."""

    def test_gaussian_normalized(self):
        density = gaussian_density(1.0, 0.5)
        assert density.normalization == pytest.approx(1.0, abs=1e-8)

    def test_coherent_moments(self):
        density = coherent_density(2.0, 1.0)
        assert density.x_mean() == pytest.approx(2.0, abs=1e-8)
        assert density.x_std() == pytest.approx(1.0 / np.sqrt(2.0), abs=1e-8)
        assert density.label == "coherent(2,1)"

    def test_pointer_widths(self):
        density = pointer_density(2.0)
        x_min, x_max, y_min, y_max = density.bounds
        assert x_max == pytest.approx(16.0)
        assert y_max == pytest.approx(8.0 * 0.25)

    def test_negative_density_rejected(self):
        base = gaussian_density(1.0, 1.0)
        with pytest.raises(NotNonnegative):
            PhaseSpaceDensity(lambda x, y: base(x, y) - 1e-3, base.bounds)

    def test_unnormalized_density_rejected(self):
        base = gaussian_density(1.0, 1.0)
        with pytest.raises(InvalidRange):
            PhaseSpaceDensity(lambda x, y: 2.0 * base(x, y), base.bounds)

    def test_bad_bounds(self):
        with pytest.raises(InvalidRange):
            PhaseSpaceDensity(lambda x, y: x * 0.0, (1.0, -1.0, 0.0, 1.0))

    def test_nonpositive_width(self):
        with pytest.raises(InvalidRange):
            gaussian_density(0.0, 1.0)

    def test_rejection_sampling(self, rng):
        base = gaussian_density(1.0, 1.0)
        density = PhaseSpaceDensity(base.evaluator, base.bounds, label="no-sampler")
        x, y = density.sample(rng, 20_000)
        assert x.shape == (20_000,)
        assert abs(x.mean()) < 0.05
        assert x.std() == pytest.approx(1.0, abs=0.05)
        assert y.std() == pytest.approx(1.0, abs=0.05)


class TestSampleProductState:
    """Tests for sample_product_state."""

    def test_deterministic(self):
        a = sample_product_state(coherent_density(), pointer_density(), 1000, seed=7)
        b = sample_product_state(coherent_density(), pointer_density(), 1000, seed=7)
        np.testing.assert_array_equal(a.q, b.q)
        np.testing.assert_array_equal(a.P, b.P)
        c = sample_product_state(coherent_density(), pointer_density(), 1000, seed=8)
        assert not np.array_equal(a.q, c.q)

    def test_statistics(self):
        ensemble = sample_product_state(coherent_density(1.0, 0.0), pointer_density(), 100_000, 0)
        assert ensemble.q.mean() == pytest.approx(1.0, abs=0.01)
        assert ensemble.Q.std() == pytest.approx(1.0, abs=0.01)
        assert ensemble.P.std() == pytest.approx(0.5, abs=0.01)
        assert ensemble.effective_size == pytest.approx(100_000)
        assert ensemble.rng_seed == 0

    def test_drifting_pointer_rejected(self):
        drifting = pointer_density(1.0, drift=1.0)
        drift, scale = pointer_drift(drifting)
        assert drift == pytest.approx(scale, rel=1e-6)
        with pytest.raises(CurrentDensityViolation):
            sample_product_state(coherent_density(), drifting, 100, 0)

    def test_invalid_count(self):
        with pytest.raises(InvalidRange):
            sample_product_state(coherent_density(), pointer_density(), 0, 0)

    def test_frame_columns(self):
        ensemble = sample_product_state(coherent_density(), pointer_density(), 10, 0)
        assert list(ensemble.to_frame().columns) == ["q", "p", "Q", "P", "weight"]


class TestClassicalEnsemble:
    """Tests for ClassicalEnsemble validation."""

    def test_weights_must_sum_to_one(self):
        ones = np.ones(4)
        with pytest.raises(InvalidRange):
            ClassicalEnsemble(ones, ones, ones, ones, np.full(4, 0.3), 0)

    def test_negative_weight(self):
        ones = np.ones(3)
        with pytest.raises(NegativeWeight):
            ClassicalEnsemble(ones, ones, ones, ones, np.array([1.5, -0.5, 0.0]), 0)

    def test_length_mismatch(self):
        with pytest.raises(GridMismatch):
            ClassicalEnsemble(np.ones(3), np.ones(2), np.ones(3), np.ones(3), np.full(3, 1 / 3), 0)

    def test_arrays_read_only(self):
        ones = np.ones(2)
        ensemble = ClassicalEnsemble(ones, ones, ones, ones, np.full(2, 0.5), 0)
        with pytest.raises(ValueError):
            ensemble.q[0] = 2.0
