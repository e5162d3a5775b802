"""Tests for pointer states and the zero-current check."""

import numpy as np
import pytest

from weakval.core.errors import CurrentDensityViolation, InvalidRange
from weakval.measurement import (
    current_density,
    current_density_report,
    gaussian_mixture_pointer,
    gaussian_pointer,
    pointer_grid,
    validate_pointer,
)


class TestPointerConstruction:
    """Tests for pointer constructors."""

    def test_gaussian_is_normalized(self, pointer):
        assert pointer.representation.states[0].is_normalized()

    def test_gaussian_width(self, pointer):
        Q = pointer.grid.q
        variance = float(np.sum(Q**2 * pointer.density()) * pointer.grid.dq)
        assert variance == pytest.approx(1.0, abs=1e-10)

    def test_grid_covers_span(self):
        grid = pointer_grid(2.0, n_points=256, span=10.0)
        assert grid.q_min == -20.0
        assert grid.q_max == 20.0
        assert grid.n_points == 256

    def test_invalid_sigma(self):
        with pytest.raises(InvalidRange):
            gaussian_pointer(0.0)

    def test_mixture_sigma(self):
        pointer = gaussian_mixture_pointer([0.8, 1.2])
        assert pointer.sigma == pytest.approx(np.sqrt(1.04))
        assert pointer.grid.q_max == pytest.approx(12.0 * 1.2)

    def test_mixture_weights_length_checked(self):
        with pytest.raises(InvalidRange):
            gaussian_mixture_pointer([0.8, 1.2], weights=[1.0])


class TestCurrentDensity:
    """Tests for the zero-current-density check."""

    def test_real_gaussian_accepted(self, pointer):
        report = validate_pointer(pointer)
        assert report.accepted
        assert report.max_current < 1e-12

    def test_mixture_accepted(self):
        assert validate_pointer(gaussian_mixture_pointer([0.8, 1.2])).accepted

    def test_drifting_pointer_rejected(self):
        drifting = gaussian_pointer(1.0, momentum=1.0)
        with pytest.raises(CurrentDensityViolation) as excinfo:
            validate_pointer(drifting)
        assert excinfo.value.maximum > 0.1

    def test_current_of_plane_wave_factor(self):
        drifting = gaussian_pointer(1.0, momentum=0.5)
        # J = k |phi|^2 for phi = |phi| exp(ikQ)
        np.testing.assert_allclose(
            current_density(drifting), 0.5 * drifting.density(), atol=1e-10
        )

    def test_report_does_not_raise(self):
        report = current_density_report(gaussian_pointer(1.0, momentum=1.0))
        assert not report.accepted
