"""Tests for weakness diagnostics and the convergence study."""

import numpy as np
import pytest

from weakval.core import ObservableSpec
from weakval.core.errors import InvalidRange
from weakval.measurement import (
    gaussian_mixture_pointer,
    gaussian_pointer,
    shift_convergence_study,
    weakness_ratio,
)
from weakval.states import coherent_state_from_quadratures
from weakval.weak import weak_value


class TestWeaknessRatio:
    """Tests for weakness_ratio."""

    def test_vacuum_p2(self, vacuum, pointer):
        profile = weak_value(ObservableSpec.p_squared(), vacuum)
        report = weakness_ratio(0.1, profile, pointer)
        k0 = vacuum.grid.index_of(0.0)
        k2 = vacuum.grid.index_of(2.0)
        assert report.ratio[k0] == pytest.approx(0.1)
        assert report.ratio[k2] == pytest.approx(0.3)
        assert not report.flagged[k0]
        assert report.flagged[k2]
        assert not report.all_weak

    def test_masked_never_flagged(self, vacuum, pointer):
        profile = weak_value(ObservableSpec.p_squared(), vacuum)
        report = weakness_ratio(1.0, profile, pointer)
        assert not np.any(report.flagged & ~profile.valid_mask)

    def test_frame(self, vacuum, pointer):
        profile = weak_value(ObservableSpec.p_squared(), vacuum)
        frame = weakness_ratio(0.01, profile, pointer).to_frame()
        assert list(frame.columns) == ["q", "ratio", "flagged"]


class TestShiftConvergence:
    """Tests for shift_convergence_study."""

    @pytest.fixture
    def coherent_20(self, grid):
        return coherent_state_from_quadratures(2.0, 0.0, grid)

    @pytest.mark.parametrize("which", ["vacuum", "coherent_20", "vacuum_fock_mixture"])
    @pytest.mark.parametrize(
        "make_pointer",
        [
            lambda: gaussian_pointer(0.5),
            lambda: gaussian_pointer(1.0),
            lambda: gaussian_pointer(2.0),
            lambda: gaussian_mixture_pointer([0.8, 1.2]),
        ],
        ids=["sigma-0.5", "sigma-1", "sigma-2", "two-gaussian"],
    )
    def test_quadratic_residual_every_object_and_pointer(self, request, which, make_pointer):
        state = request.getfixturevalue(which)
        report = shift_convergence_study(
            state, make_pointer(), ObservableSpec.p_squared(), [0.005, 0.01, 0.02]
        )
        assert report.compared_points > 0
        for ratio in report.ratios[1:]:
            assert 3.0 <= ratio <= 5.0

    def test_quadratic_residual(self, vacuum, pointer):
        report = shift_convergence_study(
            vacuum, pointer, ObservableSpec.p_squared(), [0.005, 0.01, 0.02]
        )
        assert report.ratios[0] is None
        for ratio in report.ratios[1:]:
            assert 3.0 <= ratio <= 5.0
        assert report.compared_points > 0

    def test_rows_sorted(self, vacuum, pointer):
        report = shift_convergence_study(
            vacuum, pointer, ObservableSpec.p_squared(), [0.02, 0.005, 0.01]
        )
        assert [row.epsilon for row in report.rows] == [0.005, 0.01, 0.02]

    def test_zero_epsilon_row(self, vacuum, pointer):
        report = shift_convergence_study(vacuum, pointer, ObservableSpec.p_squared(), [0.0, 0.01])
        first, second = report.rows
        assert first.max_error < 1e-10
        assert first.max_error == first.max_shift_error
        assert second.ratio_to_prev is None

    def test_marginal_deviation_small(self, vacuum, pointer):
        report = shift_convergence_study(
            vacuum, pointer, ObservableSpec.p_squared(), [0.005, 0.01]
        )
        assert report.rows[0].marginal_deviation < 1e-2

    def test_strong_coupling_flagged(self, vacuum, caplog):
        wide = gaussian_pointer(1.0, span=48.0, n_points=1024)
        with caplog.at_level("WARNING"):
            report = shift_convergence_study(
                vacuum, wide, ObservableSpec.p_squared(), [0.125, 0.25, 0.5]
            )
        assert report.flagged
        assert report.rows[-1].weakness_violations > 0
        assert "weakness condition violated" in caplog.text

    def test_frame(self, vacuum, pointer):
        report = shift_convergence_study(vacuum, pointer, ObservableSpec.p_squared(), [0.01, 0.02])
        frame = report.to_frame()
        assert list(frame.columns)[:3] == ["epsilon", "max_error", "ratio_to_prev"]
        assert len(frame) == 2

    @pytest.mark.parametrize(
        "epsilons", [[0.01], [-0.01, 0.01], [0.01, 0.015]], ids=["single", "negative", "close"]
    )
    def test_invalid_epsilons(self, vacuum, pointer, epsilons):
        with pytest.raises(InvalidRange):
            shift_convergence_study(vacuum, pointer, ObservableSpec.p_squared(), epsilons)
