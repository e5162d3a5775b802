"""Tests for the validated run configuration."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from weakval.cli.models import RunConfig


class TestRunConfig:
    """Tests for RunConfig validation."""

    def test_defaults(self):
        config = RunConfig(command="weakvalue")
        assert config.n_points == 1024
        assert config.epsilons == [0.005, 0.01, 0.02]
        assert config.samples == 1_000_000

    @pytest.mark.parametrize(
        "overrides",
        [
            {"n_points": 1000},
            {"pointer_points": 100},
            {"epsilon": 1.5},
            {"epsilons": [0.01, -0.1]},
            {"q_min": 4.0, "q_max": -4.0},
            {"alpha_r": 7.0},
            {"samples": 0},
            {"format": "xml"},
            {"unknown": 1},
        ],
    )
    def test_rejected(self, overrides):
        with pytest.raises(ValidationError):
            RunConfig(command="weakvalue", **overrides)

    def test_binary_only_for_fields(self):
        with pytest.raises(ValidationError):
            RunConfig(command="fig1", format="binary")
        assert RunConfig(command="fig2", format="binary").resolved_format == "binary"

    def test_classical_tables_only(self):
        with pytest.raises(ValidationError):
            RunConfig(command="simulate", classical=True, format="binary")
        assert RunConfig(command="simulate", format="binary").resolved_format == "binary"

    @pytest.mark.parametrize("command", ["simulate", "convergence"])
    def test_energy_needs_classical(self, command):
        with pytest.raises(ValidationError):
            RunConfig(command=command, obs="energy")
        assert RunConfig(command="simulate", obs="energy", classical=True).obs == "energy"

    def test_resolved_format(self):
        assert RunConfig(command="fig2").resolved_format == "csv"
        assert RunConfig(command="fig2", output=Path("f.bin")).resolved_format == "binary"
        assert RunConfig(command="weakvalue", output=Path("w.csv")).resolved_format == "csv"

    def test_header_excludes_output(self):
        header = RunConfig(command="fig1", output=Path("fig1.csv")).header()
        assert "output" not in header
        assert header["format"] == "csv"
        assert header["command"] == "fig1"

    def test_frozen(self):
        config = RunConfig(command="fig1")
        with pytest.raises(ValidationError):
            config.seed = 3
