"""Tests for CSV and JSON table exports."""

import json

import numpy as np
import pandas as pd
import pytest

from weakval.export import format_csv, format_json, read_csv_table, write_table
from weakval.export.tables import header_lines, jsonable


@pytest.fixture
def frame() -> pd.DataFrame:
    return pd.DataFrame({"q": [0.1, 2.0], "re_cw": [1.0 / 3.0, -3.0], "valid": [1, 0]})


class TestCsv:
    """Tests for the CSV dialect."""

    def test_metadata_header_sorted(self, frame):
        text = format_csv(frame, {"obs": "p^2", "alpha_r": 2.0})
        lines = text.splitlines()
        assert lines[0] == "# alpha_r=2.0"
        assert lines[1] == '# obs="p^2"'
        assert lines[2] == "q,re_cw,valid"

    def test_full_precision(self, frame):
        text = format_csv(frame, {})
        assert "0.33333333333333331" in text

    def test_round_trip(self, tmp_path, frame):
        path = tmp_path / "table.csv"
        write_table(path, frame, {"command": "weakvalue"})
        loaded = read_csv_table(path)
        assert list(loaded.columns) == ["q", "re_cw", "valid"]
        assert loaded["re_cw"].iloc[0] == pytest.approx(1.0 / 3.0, rel=1e-15)

    def test_deterministic(self, frame):
        assert format_csv(frame, {"b": 1, "a": [1, 2]}) == format_csv(frame, {"a": [1, 2], "b": 1})


class TestJson:
    """Tests for the JSON layout."""

    def test_meta_and_rows(self, tmp_path, frame):
        path = tmp_path / "table.json"
        write_table(path, frame, {"command": "fig1"}, fmt="json")
        document = json.loads(path.read_text())
        assert document["meta"] == {"command": "fig1"}
        assert document["rows"][1] == {"q": 2.0, "re_cw": -3.0, "valid": 0}

    def test_nan_becomes_null(self):
        frame = pd.DataFrame({"x": [np.nan, 1.0]})
        document = json.loads(format_json(frame, {}))
        assert document["rows"][0]["x"] is None


class TestJsonable:
    """Tests for metadata conversion."""

    def test_numpy_values(self, tmp_path):
        value = jsonable({"a": np.float64(1.5), "b": np.arange(2), "c": tmp_path, 3: (1, 2)})
        assert value == {"a": 1.5, "b": [0, 1], "c": str(tmp_path), "3": [1, 2]}

    def test_header_lines(self):
        assert header_lines({"x": None}) == ["# x=null"]
