"""CSV and JSON table exports.

CSV files start with ``#``-prefixed comment lines carrying the metadata (one
``key=value`` per line, values JSON-encoded), then a header row and comma-separated data.
JSON files hold ``{"meta": {...}, "rows": [...]}``. Both are byte-deterministic.
"""

import io
import json
from pathlib import Path
from typing import Any, Literal

import numpy as np
import pandas as pd

from weakval.export.files import atomic_write_text

TableFormat = Literal["csv", "json"]

FLOAT_FORMAT = "%.17g"


def jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        return jsonable(value.item())
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, float) and not np.isfinite(value):
        return None
    return value


def header_lines(meta: dict[str, Any]) -> list[str]:
    """Render metadata as ``# key=value`` comment lines in sorted key order."""
    return [
        f"# {key}={json.dumps(jsonable(value), sort_keys=True)}"
        for key, value in sorted(meta.items())
    ]


def format_csv(frame: pd.DataFrame, meta: dict[str, Any]) -> str:
    """Render a table as CSV text with a metadata header."""
    buffer = io.StringIO()
    for line in header_lines(meta):
        buffer.write(line + "\n")
    frame.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


def format_json(frame: pd.DataFrame, meta: dict[str, Any]) -> str:
    """Render a table as JSON: one object per row plus a ``meta`` object."""
    rows = [
        {column: jsonable(value) for column, value in record.items()}
        for record in frame.to_dict(orient="records")
    ]
    return json.dumps({"meta": jsonable(meta), "rows": rows}, sort_keys=True, indent=2) + "\n"


def write_table(
    path: Path, frame: pd.DataFrame, meta: dict[str, Any], fmt: TableFormat = "csv"
) -> None:
    """Write a table atomically in the requested format."""
    text = format_csv(frame, meta) if fmt == "csv" else format_json(frame, meta)
    atomic_write_text(Path(path), text)


def read_csv_table(path: Path) -> pd.DataFrame:
    """Read a CSV written by :func:`write_table`, skipping the metadata comments."""
    return pd.read_csv(path, comment="#")
