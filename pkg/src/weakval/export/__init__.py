"""File exports shared by all modules."""

from weakval.export.binary import FieldDump, read_field, write_field
from weakval.export.files import atomic_write_bytes, atomic_write_text
from weakval.export.tables import format_csv, format_json, read_csv_table, write_table

__all__ = [
    "FieldDump",
    "atomic_write_bytes",
    "atomic_write_text",
    "format_csv",
    "format_json",
    "read_csv_table",
    "read_field",
    "write_field",
    "write_table",
]
