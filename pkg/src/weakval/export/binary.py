"""Compact binary dump for dense 2-D fields.

Layout: 8-byte magic ``b"WVFIELD\\0"``, little-endian uint32 header length, UTF-8 JSON
header, then little-endian float64 payload in row-major order (complex values as
interleaved re/im pairs).
"""

import json
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from weakval.core.errors import InvalidRange
from weakval.export.files import atomic_write_bytes
from weakval.export.tables import jsonable

MAGIC = b"WVFIELD\0"


@dataclass(frozen=True, slots=True, eq=False)
class FieldDump:
    """Contents of a binary field file."""

    header: dict[str, Any]
    values: np.ndarray


def encode_field(values: np.ndarray, header: dict[str, Any]) -> bytes:
    """Serialize a 2-D array with its header."""
    values = np.asarray(values)
    is_complex = np.iscomplexobj(values)
    full_header = dict(header)
    full_header["shape"] = list(values.shape)
    full_header["dtype"] = "complex" if is_complex else "real"
    header_bytes = json.dumps(jsonable(full_header), sort_keys=True).encode("utf-8")
    payload = values.astype("<c16" if is_complex else "<f8", copy=False).tobytes(order="C")
    return MAGIC + struct.pack("<I", len(header_bytes)) + header_bytes + payload


def decode_field(data: bytes) -> FieldDump:
    """Parse bytes produced by :func:`encode_field`."""
    if not data.startswith(MAGIC):
        raise InvalidRange("not a weakval field dump")
    offset = len(MAGIC)
    (length,) = struct.unpack_from("<I", data, offset)
    offset += 4
    header = json.loads(data[offset : offset + length].decode("utf-8"))
    offset += length
    is_complex = header["dtype"] == "complex"
    raw = np.frombuffer(data, dtype="<c16" if is_complex else "<f8", offset=offset)
    values = raw.reshape(header["shape"]).astype(np.complex128 if is_complex else np.float64)
    return FieldDump(header=header, values=values)


def write_field(path: Path, values: np.ndarray, header: dict[str, Any]) -> None:
    """Write a binary field dump atomically."""
    atomic_write_bytes(Path(path), encode_field(values, header))


def read_field(path: Path) -> FieldDump:
    """Read a binary field dump."""
    return decode_field(Path(path).read_bytes())
