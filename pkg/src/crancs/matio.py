"""Text serialization for complex matrices and key = value metadata files.

Matrix format: first line ``rows cols``, then one line per row holding
2*cols space-separated decimal floats interleaved as ``re im re im ...``.
Floats are rendered with Python's shortest round-trip repr, so a
write/read cycle is bit-exact at double precision.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np


def write_matrix(path, m: np.ndarray) -> None:
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    rows, cols = m.shape
    with open(path, "w") as fh:
        fh.write(f"{rows} {cols}\n")
        for r in range(rows):
            parts = []
            for c in range(cols):
                v = m[r, c]
                parts.append(repr(float(v.real)))
                parts.append(repr(float(v.imag)))
            fh.write(" ".join(parts) + "\n")


def read_matrix(path) -> np.ndarray:
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise ValueError(f"{path}: bad header, expected 'rows cols'")
        rows, cols = int(header[0]), int(header[1])
        out = np.empty((rows, cols), dtype=np.complex128)
        for r in range(rows):
            fields = fh.readline().split()
            if len(fields) != 2 * cols:
                raise ValueError(f"{path}: row {r} has {len(fields)} fields, expected {2 * cols}")
            vals = np.array(fields, dtype=np.float64)
            out[r] = vals[0::2] + 1j * vals[1::2]
    return out


def write_meta(path, entries: dict) -> None:
    """Write ``key = value`` lines; floats use round-trip repr."""
    with open(path, "w") as fh:
        for key, value in entries.items():
            if isinstance(value, float):
                rendered = repr(value)
            else:
                rendered = str(value)
            fh.write(f"{key} = {rendered}\n")


def read_meta(path) -> dict:
    """Parse ``key = value`` lines into a str -> str dict ('#' starts a comment)."""
    out = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}: malformed line {raw!r}")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out
