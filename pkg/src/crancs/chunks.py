"""Chunked view of the unknown channel matrix and basic matrix operations.

The unknown X is a KN x GM complex matrix.  Rows are grouped into K "row
chunks" of N rows (one per user); columns are additionally grouped into G
blocks of M columns (one per remote radio head), so the (i, j) "element
chunk" is the N x M block holding the channel between user i and RRH j.

Matrices are plain ``numpy.ndarray`` of dtype complex128.  Chunk indices
``i`` (user) and ``j`` (RRH) are 1-based at the API surface; all internal
loops are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels


@dataclass(frozen=True)
class ChunkLayout:
    """Problem dimensions: K users, G RRHs, M/N antennas, pilot length L.

    A conforming unknown X is KN x GM, the sensing matrix A is L x KN and
    the observation B is L x GM.
    """

    K: int
    G: int
    M: int
    N: int
    L: int

    def __post_init__(self):
        for name in ("K", "G", "M", "N", "L"):
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or v < 1:
                raise ValueError(f"layout field {name} must be a positive integer, got {v!r}")

    @property
    def x_shape(self):
        return (self.K * self.N, self.G * self.M)

    @property
    def a_shape(self):
        return (self.L, self.K * self.N)

    @property
    def b_shape(self):
        return (self.L, self.G * self.M)

    def check_x(self, x: np.ndarray, name: str = "x"):
        if x.shape != self.x_shape:
            raise ValueError(f"{name} has shape {x.shape}, layout requires {self.x_shape}")

    def row_slice(self, i: int) -> slice:
        """Row range of user i's row chunk (i is 1-based)."""
        if not 1 <= i <= self.K:
            raise IndexError(f"user index {i} out of range 1..{self.K}")
        return slice((i - 1) * self.N, i * self.N)

    def col_slice(self, j: int) -> slice:
        """Column range of RRH j's block (j is 1-based)."""
        if not 1 <= j <= self.G:
            raise IndexError(f"RRH index {j} out of range 1..{self.G}")
        return slice((j - 1) * self.M, j * self.M)


def as_complex_matrix(m) -> np.ndarray:
    """Coerce to a C-contiguous 2-D complex128 array, rejecting non-finite entries."""
    a = np.ascontiguousarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={a.ndim}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains non-finite entries")
    return a


def frobenius_norm(m: np.ndarray) -> float:
    """Frobenius norm: sqrt of the sum of squared moduli."""
    m = np.asarray(m)
    return float(np.sqrt((m.real**2 + m.imag**2).sum()))


def hadamard(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Element-wise product of two equally shaped matrices."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"hadamard shape mismatch: {a.shape} vs {b.shape}")
    return a * b


def chunk_extract(x: np.ndarray, layout: ChunkLayout, i: int, j: int | None = None) -> np.ndarray:
    """Copy out user i's N x GM row chunk, or the N x M element chunk (i, j).

    Indices are 1-based.  The returned block is a contiguous copy; writing
    it back over the same slice reconstructs x exactly.
    """
    x = np.asarray(x)
    layout.check_x(x)
    rows = layout.row_slice(i)
    if j is None:
        return np.ascontiguousarray(x[rows, :])
    return np.ascontiguousarray(x[rows, layout.col_slice(j)])


def chunk_norm_map(x: np.ndarray, w: np.ndarray, layout: ChunkLayout):
    """Per-chunk Frobenius norms of the weighted matrix W o X.

    Returns ``(row_norms, elem_norms)`` with shapes (K,) and (K, G), where
    ``row_norms[i-1]`` is ||W_i o X_i||_F and ``elem_norms[i-1, j-1]`` is
    ||W_{i,j} o X_{i,j}||_F.
    """
    layout.check_x(np.asarray(x))
    y = np.ascontiguousarray(hadamard(w, x), dtype=np.complex128)
    row_norms = kernels.row_chunk_norms(y, layout.N)
    elem_norms = kernels.element_chunk_norms(y, layout.N, layout.M)
    return row_norms, elem_norms
