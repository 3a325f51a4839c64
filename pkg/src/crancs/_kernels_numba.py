"""Numba-compiled chunk kernels: the default hot path of :mod:`crancs.kernels`.

Single-pass loops over row chunks (n rows x all columns) and element
chunks (n x m blocks).  Accumulation is naive row-major within each
chunk, so a whole matrix shrunk as one chunk matches the per-chunk
results bit-for-bit.  No prange: results must not depend on thread
count.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"

_JIT = dict(cache=True, nogil=True, fastmath=False)


@njit(**_JIT)
def row_chunk_norms(y, n):
    kn, gm = y.shape
    k = kn // n
    out = np.empty(k, dtype=np.float64)
    for i in range(k):
        s = 0.0
        for r in range(i * n, (i + 1) * n):
            for c in range(gm):
                v = y[r, c]
                s += v.real * v.real + v.imag * v.imag
        out[i] = np.sqrt(s)
    return out


@njit(**_JIT)
def element_chunk_norms(y, n, m):
    kn, gm = y.shape
    k = kn // n
    g = gm // m
    out = np.empty((k, g), dtype=np.float64)
    for i in range(k):
        for j in range(g):
            s = 0.0
            for r in range(i * n, (i + 1) * n):
                for c in range(j * m, (j + 1) * m):
                    v = y[r, c]
                    s += v.real * v.real + v.imag * v.imag
            out[i, j] = np.sqrt(s)
    return out


@njit(**_JIT)
def shrink_row_chunks(y, n, tau):
    kn, gm = y.shape
    k = kn // n
    out = np.zeros((kn, gm), dtype=np.complex128)
    for i in range(k):
        s = 0.0
        for r in range(i * n, (i + 1) * n):
            for c in range(gm):
                v = y[r, c]
                s += v.real * v.real + v.imag * v.imag
        norm = np.sqrt(s)
        if norm > tau:
            scale = 1.0 - tau / norm
            for r in range(i * n, (i + 1) * n):
                for c in range(gm):
                    out[r, c] = y[r, c] * scale
    return out


@njit(**_JIT)
def shrink_element_chunks(y, n, m, tau):
    kn, gm = y.shape
    k = kn // n
    g = gm // m
    out = np.zeros((kn, gm), dtype=np.complex128)
    for i in range(k):
        for j in range(g):
            s = 0.0
            for r in range(i * n, (i + 1) * n):
                for c in range(j * m, (j + 1) * m):
                    v = y[r, c]
                    s += v.real * v.real + v.imag * v.imag
            norm = np.sqrt(s)
            if norm > tau:
                scale = 1.0 - tau / norm
                for r in range(i * n, (i + 1) * n):
                    for c in range(j * m, (j + 1) * m):
                        out[r, c] = y[r, c] * scale
    return out


@njit(**_JIT)
def admm_rhs(w, z, q, lam1, lam2, ahb, beta):
    kn, gm = w.shape
    out = np.empty((kn, gm), dtype=np.complex128)
    for r in range(kn):
        for c in range(gm):
            out[r, c] = beta * (w[r, c] * (z[r, c] + q[r, c])) + ahb[r, c] - w[r, c] * (lam1[r, c] + lam2[r, c])
    return out
