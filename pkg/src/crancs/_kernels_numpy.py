"""Pure-numpy implementations of the hot chunk kernels.

Fallback path for :mod:`crancs.kernels`; the numba twins live in
``_kernels_numba``.  Norm accumulation is arranged so that, within this
backend, shrinking a whole matrix as a single chunk reproduces the
per-chunk results bit-for-bit (chunk data is materialized contiguously
before reduction, matching the element order of an extracted chunk).
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def _abs2(y):
    return y.real**2 + y.imag**2


def row_chunk_norms(y, n):
    kn = y.shape[0]
    k = kn // n
    flat = np.ascontiguousarray(_abs2(y)).reshape(k, -1)
    return np.sqrt(flat.sum(axis=1))


def element_chunk_norms(y, n, m):
    kn, gm = y.shape
    k, g = kn // n, gm // m
    # swapaxes + reshape copies into per-chunk contiguous rows
    blocks = np.ascontiguousarray(_abs2(y)).reshape(k, n, g, m).swapaxes(1, 2).reshape(k, g, n * m)
    return np.sqrt(blocks.sum(axis=2))


def _shrink_scales(norms, tau):
    hit = norms > tau
    safe = np.where(hit, norms, 1.0)
    return np.where(hit, 1.0 - tau / safe, 0.0)


def shrink_row_chunks(y, n, tau):
    scales = _shrink_scales(row_chunk_norms(y, n), tau)
    return y * np.repeat(scales, n)[:, None]


def shrink_element_chunks(y, n, m, tau):
    scales = _shrink_scales(element_chunk_norms(y, n, m), tau)
    full = np.repeat(np.repeat(scales, n, axis=0), m, axis=1)
    return y * full


def admm_rhs(w, z, q, lam1, lam2, ahb, beta):
    return beta * (w * (z + q)) + ahb - w * (lam1 + lam2)
