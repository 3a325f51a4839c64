"""Backend selection for the hot chunk kernels.

The numba-compiled path is the default.  Set ``CRANCS_NUMBA=0`` before
import to force the pure-numpy fallback; the fallback is also used
automatically (with a warning) when numba is not importable.  Both
backends stay importable side by side for parity tests and for
``benchmarks/bench_kernels.py``.
"""

from __future__ import annotations

import os
import warnings

from . import _kernels_numpy

_FALSE = {"0", "false", "off", "no"}


def _want_numba() -> bool:
    return os.environ.get("CRANCS_NUMBA", "1").strip().lower() not in _FALSE


def _load_numba_backend():
    try:
        from . import _kernels_numba
        return _kernels_numba
    except ImportError:
        return None


if _want_numba():
    _backend = _load_numba_backend()
    if _backend is None:
        warnings.warn("numba is not available; falling back to the pure-numpy kernels")
        _backend = _kernels_numpy
else:
    _backend = _kernels_numpy

BACKEND_NAME = _backend.NAME

row_chunk_norms = _backend.row_chunk_norms
element_chunk_norms = _backend.element_chunk_norms
shrink_row_chunks = _backend.shrink_row_chunks
shrink_element_chunks = _backend.shrink_element_chunks
admm_rhs = _backend.admm_rhs


def available_backends() -> dict:
    """Importable backend modules keyed by name (for tests and benchmarks)."""
    out = {"numpy": _kernels_numpy}
    nb = _load_numba_backend()
    if nb is not None:
        out["numba"] = nb
    return out
