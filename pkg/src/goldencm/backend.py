"""Kernel backend selection.

Hot numeric loops (distance tables, codebook enumeration) have two
implementations with identical contracts: numba-compiled and pure numpy.
`GOLDENCM_BACKEND=numpy` or `=numba` forces one; the default tries numba
and silently falls back to numpy when it is not importable.
"""

from __future__ import annotations

import os

_requested = os.environ.get("GOLDENCM_BACKEND", "auto").lower()

if _requested in ("auto", "numba"):
    try:
        from . import _kernels_numba as _impl
    except ImportError:
        if _requested == "numba":
            raise
        from . import _kernels_numpy as _impl
elif _requested == "numpy":
    from . import _kernels_numpy as _impl
else:
    raise ValueError(
        f"GOLDENCM_BACKEND={_requested!r}: expected 'numba', 'numpy' or 'auto'"
    )

BACKEND_NAME = _impl.NAME

distance_table = _impl.distance_table
coset_phase1 = _impl.coset_phase1
grs_det_histogram = _impl.grs_det_histogram
grs_exhaustive_ml = _impl.grs_exhaustive_ml


def message_index_to_symbols(index: int, k: int) -> list:
    """Big-endian byte digits of a message index (symbol 0 in the top byte)."""
    out = [0] * k
    for i in range(k - 1, -1, -1):
        out[i] = index & 0xFF
        index >>= 8
    return out


def symbols_to_message_index(symbols) -> int:
    index = 0
    for s in symbols:
        index = (index << 8) | int(s)
    return index
