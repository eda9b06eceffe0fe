"""Pure-numpy implementations of the hot kernels.

Reference semantics for the numba backend and the fallback when numba is
unavailable (or disabled via GOLDENCM_BACKEND=numpy).  Enumeration kernels
work in chunks to bound memory.

Message indexing is big-endian throughout: index m encodes symbols
(s_0, ..., s_{k-1}) with s_0 in the highest byte, so ascending index order
is ascending lexicographic order of symbol tuples.
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def distance_table(H: np.ndarray, cands: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """d[i, j] = squared Frobenius distance between H @ cands[j] and Y[i]."""
    HX = H[None, :, :] @ cands
    diff = HX[None, :, :, :] - Y[:, None, :, :]
    return np.sum(np.abs(diff) ** 2, axis=(2, 3))


def coset_phase1(H, base, offsets, Y):
    """Best in-coset point per (component, coset).

    base[j] is the coset's centered base codeword, offsets[t] the in-coset
    steps; H multiplies each of the two families once (len(base) +
    len(offsets) matrix products in total).  Returns the (L, 256) distance
    matrix of the per-coset minima and the argmin index table.
    """
    HW = H[None, :, :] @ base
    HZ = H[None, :, :] @ offsets
    L = Y.shape[0]
    D = np.empty((L, base.shape[0]), dtype=np.float64)
    T = np.empty((L, base.shape[0]), dtype=np.int64)
    for i in range(L):
        diff = (Y[i] - HW)[:, None, :, :] - HZ[None, :, :, :]
        dist = np.sum(np.abs(diff) ** 2, axis=(2, 3))
        T[i] = np.argmin(dist, axis=1)
        D[i] = dist[np.arange(base.shape[0]), T[i]]
    return D, T


def _chunked_codewords(pmul, k, n):
    """Yield (start_index, (inner_size, n) uint8 symbol columns) chunks."""
    lo = min(k, 2)
    inner_size = 256**lo
    grids = np.meshgrid(*[np.arange(256, dtype=np.uint8)] * lo, indexing="ij")
    inner = [g.ravel() for g in grids]
    for hi in range(256 ** (k - lo)):
        msg = []
        for i in range(k - lo):
            msg.append(
                np.full(inner_size, (hi >> (8 * (k - lo - 1 - i))) & 0xFF, dtype=np.uint8)
            )
        msg.extend(inner)
        syms = list(msg)
        for p in range(n - k):
            acc = np.zeros(inner_size, dtype=np.uint8)
            for i in range(k):
                acc ^= pmul[i, p][msg[i]]
            syms.append(acc)
        yield hi * inner_size, syms


def grs_det_histogram(pmul, dets2, cross, k, n, max_det):
    """Histogram of block determinants (delta units) over all 256^k codewords."""
    hist = np.zeros(max_det + 1, dtype=np.int64)
    for _, syms in _chunked_codewords(pmul, k, n):
        d = np.zeros(syms[0].shape[0], dtype=np.int64)
        for i in range(n):
            d += dets2[syms[i]]
            for j in range(i):
                d += cross[syms[i], syms[j]]
        hist += np.bincount(d, minlength=max_det + 1)
    return hist


def grs_exhaustive_ml(dist, pmul, k):
    """(index, distance) of the message minimizing the summed component distance."""
    n = dist.shape[0]
    best_val = np.inf
    best_idx = -1
    for start, syms in _chunked_codewords(pmul, k, n):
        d = np.zeros(syms[0].shape[0], dtype=np.float64)
        for i in range(n):
            d += dist[i][syms[i]]
        j = int(np.argmin(d))
        if d[j] < best_val:
            best_val = float(d[j])
            best_idx = start + j
    return best_idx, best_val
