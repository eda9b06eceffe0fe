"""Numba-compiled hot kernels; same contracts as the numpy versions.

Loops are written flat (no object mode, no allocation inside the inner
loop); see _kernels_numpy for the reference semantics and the big-endian
message indexing convention.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _distance_table(H, cands, Y):
    M = cands.shape[0]
    L = Y.shape[0]
    HX = np.empty((M, 2, 2), dtype=np.complex128)
    for j in range(M):
        for r in range(2):
            for c in range(2):
                HX[j, r, c] = H[r, 0] * cands[j, 0, c] + H[r, 1] * cands[j, 1, c]
    out = np.empty((L, M), dtype=np.float64)
    for i in range(L):
        for j in range(M):
            acc = 0.0
            for r in range(2):
                for c in range(2):
                    z = HX[j, r, c] - Y[i, r, c]
                    acc += z.real * z.real + z.imag * z.imag
            out[i, j] = acc
    return out


def distance_table(H, cands, Y):
    return _distance_table(
        np.ascontiguousarray(H),
        np.ascontiguousarray(cands),
        np.ascontiguousarray(Y),
    )


@njit(cache=True)
def _coset_phase1(H, base, offsets, Y):
    nb = base.shape[0]
    nt = offsets.shape[0]
    L = Y.shape[0]
    HW = np.empty((nb, 2, 2), dtype=np.complex128)
    for j in range(nb):
        for r in range(2):
            for c in range(2):
                HW[j, r, c] = H[r, 0] * base[j, 0, c] + H[r, 1] * base[j, 1, c]
    HZ = np.empty((nt, 2, 2), dtype=np.complex128)
    for t in range(nt):
        for r in range(2):
            for c in range(2):
                HZ[t, r, c] = H[r, 0] * offsets[t, 0, c] + H[r, 1] * offsets[t, 1, c]
    D = np.empty((L, nb), dtype=np.float64)
    T = np.empty((L, nb), dtype=np.int64)
    for i in range(L):
        for j in range(nb):
            best = np.inf
            arg = 0
            for t in range(nt):
                acc = 0.0
                for r in range(2):
                    for c in range(2):
                        z = Y[i, r, c] - HW[j, r, c] - HZ[t, r, c]
                        acc += z.real * z.real + z.imag * z.imag
                if acc < best:
                    best = acc
                    arg = t
            D[i, j] = best
            T[i, j] = arg
    return D, T


def coset_phase1(H, base, offsets, Y):
    return _coset_phase1(
        np.ascontiguousarray(H),
        np.ascontiguousarray(base),
        np.ascontiguousarray(offsets),
        np.ascontiguousarray(Y),
    )


@njit(cache=True)
def _grs_det_histogram(pmul, dets2, cross, k, n, max_det):
    hist = np.zeros(max_det + 1, dtype=np.int64)
    v = np.zeros(n, dtype=np.int64)
    total = 256**k
    for msg in range(total):
        m = msg
        for i in range(k - 1, -1, -1):
            v[i] = m & 0xFF
            m >>= 8
        for p in range(n - k):
            acc = 0
            for i in range(k):
                acc ^= pmul[i, p, v[i]]
            v[k + p] = acc
        d = 0
        for i in range(n):
            d += dets2[v[i]]
            for j in range(i):
                d += cross[v[i], v[j]]
        hist[d] += 1
    return hist


def grs_det_histogram(pmul, dets2, cross, k, n, max_det):
    return _grs_det_histogram(
        np.ascontiguousarray(pmul),
        np.ascontiguousarray(dets2),
        np.ascontiguousarray(cross),
        k,
        n,
        max_det,
    )


@njit(cache=True)
def _grs_exhaustive_ml(dist, pmul, k):
    n = dist.shape[0]
    v = np.zeros(n, dtype=np.int64)
    best_val = np.inf
    best_idx = -1
    total = 256**k
    for msg in range(total):
        m = msg
        for i in range(k - 1, -1, -1):
            v[i] = m & 0xFF
            m >>= 8
        for p in range(n - k):
            acc = 0
            for i in range(k):
                acc ^= pmul[i, p, v[i]]
            v[k + p] = acc
        d = 0.0
        for i in range(n):
            d += dist[i, v[i]]
        if d < best_val:
            best_val = d
            best_idx = msg
    return best_idx, best_val


def grs_exhaustive_ml(dist, pmul, k):
    return _grs_exhaustive_ml(
        np.ascontiguousarray(dist), np.ascontiguousarray(pmul), k
    )
