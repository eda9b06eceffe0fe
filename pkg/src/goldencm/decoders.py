"""Receiver side: distance tables, the stack sequential decoder, hard
(suboptimal) decoding, and the two-phase 16-QAM decoder.

The stack decoder is a best-first search over Reed-Solomon message prefixes.
Each tree level consumes one received component; partial costs are summed
per-component distances, and a path is discarded as soon as its cost plus
the sum of remaining per-component minima reaches the bound T (strict
rejection at >= T).  T always comes from the distance of an actual
codeword, so an emptied stack means that codeword was already optimal and
the caller falls back to it.  Tie-breaks are resolved by lexicographic path
order, which keeps decisions identical across runs and backends.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from . import backend
from .quotient import HBAR_TABLE, LABEL_TO_BITS_1PI
from .rs_gf256 import RSCode
from .schemes import byte_candidates, qam16_parts


@dataclass(frozen=True)
class DistanceTable:
    """Per-component squared distances to every candidate, with sorted index."""

    d: np.ndarray  # (n, M) float64
    order: np.ndarray  # (n, M) argsort of each row, ties by ascending index

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def tail_minima(self) -> np.ndarray:
        """tail[s] = sum of row minima for components s..n-1 (tail[n] = 0)."""
        mins = self.d[np.arange(self.n), self.order[:, 0]]
        out = np.zeros(self.n + 1)
        out[: self.n] = mins[::-1].cumsum()[::-1]
        return out

    def codeword_distance(self, symbols) -> float:
        acc = 0.0
        for t, s in enumerate(symbols):
            acc += self.d[t, s]
        return acc


def build_distance_table(Y, H, cands) -> DistanceTable:
    d = backend.distance_table(H, cands, Y)
    order = np.argsort(d, axis=1, kind="stable")
    return DistanceTable(d, order)


def stack_decode(table: DistanceTable, code: RSCode, T: float = np.inf):
    """Best-first search for the RS codeword of minimum summed distance.

    Returns the k message symbols, or None if every path hit the bound T
    (possible only when some codeword achieves exactly T).
    """
    d = table.d
    order = table.order
    n, k = code.n, code.k
    if table.n != n:
        raise ValueError("distance table length != code length")
    tail = table.tail_minima()
    heap = []

    def push_children(path, dist, depth):
        row = d[depth]
        bound = tail[depth + 1]
        for r in order[depth]:
            nd = dist + row[r]
            if nd + bound >= T:
                break
            heapq.heappush(heap, (nd, path + (int(r),)))

    push_children((), 0.0, 0)
    while heap:
        dist, path = heapq.heappop(heap)
        s = len(path)
        if s == n:
            return list(path[:k])
        if s < k:
            push_children(path, dist, s)
        else:
            cw = code.encode(list(path))
            nd = dist
            for t in range(k, n):
                nd += d[t, cw[t]]
            if nd < T:
                heapq.heappush(heap, (nd, tuple(cw)))
    return None


def hard_decision_word(table: DistanceTable) -> list:
    return [int(r) for r in table.order[:, 0]]


def _hard_decode(table: DistanceTable, code: RSCode) -> list:
    """Per-component nearest symbols, then RS correction; systematic symbols
    of the hard word when RS decoding fails."""
    hard = hard_decision_word(table)
    msg = code.decode(hard)
    return msg if msg is not None else hard[: code.k]


def suboptimal_decode(Y, H, code: RSCode) -> list:
    """Component-wise nearest-codeword demodulation plus RS decoding."""
    table = build_distance_table(Y, H, byte_candidates().centered)
    return _hard_decode(table, code)


def _ml_from_table(table: DistanceTable, code: RSCode):
    """Stack search with T seeded by the hard-decision and closest-choice
    codewords; returns (message, fallback_used)."""
    candidates = [_hard_decode(table, code), hard_decision_word(table)[: code.k]]
    best_msg = None
    T = np.inf
    for msg in candidates:
        dist = table.codeword_distance(code.encode(msg))
        if dist < T:
            T = dist
            best_msg = msg
    result = stack_decode(table, code, T)
    if result is None:
        return best_msg, True
    return result, False


def grs_ml_decode(Y, H, code: RSCode) -> list:
    """Exact ML decoding of the 4-QAM Golden-RS scheme (stack search)."""
    table = build_distance_table(Y, H, byte_candidates().centered)
    msg, _ = _ml_from_table(table, code)
    return msg


def exhaustive_ml_decode(Y, H, code: RSCode) -> list:
    """Brute-force ML over all 256^k codewords; the stack decoder's oracle."""
    table = build_distance_table(Y, H, byte_candidates().centered)
    idx, _ = backend.grs_exhaustive_ml(table.d, code.parity_mul_tables(), code.k)
    return backend.message_index_to_symbols(idx, code.k)


@dataclass(frozen=True)
class Qam16Decision:
    message: list  # k RS message bytes
    uncoded: list  # n in-coset bytes
    phase1_products: int  # H-by-matrix products spent in phase 1


def ml16_decode(Y, H, code: RSCode) -> Qam16Decision:
    """Two-phase exact ML for the 16-QAM scheme.

    Phase 1 finds, per component and per coset, the nearest in-coset point;
    H multiplies the 256 coset bases and the 256 offsets once each (512
    products) instead of all 65536 combinations.  Phase 2 is the stack
    search over RS codewords on the per-coset minima.
    """
    parts = qam16_parts()
    D, Tidx = backend.coset_phase1(H, parts.base, parts.offsets, Y)
    table = DistanceTable(D, np.argsort(D, axis=1, kind="stable"))
    msg, _ = _ml_from_table(table, code)
    cw = code.encode(msg)
    uncoded = [int(Tidx[i, cw[i]]) for i in range(code.n)]
    return Qam16Decision(msg, uncoded, parts.base.shape[0] + parts.offsets.shape[0])


def ml_uncoded_decode(Y, H, cands) -> list:
    """Per-position exhaustive argmin; exact ML since positions are independent."""
    table = build_distance_table(Y, H, cands)
    return hard_decision_word(table)


def ml_repetition_decode(Y, H, variant: str = "identity"):
    """Joint ML over the 4096 repetition codewords via per-coset minima."""
    cands = byte_candidates()
    table = build_distance_table(Y, H, cands.centered)
    d0, d1 = table.d[0], table.d[1]
    members = cands.coset_members
    best = (np.inf,)
    for label in range(16):
        target = label if variant == "identity" else int(HBAR_TABLE[label])
        g0 = members[label]
        g1 = members[target]
        j0 = g0[int(np.argmin(d0[g0]))]
        j1 = g1[int(np.argmin(d1[g1]))]
        entry = (float(d0[j0] + d1[j1]), label, int(j0), int(j1))
        if entry < best:
            best = entry
    _, label, j0, j1 = best
    return label, j0, j1


def repetition_bits_from_decision(label: int, j0: int, j1: int) -> list:
    """Recover the 12 transmitted bits from a repetition ML decision."""
    bits = [(int(LABEL_TO_BITS_1PI[label]) >> i) & 1 for i in range(4)]
    for byte in (j0, j1):
        bits.extend((byte >> (2 * kk + 1)) & 1 for kk in range(4))
    return bits
