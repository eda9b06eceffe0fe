"""Transmit-side schemes: uncoded references, repetition coset codes, and the
Golden-RS pipelines at 4-QAM and 16-QAM.

Information symbols are carved from Z[i] as {0..M-1} + {0..M-1}i and
centered by the constellation centroid only at modulation time; all
algebraic maps (coset labels, byte identification, determinant tables) act
on the raw lattice coordinates.  A byte indexes a 4-QAM coordinate vector
through its (re, im) bit pairs, so RS symbols, quotient-ring labels and
candidate codewords share one 256-entry table.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .algebra import GaussianInt, det_sq_table, pair_interference_table
from .golden import GoldenBlock, GoldenCodeword, encode_coords_array, golden_encode
from .quotient import (
    BITS_TO_LABEL_1PI,
    HBAR_TABLE,
    LABEL_TO_BITS_1PI,
    byte_coords,
)
from .rs_gf256 import RSCode


@dataclass(frozen=True)
class Constellation:
    """QAM/BPSK points carved from Z[i], centered by translation at modulation."""

    name: str
    points: tuple
    bits: int

    @property
    def centroid(self) -> complex:
        return sum(self.points) / len(self.points)

    @property
    def energy(self) -> float:
        """Mean squared magnitude after centering (a finite, exact average).

        Computed as re^2 + im^2 on dyadic values, so the result is exact."""
        c = self.centroid
        total = sum((p - c).real ** 2 + (p - c).imag ** 2 for p in self.points)
        return float(total / len(self.points))


BPSK = Constellation("bpsk", (0.0, 1.0), 1)
QAM4 = Constellation("4qam", (0.0, 1.0, 1j, 1 + 1j), 2)
QAM16 = Constellation(
    "16qam", tuple(complex(re, im) for im in range(4) for re in range(4)), 4
)

# Per-symbol constellations (a, b, c, d) of the uncoded reference schemes.
UNCODED_MIX = {
    "uncoded_bpsk": (BPSK, BPSK, BPSK, BPSK),  # 2 bpcu
    "uncoded_bpsk_mix": (QAM4, BPSK, QAM4, BPSK),  # 3 bpcu
    "uncoded_4qam": (QAM4, QAM4, QAM4, QAM4),  # 4 bpcu
    "uncoded_6bpcu": (QAM16, QAM4, QAM16, QAM4),  # 6 bpcu
}

SCHEME_NAMES = (
    "uncoded_bpsk",
    "uncoded_bpsk_mix",
    "uncoded_4qam",
    "uncoded_6bpcu",
    "repetition_id",
    "repetition_hbar",
    "grs_4qam",
    "grs_16qam",
)


@dataclass(frozen=True)
class SchemeConfig:
    scheme: str
    rs: RSCode | None
    L: int
    bits_per_block: int
    spectral_efficiency: float
    es: float  # average energy per information symbol, after centering


def make_config(scheme: str, n: int | None = None, k: int | None = None,
                L: int | None = None) -> SchemeConfig:
    """Build a scheme configuration; (n, k) select the RS code where used."""
    if scheme in ("repetition_id", "repetition_hbar"):
        return SchemeConfig(scheme, None, 2, 12, 3.0, QAM4.energy)
    if scheme == "grs_4qam":
        code = RSCode(n, k)
        return SchemeConfig(scheme, code, n, 8 * k, 4.0 * k / n, QAM4.energy)
    if scheme == "grs_16qam":
        code = RSCode(n, k)
        return SchemeConfig(scheme, code, n, 8 * (k + n), 4.0 * (k + n) / n, QAM16.energy)
    if scheme in UNCODED_MIX:
        mix = UNCODED_MIX[scheme]
        bits = sum(c.bits for c in mix)
        length = L if L is not None else 1
        es = sum(c.energy for c in mix) / 4.0
        return SchemeConfig(scheme, None, length, bits * length, bits / 2.0, es)
    raise ValueError(f"unknown scheme {scheme!r}")


# --- candidate tables ------------------------------------------------------


@dataclass(frozen=True)
class ByteCandidates:
    """The 256 4-QAM Golden codewords, indexed by byte.

    coords are the raw lattice coordinates; `centered` subtracts the 4-QAM
    centroid codeword.  dets2/cross are the exact integer determinant tables
    (block determinant in units of delta = 1/5).
    """

    coords: np.ndarray  # (256, 4) complex
    raw: np.ndarray  # (256, 2, 2) complex
    centered: np.ndarray  # (256, 2, 2) complex
    labels_1pi: np.ndarray  # (256,) uint8, coset label mod (1+i)
    coset_members: np.ndarray  # (16, 16) byte indices per label
    dets2: np.ndarray  # (256,) int64
    cross: np.ndarray  # (256, 256) int64


def _coords_of_byte(byte: int) -> np.ndarray:
    return np.array([g.to_complex() for g in byte_coords(byte)], dtype=np.complex128)


@functools.lru_cache(maxsize=1)
def byte_candidates() -> ByteCandidates:
    coords = np.stack([_coords_of_byte(b) for b in range(256)])
    raw = encode_coords_array(coords)
    offset = encode_coords_array(np.full((4,), QAM4.centroid, dtype=np.complex128))
    residues = ((coords.real.astype(np.int64) + coords.imag.astype(np.int64)) & 1)
    bits = (residues * (1 << np.arange(4))).sum(axis=1)
    labels = BITS_TO_LABEL_1PI[bits]
    members = np.stack([np.where(labels == m)[0] for m in range(16)]).astype(np.int64)
    return ByteCandidates(
        coords=coords,
        raw=raw,
        centered=raw - offset,
        labels_1pi=labels,
        coset_members=members,
        dets2=det_sq_table(coords),
        cross=pair_interference_table(coords),
    )


@dataclass(frozen=True)
class UncodedCandidates:
    coords: np.ndarray  # (M, 4) complex
    centered: np.ndarray  # (M, 2, 2) complex
    bits: int  # per codeword


@functools.lru_cache(maxsize=None)
def uncoded_candidates(scheme: str) -> UncodedCandidates:
    mix = UNCODED_MIX[scheme]
    sizes = [len(c.points) for c in mix]
    total = int(np.prod(sizes))
    coords = np.empty((total, 4), dtype=np.complex128)
    for idx in range(total):
        rem = idx
        for s in range(4):
            coords[idx, s] = mix[s].points[rem % sizes[s]]
            rem //= sizes[s]
    offset_coords = np.array([c.centroid for c in mix], dtype=np.complex128)
    centered = encode_coords_array(coords) - encode_coords_array(offset_coords)
    return UncodedCandidates(coords, centered, sum(c.bits for c in mix))


@dataclass(frozen=True)
class Qam16Parts:
    """Centered coset base codewords and in-coset offset codewords."""

    base: np.ndarray  # (256, 2, 2): byte j -> centered codeword of coords r_j
    offsets: np.ndarray  # (256, 2, 2): byte t -> 2 * codeword of coords s_t


@functools.lru_cache(maxsize=1)
def qam16_parts() -> Qam16Parts:
    cands = byte_candidates()
    offset16 = encode_coords_array(np.full((4,), QAM16.centroid, dtype=np.complex128))
    return Qam16Parts(base=cands.raw - offset16, offsets=2.0 * cands.raw)


# --- bit helpers -----------------------------------------------------------


def _check_bits(bits, count):
    bits = list(bits)
    if len(bits) != count or any(b not in (0, 1) for b in bits):
        raise ValueError(f"expected {count} bits")
    return bits


def _nibble(bits) -> int:
    return sum(b << i for i, b in enumerate(bits))


# Within a mod-(1+i) coordinate residue class, the two 4-QAM points:
# residue 0 -> {0, 1+i}, residue 1 -> {1, i}.
_QAM4_BY_RESIDUE = ((0.0, 1 + 1j), (1.0, 1j))


def _coset_byte(residue_bits: int, select_bits: int) -> int:
    """Byte index of the 4-QAM word with given coordinate residues/selectors."""
    byte = 0
    for kk in range(4):
        z = _QAM4_BY_RESIDUE[(residue_bits >> kk) & 1][(select_bits >> kk) & 1]
        byte |= (int(z.real) & 1) << (2 * kk)
        byte |= (int(z.imag) & 1) << (2 * kk + 1)
    return byte


@functools.lru_cache(maxsize=1)
def repetition_point_table() -> np.ndarray:
    """byte index of the 4-QAM point for (residue nibble, selector nibble)."""
    table = np.zeros((16, 16), dtype=np.int64)
    for r in range(16):
        for s in range(16):
            table[r, s] = _coset_byte(r, s)
    return table


def _word_from_byte(byte: int) -> GoldenCodeword:
    return golden_encode(*byte_coords(byte))


# --- encoders --------------------------------------------------------------


def repetition_codeword_bytes(bits, variant: str):
    """Map 12 input bits to the byte pair (first word, second word)."""
    bits = _check_bits(bits, 12)
    label = int(BITS_TO_LABEL_1PI[_nibble(bits[0:4])])
    if variant == "identity":
        label2 = label
    elif variant == "hbar":
        label2 = int(HBAR_TABLE[label])
    else:
        raise ValueError(f"unknown repetition variant {variant!r}")
    table = repetition_point_table()
    r1 = int(LABEL_TO_BITS_1PI[label])
    r2 = int(LABEL_TO_BITS_1PI[label2])
    return int(table[r1, _nibble(bits[4:8])]), int(table[r2, _nibble(bits[8:12])])


def encode_repetition(bits, variant: str = "identity") -> GoldenBlock:
    """Length-2 coset block: both words carry the same mod-(1+i) label, the
    second one through the fixed label bijection for the 'hbar' variant."""
    b1, b2 = repetition_codeword_bytes(bits, variant)
    return GoldenBlock((_word_from_byte(b1), _word_from_byte(b2)))


def encode_grs4(msg_bytes, code: RSCode) -> GoldenBlock:
    """RS codeword bytes to 4-QAM Golden codewords, one lattice point per
    coset of 2G."""
    cw = code.encode(msg_bytes)
    return GoldenBlock(tuple(_word_from_byte(v) for v in cw))


def grs16_coords(rs_byte: int, uncoded_byte: int) -> tuple:
    """16-QAM coordinates: the RS byte picks the coset of 2Z[i] per symbol,
    the uncoded byte the point inside it (non-Gray, coset-first labeling)."""
    out = []
    for r, s in zip(byte_coords(rs_byte), byte_coords(uncoded_byte)):
        out.append(GaussianInt(r.re + 2 * s.re, r.im + 2 * s.im))
    return tuple(out)


def encode_grs16(msg_bytes, uncoded_bytes, code: RSCode) -> GoldenBlock:
    cw = code.encode(msg_bytes)
    uncoded_bytes = list(uncoded_bytes)
    if len(uncoded_bytes) != code.n:
        raise ValueError(f"expected {code.n} uncoded bytes")
    words = tuple(
        golden_encode(*grs16_coords(v, u)) for v, u in zip(cw, uncoded_bytes)
    )
    return GoldenBlock(words)


def encode_uncoded(bits, config: SchemeConfig) -> GoldenBlock:
    """Independent Golden codewords; the bit layout is per-symbol, least
    significant bit first, symbols in coordinate order a, b, c, d."""
    mix = UNCODED_MIX[config.scheme]
    per_word = sum(c.bits for c in mix)
    bits = _check_bits(bits, per_word * config.L)
    words = []
    for w in range(config.L):
        chunk = bits[w * per_word : (w + 1) * per_word]
        coords = []
        pos = 0
        for c in mix:
            idx = _nibble(chunk[pos : pos + c.bits])
            pos += c.bits
            z = c.points[idx]
            coords.append(GaussianInt(int(z.real), int(z.imag)))
        words.append(golden_encode(*coords))
    return GoldenBlock(tuple(words))


def uncoded_indices_to_bits(indices, scheme: str) -> list:
    """Inverse of the per-word candidate indexing used by uncoded_candidates."""
    mix = UNCODED_MIX[scheme]
    bits = []
    for idx in indices:
        rem = int(idx)
        for c in mix:
            sub = rem % len(c.points)
            rem //= len(c.points)
            bits.extend((sub >> i) & 1 for i in range(c.bits))
    return bits
