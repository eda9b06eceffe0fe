"""Quotients of the Golden Code by its two-sided ideals of 2-power norm.

Reducing order coordinates mod (1+i) gives 2x2 matrices over F_2 (16 coset
labels, one per BPSK^4 point); reducing mod 2 gives 2x2 matrices over
F_2[i] = {0, 1, i, 1+i} (256 labels, one per 4-QAM^4 point).  Labels are
packed integers: row-major bits for the mod-(1+i) ring, row-major
(re, im)-interleaved bits for the mod-2 ring.  Multiplication is table
driven; the tables are built once at import from the ring definitions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import ALPHA, GaussianInt, OrderElement, order_basis
from .golden import GoldenCodeword, golden_encode

# --- F_2[i] scalars as 2-bit codes: value = re + 2*im, i^2 = -1 = 1 -------


def f2i_mul(x: int, y: int) -> int:
    ar, ai = x & 1, x >> 1
    br, bi = y & 1, y >> 1
    return ((ar & br) ^ (ai & bi)) | ((ar & bi) ^ (ai & br)) << 1


F2I_UNITS = (1, 2)  # 1 and i; 1+i squares to zero


# --- packed-matrix helpers ------------------------------------------------


def _m2f2_entries(m: int):
    return ((m >> k) & 1 for k in range(4))


def _m2f2_mul_scalar(x: int, y: int) -> int:
    a, b, c, d = _m2f2_entries(x)
    e, f, g, h = _m2f2_entries(y)
    return (
        ((a & e) ^ (b & g))
        | (((a & f) ^ (b & h)) << 1)
        | (((c & e) ^ (d & g)) << 2)
        | (((c & f) ^ (d & h)) << 3)
    )


def _m2f2i_entries(v: int):
    return ((v >> (2 * k)) & 3 for k in range(4))


def _m2f2i_mul_scalar(x: int, y: int) -> int:
    a, b, c, d = _m2f2i_entries(x)
    e, f, g, h = _m2f2i_entries(y)
    return (
        (f2i_mul(a, e) ^ f2i_mul(b, g))
        | ((f2i_mul(a, f) ^ f2i_mul(b, h)) << 2)
        | ((f2i_mul(c, e) ^ f2i_mul(d, g)) << 4)
        | ((f2i_mul(c, f) ^ f2i_mul(d, h)) << 6)
    )


def f2i_scale(s: int, v: int) -> int:
    """Multiply every entry of a packed mod-2 matrix by an F_2[i] scalar."""
    out = 0
    for k, entry in enumerate(_m2f2i_entries(v)):
        out |= f2i_mul(s, entry) << (2 * k)
    return out


M2F2_MUL = np.array(
    [[_m2f2_mul_scalar(x, y) for y in range(16)] for x in range(16)], dtype=np.uint8
)
M2F2I_MUL = np.array(
    [[_m2f2i_mul_scalar(x, y) for y in range(256)] for x in range(256)],
    dtype=np.uint8,
)


@dataclass(frozen=True)
class M2F2:
    """2x2 matrix over F_2, packed row-major into 4 bits."""

    bits: int

    def __add__(self, other):
        return M2F2(self.bits ^ other.bits)

    def __mul__(self, other):
        return M2F2(int(M2F2_MUL[self.bits, other.bits]))

    def det(self) -> int:
        m = self.bits
        return ((m & 1) & (m >> 3)) ^ ((m >> 1) & (m >> 2)) & 1

    def is_invertible(self) -> bool:
        return self.det() == 1

    def __bool__(self):
        return self.bits != 0


@dataclass(frozen=True)
class M2F2i:
    """2x2 matrix over F_2[i], packed row-major with (re, im) bit pairs."""

    bits: int

    def __add__(self, other):
        return M2F2i(self.bits ^ other.bits)

    def __mul__(self, other):
        return M2F2i(int(M2F2I_MUL[self.bits, other.bits]))

    def det(self) -> int:
        a, b, c, d = _m2f2i_entries(self.bits)
        return f2i_mul(a, d) ^ f2i_mul(b, c)

    def is_invertible(self) -> bool:
        return self.det() in F2I_UNITS

    def __bool__(self):
        return self.bits != 0


def is_invertible(m) -> bool:
    return m.is_invertible()


# --- images of the order basis {1, theta, j, theta*j} ---------------------

# mod (1+i): 1 -> identity, theta -> (0 1; 1 1), j -> (0 1; 1 0),
# theta*j -> product of the previous two.
PSI_ONE = 0b1001
PSI_THETA = 0b1110
PSI_J = 0b0110
PSI_THETA_J = _m2f2_mul_scalar(PSI_THETA, PSI_J)
_PSI_BASIS = (PSI_ONE, PSI_THETA, PSI_J, PSI_THETA_J)

# mod 2: 1 -> identity, theta -> (1+i 1; i i), j -> (0 1; i 0).
PHI_ONE = 0x41
PHI_THETA = 0b10_10_01_11  # entries (1+i, 1; i, i)
PHI_J = 0b00_10_01_00  # entries (0, 1; i, 0)
PHI_THETA_J = _m2f2i_mul_scalar(PHI_THETA, PHI_J)
_PHI_BASIS = (PHI_ONE, PHI_THETA, PHI_J, PHI_THETA_J)


def _residue_mod_1pi(z: GaussianInt) -> int:
    # Z[i]/(1+i) = F_2 via a + bi -> (a + b) mod 2
    return (z.re + z.im) & 1


def project_mod_1pi(w: OrderElement) -> M2F2:
    """Reduce an order element mod (1+i); a surjective ring homomorphism."""
    out = 0
    for coeff, image in zip(w.coeffs(), _PSI_BASIS):
        if _residue_mod_1pi(coeff):
            out ^= image
    return M2F2(out)


def project_mod_2(w: OrderElement) -> M2F2i:
    """Reduce an order element mod 2; a surjective ring homomorphism."""
    out = 0
    for coeff, image in zip(w.coeffs(), _PHI_BASIS):
        s = (coeff.re & 1) | (coeff.im & 1) << 1
        if s:
            out ^= f2i_scale(s, image)
    return M2F2i(out)


# Images of the ideal basis {alpha, alpha*theta, alpha*j, alpha*theta*j};
# these span each quotient, with coefficients in F_2 resp. F_2[i].
IDEAL_BASIS = tuple(ALPHA * w for w in order_basis())
E_BASIS_1PI = tuple(project_mod_1pi(g).bits for g in IDEAL_BASIS)
E_BASIS_2 = tuple(project_mod_2(g).bits for g in IDEAL_BASIS)


def _build_leader_tables():
    # mod (1+i): label of sum_k b_k e_k, for each of the 16 bit patterns
    to_label_1pi = np.zeros(16, dtype=np.uint8)
    for b in range(16):
        acc = 0
        for k in range(4):
            if (b >> k) & 1:
                acc ^= E_BASIS_1PI[k]
        to_label_1pi[b] = acc
    from_label_1pi = np.zeros(16, dtype=np.uint8)
    from_label_1pi[to_label_1pi] = np.arange(16, dtype=np.uint8)
    assert len(set(to_label_1pi.tolist())) == 16, "ideal basis must span mod (1+i)"

    # mod 2: label of sum_k c_k phi(alpha w_k) with c_k the byte's bit pairs
    to_label_2 = np.zeros(256, dtype=np.uint8)
    for byte in range(256):
        acc = 0
        for k in range(4):
            s = (byte >> (2 * k)) & 3
            if s:
                acc ^= f2i_scale(s, E_BASIS_2[k])
        to_label_2[byte] = acc
    from_label_2 = np.zeros(256, dtype=np.uint8)
    from_label_2[to_label_2] = np.arange(256, dtype=np.uint8)
    assert len(set(to_label_2.tolist())) == 256, "ideal basis must span mod 2"
    return to_label_1pi, from_label_1pi, to_label_2, from_label_2


BITS_TO_LABEL_1PI, LABEL_TO_BITS_1PI, BYTE_TO_LABEL_2, LABEL_TO_BYTE_2 = (
    _build_leader_tables()
)


@dataclass(frozen=True)
class CosetLeader:
    """A coset label together with its canonical small-coordinate lift."""

    bits: int  # basis coordinates: 4 bits mod (1+i), 8 bits mod 2
    lift: GoldenCodeword


def coset_leader_1pi(m: M2F2) -> CosetLeader:
    """Canonical lift of a mod-(1+i) label, with BPSK coordinates {0,1}^4."""
    b = int(LABEL_TO_BITS_1PI[m.bits])
    coords = tuple(GaussianInt((b >> k) & 1, 0) for k in range(4))
    return CosetLeader(b, golden_encode(*coords))


def coset_leader_2(v: M2F2i) -> CosetLeader:
    """Canonical lift of a mod-2 label, with 4-QAM coordinates ({0,1}+{0,1}i)^4."""
    byte = int(LABEL_TO_BYTE_2[v.bits])
    return CosetLeader(byte, golden_encode(*byte_coords(byte)))


def byte_coords(byte: int):
    """The four Z[i] symbols encoded by a byte's (re, im) bit pairs."""
    return tuple(
        GaussianInt((byte >> (2 * k)) & 1, (byte >> (2 * k + 1)) & 1)
        for k in range(4)
    )


def byte_map(byte: int) -> M2F2i:
    """The frozen F_2-linear identification of bytes with mod-2 labels."""
    return M2F2i(int(BYTE_TO_LABEL_2[byte]))


def byte_unmap(v: M2F2i) -> int:
    return int(LABEL_TO_BYTE_2[v.bits])


# --- the label permutation used by the twisted repetition scheme ----------

# Additive bijection on the ideal basis: e1 -> e1+e2+e4, e2 -> e1+e2+e3,
# e3 -> e1+e3+e4, e4 -> e2+e3+e4.  All four basis labels land on
# non-invertible labels, which lifts the worst-case mixed determinant terms
# of the twisted repetition code; the exact assignment is frozen because the
# code's determinant distribution depends on it.
_HBAR_ON_BASIS = (
    E_BASIS_1PI[0] ^ E_BASIS_1PI[1] ^ E_BASIS_1PI[3],
    E_BASIS_1PI[0] ^ E_BASIS_1PI[1] ^ E_BASIS_1PI[2],
    E_BASIS_1PI[0] ^ E_BASIS_1PI[2] ^ E_BASIS_1PI[3],
    E_BASIS_1PI[1] ^ E_BASIS_1PI[2] ^ E_BASIS_1PI[3],
)


def _build_hbar_table():
    table = np.zeros(16, dtype=np.uint8)
    for label in range(16):
        b = int(LABEL_TO_BITS_1PI[label])
        acc = 0
        for k in range(4):
            if (b >> k) & 1:
                acc ^= _HBAR_ON_BASIS[k]
        table[label] = acc
    return table


HBAR_TABLE = _build_hbar_table()


def hbar(m: M2F2) -> M2F2:
    """Additive bijection of the mod-(1+i) ring swapping invertibility classes."""
    return M2F2(int(HBAR_TABLE[m.bits]))
