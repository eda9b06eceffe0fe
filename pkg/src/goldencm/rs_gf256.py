"""GF(256) arithmetic and shortened systematic Reed-Solomon codes.

Field: polynomials over F_2 modulo x^8+x^4+x^3+x^2+1 (0x11D), generated by
0x02.  Codes are (n, k) shortenings of the length-255 mother code, encoded
systematically (message symbols appear verbatim, parity appended).  Decoding
is bounded-distance: syndromes, Berlekamp-Massey, Chien search and Forney's
formula; anything beyond floor((n-k)/2) errors either fails (None) or
miscorrects, as usual.
"""

from __future__ import annotations

import numpy as np

PRIMITIVE_POLY = 0x11D
GENERATOR = 0x02
FIELD_ORDER = 256


def _build_tables():
    exp = np.zeros(510, dtype=np.uint8)
    log = np.zeros(256, dtype=np.int32)
    x = 1
    for i in range(255):
        exp[i] = x
        log[x] = i
        x <<= 1
        if x & 0x100:
            x ^= PRIMITIVE_POLY
    exp[255:510] = exp[0:255]
    return exp, log


GF_EXP, GF_LOG = _build_tables()


def gf_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return int(GF_EXP[GF_LOG[a] + GF_LOG[b]])


def gf_div(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by zero in GF(256)")
    if a == 0:
        return 0
    return int(GF_EXP[(GF_LOG[a] - GF_LOG[b]) % 255])


def gf_inv(a: int) -> int:
    return gf_div(1, a)


def gf_pow(a: int, n: int) -> int:
    if a == 0:
        return 0
    return int(GF_EXP[(GF_LOG[a] * n) % 255])


def gf_mul_vec(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise field product of uint8 arrays (broadcasting allowed)."""
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    out = GF_EXP[(GF_LOG[a] + GF_LOG[b]) % 255].astype(np.uint8)
    return np.where((a == 0) | (b == 0), np.uint8(0), out)


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi:
            for j, qj in enumerate(q):
                out[i + j] ^= gf_mul(pi, qj)
    return out


def _poly_eval(p, x):
    # coefficients in descending degree order
    acc = 0
    for c in p:
        acc = gf_mul(acc, x) ^ c
    return acc


class RSCode:
    """(n, k) shortened systematic Reed-Solomon code over GF(256).

    `fcr` is the power of the generator at the first consecutive root of the
    generator polynomial; 1 gives the narrow-sense code.
    """

    def __init__(self, n: int, k: int, fcr: int = 1):
        if not (0 < k < n <= 255):
            raise ValueError(f"invalid RS parameters (n={n}, k={k})")
        self.n = n
        self.k = k
        self.fcr = fcr
        self.num_parity = n - k
        self.d_min = n - k + 1
        self.t = (n - k) // 2
        g = [1]
        for i in range(self.num_parity):
            g = _poly_mul(g, [1, gf_pow(GENERATOR, i + fcr)])
        self.generator_poly = g
        self.parity_matrix = self._build_parity_matrix()

    def __repr__(self):
        return f"RSCode(n={self.n}, k={self.k}, d={self.d_min})"

    def _parity(self, msg):
        # remainder of msg(x) * x^(n-k) by the generator polynomial
        rem = list(msg) + [0] * self.num_parity
        for i in range(self.k):
            coef = rem[i]
            if coef:
                for j in range(1, len(self.generator_poly)):
                    rem[i + j] ^= gf_mul(self.generator_poly[j], coef)
        return rem[self.k :]

    def _build_parity_matrix(self) -> np.ndarray:
        rows = []
        for i in range(self.k):
            unit = [0] * self.k
            unit[i] = 1
            rows.append(self._parity(unit))
        return np.array(rows, dtype=np.uint8)

    def encode(self, msg) -> list:
        """Systematic encoding: the codeword starts with the message itself."""
        msg = list(msg)
        if len(msg) != self.k:
            raise ValueError(f"message length {len(msg)} != k={self.k}")
        return msg + self._parity(msg)

    def encode_bulk(self, msgs: np.ndarray) -> np.ndarray:
        """Encode many messages at once: (N, k) uint8 -> (N, n) uint8."""
        msgs = np.asarray(msgs, dtype=np.uint8)
        parity = np.zeros((msgs.shape[0], self.num_parity), dtype=np.uint8)
        for i in range(self.k):
            parity ^= gf_mul_vec(msgs[:, i : i + 1], self.parity_matrix[i])
        return np.concatenate([msgs, parity], axis=1)

    def parity_mul_tables(self) -> np.ndarray:
        """pmul[i, p, v]: parity-column-p contribution of symbol value v at
        message position i; lets enumeration kernels avoid field arithmetic."""
        v = np.arange(256, dtype=np.uint8)
        out = np.empty((self.k, self.num_parity, 256), dtype=np.uint8)
        for i in range(self.k):
            for p in range(self.num_parity):
                out[i, p] = gf_mul_vec(v, self.parity_matrix[i, p])
        return out

    def syndromes(self, recv) -> list:
        return [
            _poly_eval(recv, gf_pow(GENERATOR, j + self.fcr))
            for j in range(self.num_parity)
        ]

    def decode(self, recv):
        """Bounded-distance decoding; returns the message, or None on failure."""
        recv = list(recv)
        if len(recv) != self.n:
            raise ValueError(f"received length {len(recv)} != n={self.n}")
        synd = self.syndromes(recv)
        if not any(synd):
            return recv[: self.k]
        sigma = self._berlekamp_massey(synd)
        if sigma is None:
            return None
        positions = self._chien_search(sigma)
        if positions is None:
            return None
        corrected = self._forney(recv, synd, sigma, positions)
        if any(self.syndromes(corrected)):
            return None
        return corrected[: self.k]

    def _berlekamp_massey(self, synd):
        # error locator with ascending coefficients, sigma[0] = 1
        sigma = [1]
        prev = [1]
        L = 0
        m = 1
        b = 1
        for step in range(self.num_parity):
            delta = synd[step]
            for i in range(1, L + 1):
                if i < len(sigma):
                    delta ^= gf_mul(sigma[i], synd[step - i])
            if delta == 0:
                m += 1
                continue
            scale = gf_div(delta, b)
            shifted = [0] * m + [gf_mul(scale, c) for c in prev]
            if 2 * L <= step:
                sigma, prev = (
                    [a ^ b2 for a, b2 in _zip_pad(sigma, shifted)],
                    sigma,
                )
                L = step + 1 - L
                b = delta
                m = 1
            else:
                sigma = [a ^ b2 for a, b2 in _zip_pad(sigma, shifted)]
                m += 1
        while sigma and sigma[-1] == 0:
            sigma.pop()
        if len(sigma) - 1 != L or L > self.t:
            return None
        return sigma

    def _chien_search(self, sigma):
        # roots of sigma correspond to error positions; position idx holds the
        # coefficient of x^(n-1-idx)
        positions = []
        for idx in range(self.n):
            power = self.n - 1 - idx
            x = gf_pow(GENERATOR, (-power) % 255)
            acc = 0
            for i, c in enumerate(sigma):
                acc ^= gf_mul(c, gf_pow(x, i))
            if acc == 0:
                positions.append(idx)
        if len(positions) != len(sigma) - 1:
            return None
        return positions

    def _forney(self, recv, synd, sigma, positions):
        # omega = S(x) * sigma(x) mod x^(n-k), ascending coefficients
        omega = [0] * self.num_parity
        for i, s in enumerate(synd):
            if s:
                for j, c in enumerate(sigma):
                    if i + j < self.num_parity:
                        omega[i + j] ^= gf_mul(s, c)
        out = list(recv)
        for idx in positions:
            power = self.n - 1 - idx
            xk = gf_pow(GENERATOR, power)
            xk_inv = gf_inv(xk)
            om = 0
            for i, c in enumerate(omega):
                om ^= gf_mul(c, gf_pow(xk_inv, i))
            dsig = 0
            for i in range(1, len(sigma), 2):
                dsig ^= gf_mul(sigma[i], gf_pow(xk_inv, i - 1))
            if dsig == 0:
                return out
            mag = gf_mul(gf_pow(xk, 1 - self.fcr), gf_div(om, dsig))
            out[idx] ^= mag
        return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))
