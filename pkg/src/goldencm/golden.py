"""The Golden Code: full-rate 2x2 space-time codewords from four Z[i] symbols.

A codeword is (1/sqrt5) * A * W where W = (a + b*theta) + (c + d*theta)*j
ranges over the quaternion order and A embeds the scaling element alpha.
Every nonzero codeword has |det|^2 >= 1/5, and the coordinate map is an
isometry onto Z[i]^4 (cubic shaping).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    ALPHA,
    SQRT5,
    GaussianInt,
    OrderElement,
    ThetaInt,
    _as_gaussian,
    bulk_matrix,
    from_coeffs,
    matrix_rep,
)

# Minimum squared determinant of the (infinite) Golden Code.
MIN_DET_SQ = 0.2


@dataclass(frozen=True)
class GoldenCodeword:
    """One space-time block: exact coordinates plus the evaluated matrix."""

    coords: tuple  # (a, b, c, d), GaussianInt
    order_elem: OrderElement  # W with codeword = A W / sqrt5
    matrix: np.ndarray  # 2x2 complex, (1/sqrt5) A W evaluated

    def __bool__(self):
        return any(bool(c) for c in self.coords)

    def integral_element(self) -> OrderElement:
        """sqrt5 times the codeword as an exact order element (alpha * W)."""
        return ALPHA * self.order_elem

    def __eq__(self, other):
        return isinstance(other, GoldenCodeword) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)


@dataclass(frozen=True)
class GoldenBlock:
    """A length-L vector of Golden codewords, the unit of transmission."""

    words: tuple

    @property
    def length(self) -> int:
        return len(self.words)

    def hamming_weight(self) -> int:
        return sum(1 for w in self.words if w)

    def matrices(self) -> np.ndarray:
        return np.stack([w.matrix for w in self.words])


def golden_encode(a, b, c, d) -> GoldenCodeword:
    """Encode four Z[i] information symbols into a Golden codeword."""
    a, b, c, d = (_as_gaussian(s) for s in (a, b, c, d))
    w = from_coeffs(a, b, c, d)
    mat = matrix_rep(ALPHA * w) / SQRT5
    return GoldenCodeword((a, b, c, d), w, mat)


def encode_coords_array(coords: np.ndarray) -> np.ndarray:
    """Vectorized encoder: (..., 4) complex symbol rows -> (..., 2, 2) matrices.

    Agrees with golden_encode entry by entry; used for candidate tables and
    bulk sweeps.
    """
    avec = np.asarray(coords, dtype=np.complex128)
    alpha_mat = matrix_rep(ALPHA)
    return np.einsum("ij,...jk->...ik", alpha_mat, bulk_matrix(avec)) / SQRT5


def vectorize(X: np.ndarray) -> np.ndarray:
    """Column-stacking map [[a, c], [b, d]] -> (a, b, c, d)."""
    return np.array([X[0, 0], X[1, 0], X[0, 1], X[1, 1]], dtype=np.complex128)


def generator_matrix() -> np.ndarray:
    """Unitary 4x4 matrix R with vectorize(encode(s)) = R @ s."""
    cols = []
    for k in range(4):
        coords = [0, 0, 0, 0]
        coords[k] = 1
        cols.append(vectorize(golden_encode(*coords).matrix))
    return np.stack(cols, axis=1)


_IDEAL_SCALE = {
    "one": GaussianInt(1, 0),
    "one_plus_i": GaussianInt(1, 1),
    "two": GaussianInt(2, 0),
}


def scale_ideal(x: GoldenCodeword, level: str) -> GoldenCodeword:
    """Push a codeword into the ideal (1+i)G or 2G by scaling its coordinates."""
    try:
        s = _IDEAL_SCALE[level]
    except KeyError:
        raise ValueError(f"unknown ideal level {level!r}") from None
    return golden_encode(*(s * c for c in x.coords))


def block_from_coords(coord_rows) -> GoldenBlock:
    return GoldenBlock(tuple(golden_encode(*row) for row in coord_rows))
