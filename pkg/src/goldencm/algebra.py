"""Exact arithmetic for the Golden Code's integer skeleton.

Elements live in Z[i], in Z[i,theta] (theta the golden ratio, theta^2 =
theta + 1), and in the quaternion order O = Z[i,theta] + Z[i,theta]*j with
j^2 = i and j*x = conj(x)*j.  Everything here is immutable and pure; the
numeric side (2x2 complex matrices) is plain numpy.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

SQRT5 = math.sqrt(5.0)
THETA_VAL = (1.0 + SQRT5) / 2.0
THETA_CONJ_VAL = (1.0 - SQRT5) / 2.0

# Centralized float tolerances.  2x2 double-precision matrices leave a huge
# margin, so these are never tuned per call site.
DET_REL_TOL = 1e-9
UNITARY_TOL = 1e-12


def _as_gaussian(x):
    if isinstance(x, GaussianInt):
        return x
    if isinstance(x, int):
        return GaussianInt(x, 0)
    raise TypeError(f"cannot coerce {type(x).__name__} to GaussianInt")


@dataclass(frozen=True)
class GaussianInt:
    """Element a + b*i of Z[i]."""

    re: int = 0
    im: int = 0

    def __add__(self, other):
        other = _as_gaussian(other)
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gaussian(other)
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        other = _as_gaussian(other)
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conj(self):
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


GI_ZERO = GaussianInt(0, 0)
GI_ONE = GaussianInt(1, 0)
GI_I = GaussianInt(0, 1)


def _as_theta(x):
    if isinstance(x, ThetaInt):
        return x
    if isinstance(x, (int, GaussianInt)):
        return ThetaInt(_as_gaussian(x), GI_ZERO)
    raise TypeError(f"cannot coerce {type(x).__name__} to ThetaInt")


@dataclass(frozen=True)
class ThetaInt:
    """Element u + v*theta of Z[i,theta], with theta^2 = theta + 1."""

    u: GaussianInt = GI_ZERO
    v: GaussianInt = GI_ZERO

    def __add__(self, other):
        other = _as_theta(other)
        return ThetaInt(self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_theta(other)
        return ThetaInt(self.u - other.u, self.v - other.v)

    def __mul__(self, other):
        other = _as_theta(other)
        # (u1 + v1 t)(u2 + v2 t), t^2 = t + 1
        return ThetaInt(
            self.u * other.u + self.v * other.v,
            self.u * other.v + self.v * other.u + self.v * other.v,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return ThetaInt(-self.u, -self.v)

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def galois_conj(self):
        """The conjugation u + v*theta -> (u + v) - v*theta (theta -> 1 - theta)."""
        return ThetaInt(self.u + self.v, -self.v)

    def norm(self) -> GaussianInt:
        """Relative norm x * conj(x), an element of Z[i]."""
        prod = self * self.galois_conj()
        assert not prod.v, "norm must land in Z[i]"
        return prod.u

    def eval(self, root: int = 1) -> complex:
        """Numerical value with theta evaluated at (1 + sqrt5)/2 (root=+1) or (1 - sqrt5)/2."""
        t = THETA_VAL if root > 0 else THETA_CONJ_VAL
        return self.u.to_complex() + self.v.to_complex() * t


TI_ZERO = ThetaInt()
TI_ONE = ThetaInt(GI_ONE, GI_ZERO)
TI_I = ThetaInt(GI_I, GI_ZERO)
TI_THETA = ThetaInt(GI_ZERO, GI_ONE)
TI_ITHETA = ThetaInt(GI_ZERO, GI_I)


def _as_order(x):
    if isinstance(x, OrderElement):
        return x
    if isinstance(x, (int, GaussianInt, ThetaInt)):
        return OrderElement(_as_theta(x), TI_ZERO)
    raise TypeError(f"cannot coerce {type(x).__name__} to OrderElement")


@dataclass(frozen=True)
class OrderElement:
    """Element x1 + x2*j of the order O, with j^2 = i and j*x = conj(x)*j."""

    x1: ThetaInt = TI_ZERO
    x2: ThetaInt = TI_ZERO

    def __add__(self, other):
        other = _as_order(other)
        return OrderElement(self.x1 + other.x1, self.x2 + other.x2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_order(other)
        return OrderElement(self.x1 - other.x1, self.x2 - other.x2)

    def __mul__(self, other):
        other = _as_order(other)
        # (x1 + x2 j)(y1 + y2 j) = (x1 y1 + i x2 conj(y2)) + (x1 y2 + x2 conj(y1)) j
        return OrderElement(
            self.x1 * other.x1 + TI_I * self.x2 * other.x2.galois_conj(),
            self.x1 * other.x2 + self.x2 * other.x1.galois_conj(),
        )

    def __rmul__(self, other):
        return _as_order(other) * self

    def __neg__(self):
        return OrderElement(-self.x1, -self.x2)

    def __bool__(self):
        return bool(self.x1) or bool(self.x2)

    def quat_conj(self):
        """Quaternionic conjugate: w~ * w = det(w), w~ + w = tr(w)."""
        return OrderElement(self.x1.galois_conj(), -self.x2)

    def reduced_det(self) -> GaussianInt:
        """Determinant of the matrix embedding, N(x1) - i*N(x2) in Z[i]."""
        return self.x1.norm() - GI_I * self.x2.norm()

    def reduced_trace(self) -> GaussianInt:
        tr = self.x1 + self.x1.galois_conj()
        assert not tr.v
        return tr.u

    def frob_sq(self) -> int:
        """Squared Frobenius norm of the matrix embedding; always a plain integer."""
        return _theta_pair_sq(self.x1) + _theta_pair_sq(self.x2)

    def coeffs(self):
        """Coordinates (u1, v1, u2, v2) in the Z[i]-basis {1, theta, j, theta*j}."""
        return (self.x1.u, self.x1.v, self.x2.u, self.x2.v)

    def matrix(self) -> np.ndarray:
        return matrix_rep(self)


def _theta_pair_sq(x: ThetaInt) -> int:
    # |x|^2 + |conj(x)|^2 for x = (a + c i) + (b + d i) theta equals
    # 2a^2 + 3b^2 + 2ab + 2c^2 + 3d^2 + 2cd, an exact integer.
    a, c = x.u.re, x.u.im
    b, d = x.v.re, x.v.im
    return 2 * a * a + 3 * b * b + 2 * a * b + 2 * c * c + 3 * d * d + 2 * c * d


ORDER_ONE = OrderElement(TI_ONE, TI_ZERO)
ORDER_THETA = OrderElement(TI_THETA, TI_ZERO)
ORDER_J = OrderElement(TI_ZERO, TI_ONE)
ORDER_THETA_J = OrderElement(TI_ZERO, TI_THETA)

# alpha = 1 + i*(1 - theta) and its twin alpha' = 1 - i*(1 - theta); the ideal
# alpha*O scaled by 1/sqrt(5) is the Golden Code.
ALPHA = OrderElement(ThetaInt(GaussianInt(1, 1), GaussianInt(0, -1)), TI_ZERO)
ALPHA_PRIME = OrderElement(ThetaInt(GaussianInt(1, -1), GaussianInt(0, 1)), TI_ZERO)


def from_coeffs(u1, v1, u2, v2) -> OrderElement:
    """Order element from coordinates in the basis {1, theta, j, theta*j}."""
    return OrderElement(
        ThetaInt(_as_gaussian(u1), _as_gaussian(v1)),
        ThetaInt(_as_gaussian(u2), _as_gaussian(v2)),
    )


def embed(x: ThetaInt, root: int = 1) -> complex:
    """Numerical embedding of u + v*theta, at the positive or negative root of 5."""
    return x.eval(root)


def matrix_rep(w: OrderElement) -> np.ndarray:
    """2x2 complex matrix [[x1, x2], [i*conj(x2), conj(x1)]] of an order element."""
    return np.array(
        [
            [w.x1.eval(1), w.x2.eval(1)],
            [1j * w.x2.eval(-1), w.x1.eval(-1)],
        ],
        dtype=np.complex128,
    )


def quat_conj(X: np.ndarray) -> np.ndarray:
    """Adjugate [[d, -b], [-c, a]]; on embedded elements this is the quaternionic conjugate."""
    return np.array(
        [[X[1, 1], -X[0, 1]], [-X[1, 0], X[0, 0]]], dtype=np.complex128
    )


def det2(X: np.ndarray) -> complex:
    return X[0, 0] * X[1, 1] - X[0, 1] * X[1, 0]


def frob_norm_sq(X: np.ndarray) -> float:
    return float(np.sum(np.abs(X) ** 2))


def block_det(blocks) -> float:
    """det of the accumulated Gram matrix sum_i X_i X_i^H (real, >= 0)."""
    blocks = list(blocks)
    if not blocks:
        raise ValueError("block_det of an empty block")
    gram = np.zeros((2, 2), dtype=np.complex128)
    for X in blocks:
        gram += X @ X.conj().T
    return float(det2(gram).real)


def block_det_expansion(blocks) -> float:
    """Same determinant via |det X_i|^2 terms plus pairwise mixed Frobenius terms."""
    blocks = list(blocks)
    if not blocks:
        raise ValueError("block_det of an empty block")
    total = sum(abs(det2(X)) ** 2 for X in blocks)
    for j in range(1, len(blocks)):
        conj_j = quat_conj(blocks[j])
        for i in range(j):
            total += frob_norm_sq(conj_j @ blocks[i])
    return float(total)


# i*(1 - theta), the unit scaling the j-component in the two-sidedness twist
TI_ITHETA_CONJ = ThetaInt(GI_I, GaussianInt(0, -1))


def conjugate_by_alpha(w: OrderElement) -> OrderElement:
    """The bijection of O with alpha * w == conjugate_by_alpha(w) * alpha.

    Sends x1 + x2*j to x1 + i*(1-theta)*x2*j; the scaling factor is a unit
    (its norm is 1), so the map permutes the order.
    """
    return OrderElement(w.x1, TI_ITHETA_CONJ * w.x2)


def conjugate_by_alpha_inv(w: OrderElement) -> OrderElement:
    # (i*(1-theta))^(-1) = i*theta
    return OrderElement(w.x1, TI_ITHETA * w.x2)


def order_basis():
    """The Z[i]-basis {1, theta, j, theta*j} of the order."""
    return (ORDER_ONE, ORDER_THETA, ORDER_J, ORDER_THETA_J)


def discriminant_trace_matrix():
    """4x4 matrix of reduced traces tr(w_k * w_l) over the order basis."""
    basis = order_basis()
    return [[(wk * wl).reduced_trace() for wl in basis] for wk in basis]


def _det_gaussian(m) -> GaussianInt:
    n = len(m)
    if n == 1:
        return m[0][0]
    acc = GI_ZERO
    for col in range(n):
        minor = [row[:col] + row[col + 1 :] for row in m[1:]]
        term = m[0][col] * _det_gaussian(minor)
        acc = acc + term if col % 2 == 0 else acc - term
    return acc


def reduced_discriminant_check() -> int:
    """Determinant of the trace form on the order basis; equals 25 iff the
    order has reduced discriminant 5Z[i] (hence is maximal)."""
    d = _det_gaussian(discriminant_trace_matrix())
    assert d.im == 0, "trace-form determinant must be rational"
    return d.re


# ---------------------------------------------------------------------------
# Bulk coefficient arithmetic.
#
# Exhaustive sweeps (candidate tables, quotient-ring checks) need tens of
# thousands of exact order products.  Elements are encoded as length-4
# complex vectors of their {1, theta, j, theta*j} coordinates; products are
# bilinear with structure constants extracted from the exact classes above.
# All values stay tiny integers, far below the 2^53 float-exact range.
# ---------------------------------------------------------------------------


def coeff_vector(w: OrderElement) -> np.ndarray:
    return np.array([c.to_complex() for c in w.coeffs()], dtype=np.complex128)


def from_coeff_vector(vec) -> OrderElement:
    out = []
    for z in vec:
        re, im = round(float(np.real(z))), round(float(np.imag(z)))
        assert abs(z - complex(re, im)) < 1e-6, "non-integral coefficient"
        out.append(GaussianInt(re, im))
    return from_coeffs(*out)


@functools.lru_cache(maxsize=1)
def structure_constants() -> np.ndarray:
    """S[a, b, c]: coordinate c of the product of basis elements a and b."""
    basis = order_basis()
    S = np.zeros((4, 4, 4), dtype=np.complex128)
    for a, wa in enumerate(basis):
        for b, wb in enumerate(basis):
            S[a, b] = coeff_vector(wa * wb)
    return S


def bulk_mul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """All pairwise order products of coefficient rows: (N,4) x (M,4) -> (N,M,4)."""
    return np.einsum("na,mb,abc->nmc", A, B, structure_constants())


def bulk_quat_conj(A: np.ndarray) -> np.ndarray:
    out = np.empty_like(A)
    out[..., 0] = A[..., 0] + A[..., 1]
    out[..., 1] = -A[..., 1]
    out[..., 2] = -A[..., 2]
    out[..., 3] = -A[..., 3]
    return out


def bulk_reduced_det(A: np.ndarray) -> np.ndarray:
    # N(u + v theta) = u^2 + u v - v^2, then det = N(x1) - i N(x2)
    n1 = A[..., 0] ** 2 + A[..., 0] * A[..., 1] - A[..., 1] ** 2
    n2 = A[..., 2] ** 2 + A[..., 2] * A[..., 3] - A[..., 3] ** 2
    return n1 - 1j * n2


def bulk_frob_sq(A: np.ndarray) -> np.ndarray:
    def q(u, v):
        a, c = np.real(u), np.imag(u)
        b, d = np.real(v), np.imag(v)
        return 2 * a * a + 3 * b * b + 2 * a * b + 2 * c * c + 3 * d * d + 2 * c * d

    return q(A[..., 0], A[..., 1]) + q(A[..., 2], A[..., 3])


def bulk_matrix(A: np.ndarray) -> np.ndarray:
    """Evaluate coefficient rows (..., 4) to embedded matrices (..., 2, 2)."""
    out = np.empty(A.shape[:-1] + (2, 2), dtype=np.complex128)
    out[..., 0, 0] = A[..., 0] + A[..., 1] * THETA_VAL
    out[..., 0, 1] = A[..., 2] + A[..., 3] * THETA_VAL
    out[..., 1, 0] = 1j * (A[..., 2] + A[..., 3] * THETA_CONJ_VAL)
    out[..., 1, 1] = A[..., 0] + A[..., 1] * THETA_CONJ_VAL
    return out


def _to_int(arr: np.ndarray) -> np.ndarray:
    out = np.rint(np.real(arr)).astype(np.int64)
    assert np.max(np.abs(arr - out)) < 1e-6, "expected integral values"
    return out


def pair_interference_table(A: np.ndarray, B: np.ndarray | None = None) -> np.ndarray:
    """Integer table T[n, m] = ||conj(A_n) * B_m||_F^2 over coefficient rows.

    These are the mixed terms of the block determinant expansion; for order
    elements they are exact integers.
    """
    if B is None:
        B = A
    prods = bulk_mul(bulk_quat_conj(A), B)
    return _to_int(bulk_frob_sq(prods))


def det_sq_table(A: np.ndarray) -> np.ndarray:
    """Integer table |det(A_n)|^2 over coefficient rows."""
    d = bulk_reduced_det(A)
    return _to_int(d * d.conj())
