"""Offline verification of the algebraic performance claims: exact block
determinant spectra, minimum-determinant searches, asymptotic coding gains
and bound checks.

All enumerations run on exact integer tables (block determinants in units
of delta = 1/5, which they always are for lattice-coordinate codewords), so
spectra and minima carry no float error.  Codebooks larger than the
enumeration cap are refused with a size estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import backend
from .algebra import bulk_frob_sq, bulk_quat_conj, bulk_reduced_det
from .quotient import HBAR_TABLE
from .schemes import (
    SchemeConfig,
    UNCODED_MIX,
    byte_candidates,
    uncoded_candidates,
)

ENUMERATION_CAP = 1 << 24

# Minimum |det|^2 in delta units over the nonzero part of the uncoded ideal
# carving: 4 for (1+i)G at 4-QAM, 16 for 2G at 16-QAM.
IDEAL_MIN_UNITS = {"one_plus_i": 4, "two": 16}

# Frozen leading terms of the exact repetition-code spectra (determinant in
# delta units -> codeword count); any change here is a regression.
REPETITION_SPECTRUM_LEADING = {0: 1, 4: 66, 8: 120, 10: 48, 16: 202}
TWISTED_SPECTRUM_LEADING = {0: 1, 4: 24, 8: 61, 9: 24, 10: 8, 12: 74}


class EnumerationTooLarge(ValueError):
    def __init__(self, size, cap=ENUMERATION_CAP):
        super().__init__(
            f"codebook has {size} words, beyond the enumeration cap of {cap}"
        )
        self.size = size


def codebook_size(config: SchemeConfig) -> int:
    if config.scheme in ("repetition_id", "repetition_hbar"):
        return 1 << 12
    if config.scheme == "grs_4qam":
        return 256**config.rs.k
    if config.scheme == "grs_16qam":
        return 256 ** (config.rs.k + config.rs.n)
    cands = uncoded_candidates(config.scheme)
    return len(cands.coords) ** config.L


@dataclass(frozen=True)
class DetSpectrum:
    """Histogram of block determinants over a codebook, in units of delta."""

    scheme: str
    histogram: dict
    codebook_size: int

    def min_nonzero(self) -> int:
        return min(v for v in self.histogram if v > 0)

    def q_series(self, terms: int = 6) -> str:
        parts = []
        for exponent in sorted(self.histogram)[:terms]:
            count = self.histogram[exponent]
            if exponent == 0:
                parts.append(str(count))
            else:
                parts.append(f"{count}q^{exponent}")
        if len(self.histogram) > terms:
            parts.append("...")
        return " + ".join(parts)


def _hist_to_dict(hist: np.ndarray) -> dict:
    keys = np.nonzero(hist)[0]
    return {int(kk): int(hist[kk]) for kk in keys}


def _repetition_histogram(variant: str) -> np.ndarray:
    cands = byte_candidates()
    dets2, cross = cands.dets2, cands.cross
    members = cands.coset_members
    max_det = int(2 * dets2.max() + cross.max())
    hist = np.zeros(max_det + 1, dtype=np.int64)
    for label in range(16):
        target = label if variant == "identity" else int(HBAR_TABLE[label])
        g1 = members[label]
        g2 = members[target]
        d = (
            dets2[g1][:, None]
            + dets2[g2][None, :]
            + cross[g2][:, g1].T
        )
        hist += np.bincount(d.ravel(), minlength=max_det + 1)
    return hist


def det_spectrum(config: SchemeConfig) -> DetSpectrum:
    """Exact determinant counts over every codeword of an enumerable scheme."""
    size = codebook_size(config)
    if size > ENUMERATION_CAP:
        raise EnumerationTooLarge(size)
    scheme = config.scheme
    if scheme in ("repetition_id", "repetition_hbar"):
        variant = "identity" if scheme == "repetition_id" else "hbar"
        hist = _repetition_histogram(variant)
    elif scheme == "grs_4qam":
        cands = byte_candidates()
        code = config.rs
        n = code.n
        max_det = int(n * cands.dets2.max() + (n * (n - 1) // 2) * cands.cross.max())
        hist = backend.grs_det_histogram(
            code.parity_mul_tables(), cands.dets2, cands.cross, code.k, n, max_det
        )
    elif scheme in UNCODED_MIX:
        hist = _uncoded_histogram(config)
    else:
        raise ValueError(f"no enumerable codebook for scheme {scheme!r}")
    spectrum = DetSpectrum(scheme, _hist_to_dict(hist), size)
    assert sum(spectrum.histogram.values()) == size
    return spectrum


def _block_det_units(coord_blocks: np.ndarray) -> np.ndarray:
    """Exact block determinant (delta units) of coordinate blocks (N, L, 4)."""
    dets = bulk_reduced_det(coord_blocks)
    units = np.rint((dets * dets.conj()).real.sum(axis=1)).astype(np.int64)
    L = coord_blocks.shape[1]
    for j in range(1, L):
        conj_j = bulk_quat_conj(coord_blocks[:, j])
        for i in range(j):
            prods = np.einsum(
                "na,nb,abc->nc",
                conj_j,
                coord_blocks[:, i],
                _struct(),
            )
            units += np.rint(bulk_frob_sq(prods)).astype(np.int64)
    return units


def _struct():
    from .algebra import structure_constants

    return structure_constants()


def _uncoded_histogram(config: SchemeConfig) -> np.ndarray:
    cands = uncoded_candidates(config.scheme)
    M = len(cands.coords)
    if M**config.L > 1 << 20:
        raise EnumerationTooLarge(M**config.L, 1 << 20)
    idx = np.indices([M] * config.L).reshape(config.L, -1).T
    blocks = cands.coords[idx]
    units = _block_det_units(blocks)
    return np.bincount(units)


def delta_min_search(config: SchemeConfig) -> int:
    """Minimum nonzero-codeword block determinant, in units of delta."""
    return det_spectrum(config).min_nonzero()


def pairwise_delta_min(config: SchemeConfig, cap: int = 1 << 13) -> int:
    """Minimum determinant over all pairwise codeword differences.

    Quadratic in the codebook, so only for small schemes; the codeword
    enumeration above is the production search.
    """
    size = codebook_size(config)
    if size > cap:
        raise EnumerationTooLarge(size * size, cap * cap)
    blocks = _all_coord_blocks(config)
    best = None
    chunk = max(1, (1 << 19) // max(1, blocks.shape[0]))
    for start in range(0, blocks.shape[0], chunk):
        diff = blocks[start : start + chunk, None] - blocks[None, :]
        flat = diff.reshape(-1, blocks.shape[1], 4)
        nz = np.any(flat.reshape(flat.shape[0], -1) != 0, axis=1)
        if not np.any(nz):
            continue
        units = _block_det_units(flat[nz])
        m = int(units.min())
        best = m if best is None else min(best, m)
    return best


def _all_coord_blocks(config: SchemeConfig) -> np.ndarray:
    """Coordinate rows (N, L, 4) of every codeword of a small scheme."""
    scheme = config.scheme
    if scheme in UNCODED_MIX:
        cands = uncoded_candidates(scheme)
        idx = np.indices([len(cands.coords)] * config.L).reshape(config.L, -1).T
        return cands.coords[idx]
    cands = byte_candidates()
    if scheme in ("repetition_id", "repetition_hbar"):
        members = cands.coset_members
        rows = []
        for label in range(16):
            target = label if scheme == "repetition_id" else int(HBAR_TABLE[label])
            for j1 in members[label]:
                for j2 in members[target]:
                    rows.append((j1, j2))
        idx = np.array(rows)
        return cands.coords[idx]
    if scheme == "grs_4qam":
        code = config.rs
        msgs = np.indices([256] * code.k).reshape(code.k, -1).T.astype(np.uint8)
        cw = code.encode_bulk(msgs)
        return cands.coords[cw]
    raise EnumerationTooLarge(codebook_size(config))


# --- asymptotic coding gain -------------------------------------------------


@dataclass(frozen=True)
class GainReport:
    delta_min: float
    energy: float
    reference_delta: float
    reference_energy: float
    gamma_as: Fraction | float
    gamma_db: float


def design_delta_min_units(config: SchemeConfig) -> int:
    """The scheme's design (bound-level) minimum determinant in delta units."""
    if config.scheme in ("repetition_id", "repetition_hbar"):
        return 4
    if config.scheme == "grs_4qam":
        return config.rs.d_min**2
    if config.scheme == "grs_16qam":
        return min(16, config.rs.d_min**2)
    return 1


def asymptotic_gain(
    config: SchemeConfig,
    reference: SchemeConfig,
    delta_min_units: int | None = None,
    reference_delta_units: int | None = None,
) -> GainReport:
    """gamma_as = (sqrt(dmin)/E_S) / (sqrt(dmin_ref)/E_S_ref), exact when the
    determinant ratio is a perfect square (all the design cases)."""
    du = delta_min_units if delta_min_units is not None else design_delta_min_units(config)
    ru = (
        reference_delta_units
        if reference_delta_units is not None
        else design_delta_min_units(reference)
    )
    ratio = Fraction(du, ru)
    # scheme energies are dyadic rationals, so Fraction(float) is exact
    e_ratio = Fraction(reference.es) / Fraction(config.es)
    num_root = math.isqrt(ratio.numerator)
    den_root = math.isqrt(ratio.denominator)
    if num_root * num_root == ratio.numerator and den_root * den_root == ratio.denominator:
        gamma = Fraction(num_root, den_root) * e_ratio
        gamma_db = 10.0 * math.log10(float(gamma))
    else:
        gamma = math.sqrt(float(ratio)) * float(e_ratio)
        gamma_db = 10.0 * math.log10(gamma)
    return GainReport(
        delta_min=du * 0.2,
        energy=config.es,
        reference_delta=ru * 0.2,
        reference_energy=reference.es,
        gamma_as=gamma,
        gamma_db=gamma_db,
    )


# --- bound verification ------------------------------------------------------


@dataclass(frozen=True)
class BoundsReport:
    scheme: str
    checked: int
    min_seen_units: int
    hamming_bound_units: int
    coset_bound_units: int
    tightest_margin: int

    @property
    def ok(self) -> bool:
        return self.tightest_margin >= 0


class BoundViolation(AssertionError):
    pass


def _coset_bound_units(config: SchemeConfig) -> int:
    if config.scheme in ("repetition_id", "repetition_hbar"):
        return min(IDEAL_MIN_UNITS["one_plus_i"], 4)
    if config.scheme == "grs_4qam":
        return config.rs.d_min**2
    if config.scheme == "grs_16qam":
        return min(IDEAL_MIN_UNITS["two"], config.rs.d_min**2)
    return 1


def _sample_coord_blocks(config: SchemeConfig, samples: int, rng) -> np.ndarray:
    scheme = config.scheme
    if scheme == "grs_16qam":
        code = config.rs
        msgs = rng.integers(0, 256, (samples, code.k)).astype(np.uint8)
        cw = code.encode_bulk(msgs)
        uncoded = rng.integers(0, 256, (samples, code.n)).astype(np.uint8)
        cands = byte_candidates()
        return cands.coords[cw] + 2.0 * cands.coords[uncoded]
    if scheme == "grs_4qam":
        code = config.rs
        msgs = rng.integers(0, 256, (samples, code.k)).astype(np.uint8)
        return byte_candidates().coords[code.encode_bulk(msgs)]
    if scheme in UNCODED_MIX:
        cands = uncoded_candidates(scheme)
        idx = rng.integers(0, len(cands.coords), (samples, config.L))
        return cands.coords[idx]
    return _all_coord_blocks(config)


def verify_bounds(config: SchemeConfig, samples: int = 2000, seed: int = 0) -> BoundsReport:
    """Check the Hamming-weight and coset-code determinant bounds on every
    enumerated (small schemes) or sampled codeword; raise on any violation."""
    rng = np.random.default_rng(seed)
    size = codebook_size(config)
    if size <= min(ENUMERATION_CAP, 1 << 16):
        blocks = _all_coord_blocks(config)
    else:
        blocks = _sample_coord_blocks(config, samples, rng)
    nonzero_word = np.any(blocks != 0, axis=2)
    weights = nonzero_word.sum(axis=1)
    keep = weights > 0
    blocks = blocks[keep]
    weights = weights[keep]
    units = _block_det_units(blocks)
    coset_bound = _coset_bound_units(config)
    hamming = weights.astype(np.int64) ** 2
    margin_h = units - hamming
    margin_c = units - coset_bound
    if margin_h.min() < 0 or margin_c.min() < 0:
        bad = int(np.argmin(np.minimum(margin_h, margin_c)))
        raise BoundViolation(
            f"{config.scheme}: determinant {units[bad]} delta-units below bound "
            f"(weight {weights[bad]}), coords {blocks[bad].tolist()}"
        )
    return BoundsReport(
        scheme=config.scheme,
        checked=len(blocks),
        min_seen_units=int(units.min()),
        hamming_bound_units=int(hamming.max()),
        coset_bound_units=coset_bound,
        tightest_margin=int(min(margin_h.min(), margin_c.min())),
    )
