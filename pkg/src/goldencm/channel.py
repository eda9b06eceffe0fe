"""Coherent 2x2 slow block-fading channel.

H is drawn once per frame (i.i.d. CN(0,1) entries, variance 1/2 per real
dimension) and held constant over the frame's L codewords; noise is CN(0, N0)
per complex entry.  Randomness comes from numpy PCG64 generators seeded
through SeedSequence on explicit integer streams, so every frame is
reproducible independently of execution order or worker count.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .golden import GoldenBlock


@dataclass(frozen=True)
class ChannelRealization:
    H: np.ndarray
    coherence_blocks: int


@dataclass(frozen=True)
class NoiseConfig:
    n0: float

    def snr_db(self, es: float) -> float:
        return 10.0 * np.log10(es / self.n0)


def noise_for_snr(es: float, snr_db: float) -> NoiseConfig:
    """Per-symbol SNR convention: snr_db = 10 log10(es / N0)."""
    return NoiseConfig(es * 10.0 ** (-snr_db / 10.0))


def make_rng(master_seed: int, *stream: int) -> np.random.Generator:
    """Generator for one stream (e.g. (point_index, frame_index))."""
    return np.random.default_rng(np.random.SeedSequence([master_seed, *stream]))


def draw_channel(rng: np.random.Generator, coherence_blocks: int = 1) -> ChannelRealization:
    H = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))) / np.sqrt(2.0)
    return ChannelRealization(H, coherence_blocks)


def transmit(X, H: np.ndarray, noise: NoiseConfig, rng: np.random.Generator) -> np.ndarray:
    """Y_i = H X_i + W_i over the frame; X may be a GoldenBlock or (L,2,2) array."""
    if isinstance(X, GoldenBlock):
        X = X.matrices()
    X = np.asarray(X, dtype=np.complex128)
    Y = np.einsum("rc,lck->lrk", H, X)
    if noise.n0 > 0.0:
        scale = np.sqrt(noise.n0 / 2.0)
        Y = Y + scale * (
            rng.standard_normal(Y.shape) + 1j * rng.standard_normal(Y.shape)
        )
    return Y
