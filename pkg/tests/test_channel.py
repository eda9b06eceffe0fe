import numpy as np
import pytest

from goldencm import channel as ch
from goldencm import schemes as sch
from goldencm.golden import GoldenBlock, golden_encode


def test_reproducible_streams():
    a = ch.draw_channel(ch.make_rng(5, 1, 2)).H
    b = ch.draw_channel(ch.make_rng(5, 1, 2)).H
    c = ch.draw_channel(ch.make_rng(5, 1, 3)).H
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_channel_statistics():
    rng = ch.make_rng(6)
    hs = (rng.standard_normal((100_000, 2, 2)) + 1j * rng.standard_normal((100_000, 2, 2))) / np.sqrt(2)
    # sanity of the reference expression itself
    assert abs(np.mean(np.abs(hs) ** 2) - 1.0) < 0.02

    rng = ch.make_rng(7)
    draws = np.stack([ch.draw_channel(rng).H for _ in range(100_000)])
    assert abs(np.mean(np.abs(draws) ** 2) - 1.0) < 0.02
    assert abs(np.mean(draws.real)) < 0.01


def test_noise_variance():
    rng = ch.make_rng(8)
    noise = ch.NoiseConfig(0.37)
    X = np.zeros((25_000, 2, 2), dtype=np.complex128)
    Y = ch.transmit(X, np.eye(2, dtype=np.complex128), noise, rng)
    measured = np.mean(np.abs(Y) ** 2)
    assert measured == pytest.approx(0.37, rel=0.02)


def test_noise_off_is_exact():
    rng = ch.make_rng(9)
    H = ch.draw_channel(rng).H
    X = (rng.standard_normal((3, 2, 2)) + 1j * rng.standard_normal((3, 2, 2)))
    Y = ch.transmit(X, H, ch.NoiseConfig(0.0), rng)
    assert np.array_equal(Y, np.einsum("rc,lck->lrk", H, X))
    Yid = ch.transmit(X, np.eye(2, dtype=np.complex128), ch.NoiseConfig(0.0), rng)
    assert np.allclose(Yid, X, atol=0)


def test_transmit_accepts_golden_block():
    block = GoldenBlock((golden_encode(1, 0, 0, 0), golden_encode(0, 1, 0, 0)))
    Y = ch.transmit(block, np.eye(2, dtype=np.complex128), ch.NoiseConfig(0.0), ch.make_rng(10))
    assert np.allclose(Y, block.matrices())


def test_snr_conversion():
    noise = ch.noise_for_snr(0.5, 10.0)
    assert noise.n0 == pytest.approx(0.05)
    assert noise.snr_db(0.5) == pytest.approx(10.0)
    assert ch.noise_for_snr(0.5, float("inf")).n0 == 0.0


def test_codebook_average_energy_repetition():
    # Average per-symbol energy over the whole 4096-word codebook equals the
    # configured E_S exactly (finite dyadic average).
    cands = sch.byte_candidates()
    centered_coords = cands.coords - sch.QAM4.centroid
    energy = np.abs(centered_coords) ** 2
    total = 0.0
    count = 0
    for label in range(16):
        for b1 in cands.coset_members[label]:
            for b2 in cands.coset_members[label]:
                total += energy[b1].sum() + energy[b2].sum()
                count += 8
    assert total / count == pytest.approx(sch.make_config("repetition_id").es, abs=1e-12)


def test_codebook_average_energy_grs():
    from goldencm.rs_gf256 import RSCode

    code = RSCode(4, 2)
    msgs = (
        np.stack(np.meshgrid(np.arange(256), np.arange(256), indexing="ij"), -1)
        .reshape(-1, 2)
        .astype(np.uint8)
    )
    cw = code.encode_bulk(msgs)
    cands = sch.byte_candidates()
    centered = np.abs(cands.coords - sch.QAM4.centroid) ** 2
    energy = centered.sum(axis=1)[cw].mean() / 4.0
    assert energy == pytest.approx(0.5, abs=1e-12)
