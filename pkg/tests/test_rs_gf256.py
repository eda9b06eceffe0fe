import numpy as np
import pytest

from goldencm import rs_gf256 as rs

CONFIGURED_CODES = [(4, 2), (6, 3), (8, 4), (12, 6), (8, 6), (16, 12), (24, 18)]


# --- field ------------------------------------------------------------------


def test_gf_mul_examples():
    rng = np.random.default_rng(51)
    for _ in range(50):
        a = int(rng.integers(0, 256))
        assert rs.gf_mul(a, 1) == a
        assert rs.gf_mul(a, 0) == 0
    assert rs.gf_mul(0x02, 0x02) == 0x04  # no reduction
    # 0x80 * 0x02 overflows once: 0x100 ^ 0x11D = 0x1D
    assert rs.gf_mul(0x80, 0x02) == 0x1D


def test_gf_inverses_exhaustive():
    for a in range(1, 256):
        assert rs.gf_mul(a, rs.gf_inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        rs.gf_div(1, 0)


def test_gf_field_laws_sampled():
    rng = np.random.default_rng(52)
    a = rng.integers(0, 256, 100_000).astype(np.uint8)
    b = rng.integers(0, 256, 100_000).astype(np.uint8)
    c = rng.integers(0, 256, 100_000).astype(np.uint8)
    ab_c = rs.gf_mul_vec(rs.gf_mul_vec(a, b), c)
    a_bc = rs.gf_mul_vec(a, rs.gf_mul_vec(b, c))
    assert np.array_equal(ab_c, a_bc)
    lhs = rs.gf_mul_vec(a, b ^ c)
    rhs = rs.gf_mul_vec(a, b) ^ rs.gf_mul_vec(a, c)
    assert np.array_equal(lhs, rhs)


def test_gf_mul_vec_matches_scalar():
    rng = np.random.default_rng(53)
    a = rng.integers(0, 256, 500).astype(np.uint8)
    b = rng.integers(0, 256, 500).astype(np.uint8)
    vec = rs.gf_mul_vec(a, b)
    for i in range(500):
        assert int(vec[i]) == rs.gf_mul(int(a[i]), int(b[i]))


def test_generator_order():
    # 0x02 generates the full multiplicative group
    seen = set()
    x = 1
    for _ in range(255):
        seen.add(x)
        x = rs.gf_mul(x, rs.GENERATOR)
    assert len(seen) == 255 and x == 1


# --- code construction ----------------------------------------------------------


def test_invalid_parameters():
    for n, k in [(2, 2), (4, 0), (256, 2), (3, 5)]:
        with pytest.raises(ValueError):
            rs.RSCode(n, k)


def test_systematic_and_linear():
    code = rs.RSCode(8, 4)
    rng = np.random.default_rng(54)
    for _ in range(100):
        msg = rng.integers(0, 256, 4).tolist()
        cw = code.encode(msg)
        assert cw[:4] == msg
        assert len(cw) == 8
    assert code.encode([0, 0, 0, 0]) == [0] * 8
    # linearity: encode(x ^ y) = encode(x) ^ encode(y)
    for _ in range(100):
        x = rng.integers(0, 256, 4).tolist()
        y = rng.integers(0, 256, 4).tolist()
        lhs = code.encode([a ^ b for a, b in zip(x, y)])
        rhs = [a ^ b for a, b in zip(code.encode(x), code.encode(y))]
        assert lhs == rhs


def test_encode_bulk_matches_scalar():
    code = rs.RSCode(6, 3)
    rng = np.random.default_rng(55)
    msgs = rng.integers(0, 256, (200, 3)).astype(np.uint8)
    bulk = code.encode_bulk(msgs)
    for i in range(0, 200, 13):
        assert bulk[i].tolist() == code.encode(msgs[i].tolist())


def test_parity_mul_tables():
    code = rs.RSCode(4, 2)
    pmul = code.parity_mul_tables()
    rng = np.random.default_rng(56)
    for _ in range(50):
        msg = rng.integers(0, 256, 2).tolist()
        cw = code.encode(msg)
        for p in range(2):
            acc = 0
            for i in range(2):
                acc ^= int(pmul[i, p, msg[i]])
            assert acc == cw[2 + p]


def test_mds_weight_exhaustive_4_2():
    code = rs.RSCode(4, 2)
    msgs = (
        np.stack(np.meshgrid(np.arange(256), np.arange(256), indexing="ij"), -1)
        .reshape(-1, 2)
        .astype(np.uint8)
    )
    weights = (code.encode_bulk(msgs) != 0).sum(axis=1)
    assert int(weights[1:].min()) == code.d_min == 3


@pytest.mark.parametrize("n,k", [(8, 4), (12, 6), (16, 12), (24, 18)])
def test_mds_weight_sampled(n, k):
    code = rs.RSCode(n, k)
    rng = np.random.default_rng(57)
    msgs = rng.integers(0, 256, (100_000, k)).astype(np.uint8)
    msgs = msgs[np.any(msgs != 0, axis=1)]
    weights = (code.encode_bulk(msgs) != 0).sum(axis=1)
    assert int(weights.min()) >= code.d_min


# --- decoding ---------------------------------------------------------------------


def test_decode_clean():
    code = rs.RSCode(6, 3)
    rng = np.random.default_rng(58)
    for _ in range(50):
        msg = rng.integers(0, 256, 3).tolist()
        assert code.decode(code.encode(msg)) == msg


def test_decode_wrong_length():
    code = rs.RSCode(6, 3)
    with pytest.raises(ValueError):
        code.decode([0] * 5)
    with pytest.raises(ValueError):
        code.encode([0] * 2)


def test_two_error_correction_8_4():
    code = rs.RSCode(8, 4)
    assert code.t == 2
    rng = np.random.default_rng(59)
    for _ in range(500):
        msg = rng.integers(0, 256, 4).tolist()
        recv = code.encode(msg)
        for pos in rng.choice(8, 2, replace=False):
            recv[pos] ^= int(rng.integers(1, 256))
        assert code.decode(recv) == msg


def test_single_error_exhaustive_4_2():
    code = rs.RSCode(4, 2)
    rng = np.random.default_rng(60)
    for _ in range(30):
        msg = rng.integers(0, 256, 2).tolist()
        cw = code.encode(msg)
        for pos in range(4):
            for mag in (1, 7, 128, 255):
                recv = list(cw)
                recv[pos] ^= mag
                assert code.decode(recv) == msg


def test_beyond_capability_signals_or_miscorrects():
    code = rs.RSCode(4, 2)  # t = 1
    rng = np.random.default_rng(61)
    outcomes = {"failure": 0, "miscorrection": 0, "correct": 0}
    for _ in range(300):
        msg = rng.integers(0, 256, 2).tolist()
        recv = code.encode(msg)
        for pos in rng.choice(4, 2, replace=False):
            recv[pos] ^= int(rng.integers(1, 256))
        got = code.decode(recv)
        if got is None:
            outcomes["failure"] += 1
        elif got == msg:
            outcomes["correct"] += 1
        else:
            outcomes["miscorrection"] += 1
    # beyond-t patterns must never crash; failures dominate
    assert outcomes["failure"] > 0


@pytest.mark.parametrize("n,k", CONFIGURED_CODES)
def test_t_error_correction_all_codes(n, k):
    code = rs.RSCode(n, k)
    rng = np.random.default_rng(n * 100 + k)
    for _ in range(300):
        msg = rng.integers(0, 256, k).tolist()
        recv = code.encode(msg)
        nerr = int(rng.integers(0, code.t + 1))
        for pos in rng.choice(n, nerr, replace=False):
            recv[pos] ^= int(rng.integers(1, 256))
        assert code.decode(recv) == msg
