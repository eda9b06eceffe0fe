import numpy as np

from goldencm import algebra as al
from goldencm import quotient as q


def m2f2_matrix(m):
    return [[(m >> 0) & 1, (m >> 1) & 1], [(m >> 2) & 1, (m >> 3) & 1]]


def m2f2i_matrix(v):
    return [[(v >> 0) & 3, (v >> 2) & 3], [(v >> 4) & 3, (v >> 6) & 3]]


def mod2_representatives():
    """The 256 coset representatives of the order mod 2 (coords in {0,1}+{0,1}i)."""
    reps = []
    for b in range(256):
        reps.append(
            al.from_coeffs(
                *[
                    al.GaussianInt((b >> (2 * k)) & 1, (b >> (2 * k + 1)) & 1)
                    for k in range(4)
                ]
            )
        )
    return reps


E1, E2, E3, E4 = q.E_BASIS_1PI


# --- mod (1+i) ---------------------------------------------------------------


def test_project_mod_1pi_zero_and_basis():
    assert q.project_mod_1pi(al.OrderElement()).bits == 0
    # images of the ideal basis
    assert m2f2_matrix(E1) == [[0, 1], [1, 1]]
    assert m2f2_matrix(E2) == [[1, 1], [1, 0]]
    assert m2f2_matrix(E3) == [[1, 0], [1, 1]]
    assert m2f2_matrix(E4) == [[1, 1], [0, 1]]
    assert q.project_mod_1pi(q.IDEAL_BASIS[0]).bits == E1


def test_psi_ring_isomorphism_exhaustive():
    reps = [
        al.from_coeffs(b & 1, (b >> 1) & 1, (b >> 2) & 1, (b >> 3) & 1)
        for b in range(16)
    ]
    labels = [q.project_mod_1pi(x).bits for x in reps]
    assert sorted(labels) == list(range(16))  # bijective
    for i, x in enumerate(reps):
        for j, y in enumerate(reps):
            assert q.project_mod_1pi(x + y).bits == labels[i] ^ labels[j]
            assert (
                q.project_mod_1pi(x * y).bits
                == int(q.M2F2_MUL[labels[i], labels[j]])
            )


def test_invertible_elements_mod_1pi():
    invertibles = sorted(m for m in range(16) if q.M2F2(m).is_invertible())
    expected = sorted({E1, E2, E3, E4, E1 ^ E2, E3 ^ E4})
    assert invertibles == expected
    assert len(invertibles) == 6
    assert (E1 ^ E2) == q.PSI_ONE  # e1 + e2 is the identity matrix
    assert not q.M2F2(0).is_invertible()
    assert not q.M2F2(E1 ^ E3).is_invertible()
    assert m2f2_matrix(E1 ^ E3) == [[1, 1], [0, 0]]


def test_coset_leader_1pi_roundtrip():
    for label in range(16):
        leader = q.coset_leader_1pi(q.M2F2(label))
        assert all(c.re in (0, 1) and c.im == 0 for c in leader.lift.coords)
        assert q.project_mod_1pi(leader.lift.integral_element()).bits == label
    assert not q.coset_leader_1pi(q.M2F2(0)).lift
    # the first basis label lifts to the ideal generator itself
    e1_leader = q.coset_leader_1pi(q.M2F2(E1))
    assert [(c.re, c.im) for c in e1_leader.lift.coords] == [(1, 0), (0, 0), (0, 0), (0, 0)]
    assert e1_leader.lift.integral_element() == q.IDEAL_BASIS[0]


# --- mod 2 --------------------------------------------------------------------


def test_project_mod_2_zero_and_basis():
    assert q.project_mod_2(al.OrderElement()).bits == 0
    imgs = [m2f2i_matrix(e) for e in q.E_BASIS_2]
    # codes: 0, 1, i=2, 1+i=3
    assert imgs[0] == [[0, 2], [1, 2]]
    assert imgs[1] == [[1, 1], [2, 0]]
    assert imgs[2] == [[1, 0], [1, 1]]
    assert imgs[3] == [[2, 1], [0, 2]]


def test_phi_additive_exhaustive():
    reps = mod2_representatives()
    labels = [q.project_mod_2(x).bits for x in reps]
    assert sorted(labels) == list(range(256))
    for i in range(256):
        for j in range(0, 256, 37):  # additive law, sampled second argument
            assert q.project_mod_2(reps[i] + reps[j]).bits == labels[i] ^ labels[j]


def test_phi_multiplicative_exhaustive_bulk():
    reps = mod2_representatives()
    labels = np.array([q.project_mod_2(x).bits for x in reps], dtype=np.uint8)
    A = np.stack([al.coeff_vector(w) for w in reps])
    prods = al.bulk_mul(A, A)
    re = np.rint(prods.real).astype(np.int64) & 1
    im = np.rint(prods.imag).astype(np.int64) & 1
    scal = (re | (im << 1)).astype(np.uint8)
    phi = (q.PHI_ONE, q.PHI_THETA, q.PHI_J, q.PHI_THETA_J)
    scale_tab = np.array(
        [[q.f2i_scale(s, p) for s in range(4)] for p in phi], dtype=np.uint8
    )
    projected = np.zeros((256, 256), dtype=np.uint8)
    for k in range(4):
        projected ^= scale_tab[k][scal[:, :, k]]
    table = q.M2F2I_MUL[labels[:, None], labels[None, :]]
    assert np.array_equal(projected, table)


def test_phi_multiplicative_spot_exact():
    rng = np.random.default_rng(41)
    reps = mod2_representatives()
    for _ in range(100):
        x = reps[int(rng.integers(256))]
        y = reps[int(rng.integers(256))]
        assert q.project_mod_2(x * y).bits == (q.project_mod_2(x) * q.project_mod_2(y)).bits


def test_m2f2i_invertibility():
    # invertible iff det is a unit of F_2[i]; brute-force inverse existence
    for v in range(256):
        has_inverse = any(
            int(q.M2F2I_MUL[v, w]) == q.PHI_ONE and int(q.M2F2I_MUL[w, v]) == q.PHI_ONE
            for w in range(256)
        )
        assert q.M2F2i(v).is_invertible() == has_inverse


def test_coset_leader_2_roundtrip():
    for label in range(256):
        leader = q.coset_leader_2(q.M2F2i(label))
        assert all(c.re in (0, 1) and c.im in (0, 1) for c in leader.lift.coords)
        assert q.project_mod_2(leader.lift.integral_element()).bits == label


def test_byte_map():
    assert q.byte_map(0).bits == 0
    assert q.byte_map(1).bits == q.E_BASIS_2[0]
    for b in range(256):
        assert q.byte_unmap(q.byte_map(b)) == b
    # additivity: the identification is F_2-linear, exhaustive over pairs
    labels = np.array([q.byte_map(b).bits for b in range(256)], dtype=np.int64)
    x = np.arange(256)
    xor_pairs = labels[x[:, None] ^ x[None, :]]
    assert np.array_equal(xor_pairs, labels[:, None] ^ labels[None, :])


def test_coset_leader_matches_byte_bits():
    # byte -> label -> leader recovers the byte's own bit-pair coordinates
    for b in range(256):
        assert q.coset_leader_2(q.byte_map(b)).bits == b


# --- invertibility and lift determinants -----------------------------------------


def test_non_invertible_lift_determinants():
    from goldencm.schemes import byte_candidates

    cands = byte_candidates()
    for label in range(1, 16):
        lifts = cands.coset_members[label]
        min_units = int(cands.dets2[lifts].min())
        if q.M2F2(label).is_invertible():
            assert min_units >= 1
        else:
            assert min_units >= 2
    # mod-2: one lattice point per coset; non-invertible labels have
    # |det|^2 >= 2 delta-units
    for v in range(1, 256):
        byte = q.byte_unmap(q.M2F2i(v))
        if not q.M2F2i(v).is_invertible():
            assert int(cands.dets2[byte]) >= 2


# --- the twisted-repetition label map ---------------------------------------------


def test_hbar_images():
    assert q.hbar(q.M2F2(0)).bits == 0
    assert q.hbar(q.M2F2(E1)).bits == E1 ^ E2 ^ E4
    assert q.hbar(q.M2F2(E2)).bits == E1 ^ E2 ^ E3
    assert q.hbar(q.M2F2(E3)).bits == E1 ^ E3 ^ E4
    assert q.hbar(q.M2F2(E4)).bits == E2 ^ E3 ^ E4
    # all four basis labels map to non-invertible labels
    for e in (E1, E2, E3, E4):
        assert not q.hbar(q.M2F2(e)).is_invertible()


def test_hbar_additive_bijection():
    labels = [q.hbar(q.M2F2(m)).bits for m in range(16)]
    assert sorted(labels) == list(range(16))
    for x in range(16):
        for y in range(16):
            assert q.hbar(q.M2F2(x ^ y)).bits == labels[x] ^ labels[y]
