"""Timing comparison of the numba and numpy kernel backends.

Run:  python3 benchmarks/bench_backends.py
"""

import time

import numpy as np

from goldencm import _kernels_numpy as knp
from goldencm.rs_gf256 import RSCode
from goldencm.schemes import byte_candidates, qam16_parts

try:
    from goldencm import _kernels_numba as knb

    BACKENDS = [("numba", knb), ("numpy", knp)]
except ImportError:
    BACKENDS = [("numpy", knp)]


def timeit(fn, *args, repeat=5):
    fn(*args)  # warm up (numba compilation, caches)
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = np.random.default_rng(0)
    cands = byte_candidates()
    parts = qam16_parts()
    H = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))) / np.sqrt(2)
    Y = rng.standard_normal((6, 2, 2)) + 1j * rng.standard_normal((6, 2, 2))

    code42 = RSCode(4, 2)
    code63 = RSCode(6, 3)
    max_det = int(6 * cands.dets2.max() + 15 * cands.cross.max())

    rows = []
    for name, impl in BACKENDS:
        t_dist = timeit(impl.distance_table, H, cands.centered, Y)
        t_coset = timeit(impl.coset_phase1, H, parts.base, parts.offsets, Y)
        t_hist42 = timeit(
            impl.grs_det_histogram,
            code42.parity_mul_tables(), cands.dets2, cands.cross, 2, 4, max_det,
            repeat=3,
        )
        dist = knp.distance_table(H, cands.centered, Y)[:4]
        t_ml = timeit(impl.grs_exhaustive_ml, dist, code42.parity_mul_tables(), 2, repeat=3)
        rows.append((name, t_dist, t_coset, t_hist42, t_ml))

    print(f"{'backend':>8s} {'dist_table':>12s} {'coset_ph1':>12s} {'hist(4,2)':>12s} {'ml(4,2)':>12s}")
    for name, *times in rows:
        print(f"{name:>8s} " + " ".join(f"{t * 1e3:10.2f}ms" for t in times))

    # the (6,3) codebook enumeration is the heavyweight kernel: 16.7M codewords
    for name, impl in BACKENDS:
        t0 = time.perf_counter()
        impl.grs_det_histogram(
            code63.parity_mul_tables(), cands.dets2, cands.cross, 3, 6, max_det
        )
        print(f"{name:>8s} full (6,3) enumeration: {time.perf_counter() - t0:8.2f}s")


if __name__ == "__main__":
    main()
