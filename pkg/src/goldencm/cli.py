"""Command-line front door: seeded FER sweeps, determinant spectra and
minimum-determinant searches, coding-gain reports, bound checks, and a fast
self-test.  All outputs are data files (CSV / plain text), never plots.

Exit status is nonzero whenever an invariant check fails or a requested
enumeration is refused.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import analysis, backend, montecarlo
from .schemes import SCHEME_NAMES, make_config


def _add_scheme_args(p, include_decoder=True):
    p.add_argument("--scheme", choices=SCHEME_NAMES, required=True)
    p.add_argument("--n", type=int, help="RS block length (grs schemes)")
    p.add_argument("--k", type=int, help="RS dimension (grs schemes)")
    p.add_argument("--L", type=int, help="block length for uncoded schemes")
    if include_decoder:
        p.add_argument(
            "--decoder", choices=("ml", "subopt"), default="ml",
            help="decoder for grs_4qam curves",
        )


def _config_from_args(args):
    return make_config(args.scheme, n=args.n, k=args.k, L=args.L)


def cmd_sweep(args) -> int:
    options = {}
    if args.config:
        with open(args.config) as fh:
            options = montecarlo.parse_config_text(fh.read())
    for key in ("scheme", "recipe", "n", "k", "L", "decoder", "snr_db",
                "min_frames", "min_frame_errors", "max_frames", "master_seed",
                "output"):
        value = getattr(args, key, None)
        if value is not None:
            options[key] = str(value)
    if "snr_db" not in options:
        print("error: no snr_db given (flag --snr-db or config file)", file=sys.stderr)
        return 2
    cfg = montecarlo.sweep_from_config(options)
    results = montecarlo.run_sweep(cfg)
    floor_missed = 0
    for r in results:
        note = ""
        if not r.floor_reached:
            note = "  [warning: error floor not reached before max_frames]"
            floor_missed += 1
        print(
            f"{r.scheme:>28s}  snr={r.snr_db:6.2f}dB  frames={r.frames:8d}  "
            f"errors={r.errors:6d}  fer={r.fer:.6g}  ({r.wall_time:.1f}s){note}"
        )
    if cfg.output:
        print(f"wrote {cfg.output}")
    return 0 if floor_missed == 0 else 3


def cmd_spectrum(args) -> int:
    cfg = _config_from_args(args)
    try:
        spec = analysis.det_spectrum(cfg)
    except analysis.EnumerationTooLarge as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    print(f"scheme {spec.scheme}: {spec.codebook_size} codewords")
    print(f"q-series: {spec.q_series(args.terms)}")
    print(f"delta_min = {spec.min_nonzero()} (units of 1/5)")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write("det_delta_units,count\n")
            for key in sorted(spec.histogram):
                fh.write(f"{key},{spec.histogram[key]}\n")
        with open(args.output + ".q.txt", "w") as fh:
            fh.write(spec.q_series(args.terms) + "\n")
        print(f"wrote {args.output} and {args.output}.q.txt")
    return 0


def cmd_dmin(args) -> int:
    cfg = _config_from_args(args)
    try:
        units = analysis.delta_min_search(cfg)
    except analysis.EnumerationTooLarge as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    print(f"delta_min = {units} (units of 1/5) = {units * 0.2:.6g}")
    return 0


_DEFAULT_REFERENCE = {
    "repetition_id": "uncoded_bpsk_mix",
    "repetition_hbar": "uncoded_bpsk_mix",
    "grs_4qam": "uncoded_bpsk",
    "grs_16qam": "uncoded_6bpcu",
}


def cmd_gain(args) -> int:
    cfg = _config_from_args(args)
    ref_name = args.reference or _DEFAULT_REFERENCE.get(args.scheme)
    if ref_name is None:
        print("error: --reference required for uncoded schemes", file=sys.stderr)
        return 2
    ref = make_config(ref_name, L=cfg.L)
    report = analysis.asymptotic_gain(cfg, ref, delta_min_units=args.delta_min_units)
    print(f"scheme:    {args.scheme}  (delta_min {report.delta_min:.6g}, E_S {report.energy})")
    print(f"reference: {ref_name}  (delta_min {report.reference_delta:.6g}, E_S {report.reference_energy})")
    print(f"gamma_as = {report.gamma_as} = {float(report.gamma_as):.6g}  ({report.gamma_db:.2f} dB)")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write("scheme,reference,delta_min,es,reference_delta,reference_es,gamma_as,gamma_db\n")
            fh.write(
                f"{args.scheme},{ref_name},{report.delta_min!r},{report.energy!r},"
                f"{report.reference_delta!r},{report.reference_energy!r},"
                f"{float(report.gamma_as)!r},{report.gamma_db!r}\n"
            )
        print(f"wrote {args.output}")
    return 0


def cmd_bounds(args) -> int:
    cfg = _config_from_args(args)
    try:
        report = analysis.verify_bounds(cfg, samples=args.samples, seed=args.seed)
    except analysis.BoundViolation as exc:
        print(f"BOUND VIOLATION: {exc}", file=sys.stderr)
        return 1
    line = (
        f"{report.scheme}: {report.checked} codewords checked; "
        f"min determinant {report.min_seen_units} delta-units, "
        f"coset bound {report.coset_bound_units}, tightest margin {report.tightest_margin}"
    )
    print(line)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(line + "\n")
        print(f"wrote {args.output}")
    return 0


def _selftest_checks():
    from . import algebra, quotient, rs_gf256
    from .decoders import grs_ml_decode, ml_repetition_decode, repetition_bits_from_decision
    from .channel import NoiseConfig, transmit
    from .schemes import byte_candidates, repetition_codeword_bytes

    yield "reduced discriminant = 25", algebra.reduced_discriminant_check() == 25

    R = __import__("goldencm.golden", fromlist=["generator_matrix"]).generator_matrix()
    yield "generator matrix unitary", float(np.max(np.abs(R @ R.conj().T - np.eye(4)))) < 1e-12

    vals = np.array([-1, 0, 1])
    grid = np.stack(np.meshgrid(*([vals] * 8), indexing="ij"), axis=-1).reshape(-1, 8)
    coords = (grid[:, :4] + 1j * grid[:, 4:]).astype(np.complex128)
    coords = coords[np.any(coords != 0, axis=1)]
    units = algebra.det_sq_table(coords)
    yield "nonvanishing determinant sweep (6560 points)", int(units.min()) == 1

    reps = [algebra.from_coeffs(b & 1, (b >> 1) & 1, (b >> 2) & 1, (b >> 3) & 1) for b in range(16)]
    ok = all(
        quotient.project_mod_1pi(x * y).bits
        == (quotient.project_mod_1pi(x) * quotient.project_mod_1pi(y)).bits
        for x in reps
        for y in reps
    )
    yield "mod-(1+i) projection is a ring homomorphism", ok

    cid = analysis.det_spectrum(make_config("repetition_id"))
    chb = analysis.det_spectrum(make_config("repetition_hbar"))
    ok = all(cid.histogram.get(kk) == vv for kk, vv in analysis.REPETITION_SPECTRUM_LEADING.items())
    ok &= all(chb.histogram.get(kk) == vv for kk, vv in analysis.TWISTED_SPECTRUM_LEADING.items())
    yield "repetition determinant spectra (frozen leading terms)", ok

    rng = np.random.default_rng(7)
    ok = True
    for (n, k) in [(4, 2), (6, 3), (8, 4), (12, 6), (8, 6), (16, 12), (24, 18)]:
        code = rs_gf256.RSCode(n, k)
        for _ in range(100):
            msg = rng.integers(0, 256, k).tolist()
            recv = code.encode(msg)
            for pos in rng.choice(n, code.t, replace=False):
                recv[pos] ^= int(rng.integers(1, 256))
            if code.decode(recv) != msg:
                ok = False
    yield "RS t-error correction (all configured codes)", ok

    cands = byte_candidates()
    noise = NoiseConfig(0.0)
    ok = True
    for trial in range(5):
        frng = np.random.default_rng(100 + trial)
        H = (frng.standard_normal((2, 2)) + 1j * frng.standard_normal((2, 2))) / np.sqrt(2)
        code = rs_gf256.RSCode(4, 2)
        msg = frng.integers(0, 256, 2).tolist()
        Y = transmit(cands.centered[code.encode(msg)], H, noise, frng)
        ok &= grs_ml_decode(Y, H, code) == msg
        bits = frng.integers(0, 2, 12).tolist()
        b1, b2 = repetition_codeword_bytes(bits, "hbar")
        Y = transmit(cands.centered[[b1, b2]], H, noise, frng)
        ok &= repetition_bits_from_decision(*ml_repetition_decode(Y, H, "hbar")) == bits
    yield "noiseless end-to-end round trips", ok


def cmd_selftest(args) -> int:
    failures = 0
    for name, ok in _selftest_checks():
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        if not ok:
            failures += 1
    print(f"backend: {backend.BACKEND_NAME}")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goldencm",
        description="Golden-code space-time coded modulation simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="run a seeded FER sweep, emit CSV")
    p.add_argument("--config", help="key = value config file")
    p.add_argument("--scheme", choices=SCHEME_NAMES)
    p.add_argument("--recipe", choices=("repetition", "grs_ml", "suboptimal", "qam16"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--L", type=int)
    p.add_argument("--decoder", choices=("ml", "subopt"))
    p.add_argument("--snr-db", dest="snr_db", help="comma-separated dB list")
    p.add_argument("--min-frames", dest="min_frames", type=int)
    p.add_argument("--min-errors", dest="min_frame_errors", type=int)
    p.add_argument("--max-frames", dest="max_frames", type=int)
    p.add_argument("--seed", dest="master_seed", type=int)
    p.add_argument("--output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("spectrum", help="exact determinant spectrum of a scheme")
    _add_scheme_args(p, include_decoder=False)
    p.add_argument("--terms", type=int, default=8)
    p.add_argument("--output")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("dmin", help="exhaustive minimum-determinant search")
    _add_scheme_args(p, include_decoder=False)
    p.set_defaults(func=cmd_dmin)

    p = sub.add_parser("gain", help="asymptotic coding gain vs a reference")
    _add_scheme_args(p, include_decoder=False)
    p.add_argument("--reference", choices=SCHEME_NAMES)
    p.add_argument("--delta-min-units", dest="delta_min_units", type=int,
                   help="override the design minimum determinant (delta units)")
    p.add_argument("--output")
    p.set_defaults(func=cmd_gain)

    p = sub.add_parser("bounds", help="check determinant bounds on codewords")
    _add_scheme_args(p, include_decoder=False)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("selftest", help="fast invariant suite; nonzero exit on failure")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
