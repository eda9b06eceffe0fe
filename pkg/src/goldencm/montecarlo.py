"""Seeded frame-error-rate sweeps.

One frame = one Golden block: draw a message, modulate, pass through a
fresh channel realization (H constant over the block), decode, and count
any message discrepancy as a frame error.  Every frame owns a private
generator seeded by (master_seed, crc32(curve label), snr in millidB,
frame index), so results are bit-reproducible and independent of execution
order; points at the same label/SNR/seed coincide across sweeps.
"""

from __future__ import annotations

import csv
import time
import zlib
from dataclasses import dataclass

import numpy as np

from .channel import NoiseConfig, draw_channel, make_rng, noise_for_snr, transmit
from .decoders import (
    grs_ml_decode,
    ml16_decode,
    ml_repetition_decode,
    ml_uncoded_decode,
    repetition_bits_from_decision,
    suboptimal_decode,
)
from .schemes import (
    SchemeConfig,
    UNCODED_MIX,
    byte_candidates,
    make_config,
    qam16_parts,
    repetition_codeword_bytes,
    uncoded_candidates,
)


@dataclass(frozen=True)
class SchemeRun:
    """One curve: a scheme configuration plus the decoder driving it."""

    config: SchemeConfig
    decoder: str = "ml"

    @property
    def label(self) -> str:
        cfg = self.config
        if cfg.scheme == "grs_4qam":
            return f"grs_4qam({cfg.rs.n},{cfg.rs.k},{self.decoder})"
        if cfg.scheme == "grs_16qam":
            return f"grs_16qam({cfg.rs.n},{cfg.rs.k})"
        if cfg.scheme in UNCODED_MIX:
            return f"{cfg.scheme}(L={cfg.L})"
        return cfg.scheme


def make_run(scheme: str, n=None, k=None, L=None, decoder: str = "ml") -> SchemeRun:
    if scheme == "grs_4qam" and decoder not in ("ml", "subopt"):
        raise ValueError(f"grs_4qam decoder must be 'ml' or 'subopt', got {decoder!r}")
    return SchemeRun(make_config(scheme, n=n, k=k, L=L), decoder)


@dataclass(frozen=True)
class PointResult:
    scheme: str
    snr_db: float
    frames: int
    errors: int
    fer: float
    seed: int
    wall_time: float = 0.0
    floor_reached: bool = True


@dataclass(frozen=True)
class SweepConfig:
    runs: tuple
    snr_db: tuple
    min_frames: int = 1000
    min_frame_errors: int = 100
    max_frames: int = 10_000_000
    master_seed: int = 1
    output: str | None = None


# --- per-scheme frame simulation -------------------------------------------


class _FrameSim:
    def __init__(self, run: SchemeRun):
        cfg = run.config
        self.cfg = cfg
        self.decoder = run.decoder
        scheme = cfg.scheme
        if scheme in UNCODED_MIX:
            self.cands = uncoded_candidates(scheme)
        elif scheme in ("repetition_id", "repetition_hbar"):
            self.variant = "identity" if scheme == "repetition_id" else "hbar"
            self.bytes_tab = byte_candidates()
        elif scheme == "grs_4qam":
            self.bytes_tab = byte_candidates()
        elif scheme == "grs_16qam":
            self.parts = qam16_parts()
        else:
            raise ValueError(scheme)

    def frame_error(self, rng: np.random.Generator, noise: NoiseConfig) -> bool:
        cfg = self.cfg
        scheme = cfg.scheme
        if scheme in UNCODED_MIX:
            msg = rng.integers(0, len(self.cands.coords), cfg.L)
            X = self.cands.centered[msg]
            H = draw_channel(rng, cfg.L).H
            Y = transmit(X, H, noise, rng)
            dec = ml_uncoded_decode(Y, H, self.cands.centered)
            return not np.array_equal(dec, msg)
        if scheme in ("repetition_id", "repetition_hbar"):
            bits = rng.integers(0, 2, 12).tolist()
            b1, b2 = repetition_codeword_bytes(bits, self.variant)
            X = self.bytes_tab.centered[[b1, b2]]
            H = draw_channel(rng, 2).H
            Y = transmit(X, H, noise, rng)
            dec = repetition_bits_from_decision(*ml_repetition_decode(Y, H, self.variant))
            return dec != bits
        if scheme == "grs_4qam":
            code = cfg.rs
            msg = rng.integers(0, 256, code.k).tolist()
            X = self.bytes_tab.centered[code.encode(msg)]
            H = draw_channel(rng, code.n).H
            Y = transmit(X, H, noise, rng)
            if self.decoder == "subopt":
                dec = suboptimal_decode(Y, H, code)
            else:
                dec = grs_ml_decode(Y, H, code)
            return dec != msg
        code = cfg.rs
        msg = rng.integers(0, 256, code.k).tolist()
        unc = rng.integers(0, 256, code.n).tolist()
        X = self.parts.base[code.encode(msg)] + self.parts.offsets[unc]
        H = draw_channel(rng, code.n).H
        Y = transmit(X, H, noise, rng)
        decision = ml16_decode(Y, H, code)
        return decision.message != msg or decision.uncoded != unc


def _point_stream(label: str, snr_db: float) -> int:
    # repr of the float keeps the stream stable across runs and handles inf
    return zlib.crc32(f"{label}@{float(snr_db)!r}".encode())


def run_point(
    run: SchemeRun,
    snr_db: float,
    min_frames: int,
    min_frame_errors: int,
    max_frames: int,
    master_seed: int,
) -> PointResult:
    sim = _FrameSim(run)
    noise = noise_for_snr(run.config.es, snr_db)
    stream = _point_stream(run.label, snr_db)
    frames = 0
    errors = 0
    t0 = time.perf_counter()
    while True:
        frames += 1
        rng = make_rng(master_seed, stream, frames)
        if sim.frame_error(rng, noise):
            errors += 1
        if frames >= min_frames and errors >= min_frame_errors:
            break
        if frames >= max_frames:
            break
    return PointResult(
        scheme=run.label,
        snr_db=float(snr_db),
        frames=frames,
        errors=errors,
        fer=errors / frames,
        seed=master_seed,
        wall_time=time.perf_counter() - t0,
        floor_reached=errors >= min_frame_errors,
    )


def run_sweep(cfg: SweepConfig):
    results = []
    for run in cfg.runs:
        for snr in cfg.snr_db:
            results.append(
                run_point(
                    run,
                    snr,
                    cfg.min_frames,
                    cfg.min_frame_errors,
                    cfg.max_frames,
                    cfg.master_seed,
                )
            )
    if cfg.output:
        emit_plot_data(results, cfg.output)
    return results


# --- CSV artifacts ----------------------------------------------------------

CSV_HEADER = ["scheme", "snr_db", "frames", "errors", "fer", "seed"]


def emit_plot_data(results, path: str):
    """Write sweep points as CSV: scheme, snr_db, frames, errors, fer, seed."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in results:
            writer.writerow(
                [r.scheme, repr(r.snr_db), r.frames, r.errors, repr(r.fer), r.seed]
            )


def parse_plot_data(path: str):
    out = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {header}")
        for row in reader:
            out.append(
                PointResult(
                    scheme=row[0],
                    snr_db=float(row[1]),
                    frames=int(row[2]),
                    errors=int(row[3]),
                    fer=float(row[4]),
                    seed=int(row[5]),
                )
            )
    return out


def snr_at_fer(results, scheme_label: str, target_fer: float) -> float:
    """SNR where a curve crosses target_fer, by log-linear interpolation."""
    pts = sorted(
        [(r.snr_db, r.fer) for r in results if r.scheme == scheme_label and r.fer > 0]
    )
    if len(pts) < 2:
        raise ValueError(f"not enough nonzero-FER points for {scheme_label!r}")
    for (s0, f0), (s1, f1) in zip(pts, pts[1:]):
        lo, hi = min(f0, f1), max(f0, f1)
        if lo <= target_fer <= hi and f0 != f1:
            t = (np.log10(target_fer) - np.log10(f0)) / (np.log10(f1) - np.log10(f0))
            return float(s0 + t * (s1 - s0))
    raise ValueError(
        f"{scheme_label!r} does not bracket FER {target_fer:g} "
        f"(range {pts[0][1]:.3g}..{pts[-1][1]:.3g})"
    )


# --- figure recipes ---------------------------------------------------------


def recipe_runs(name: str):
    """Preset scheme bundles for the standard side-by-side comparisons:
    repetition vs the 3 bpcu reference, ML vs suboptimal GRS at 2/3 bpcu,
    and the 16-QAM schemes at 6 bpcu."""
    if name == "repetition":
        return (
            make_run("repetition_id"),
            make_run("repetition_hbar"),
            make_run("uncoded_bpsk_mix", L=2),
        )
    if name == "grs_ml":
        return (
            make_run("grs_4qam", 4, 2, decoder="ml"),
            make_run("grs_4qam", 6, 3, decoder="ml"),
            make_run("uncoded_bpsk", L=4),
            make_run("uncoded_bpsk", L=6),
        )
    if name == "suboptimal":
        runs = [make_run("grs_4qam", n, n // 2, decoder="subopt") for n in (4, 8, 12)]
        runs += [make_run("uncoded_bpsk", L=n) for n in (4, 8, 12)]
        runs += [
            make_run("grs_4qam", n, 3 * n // 4, decoder="subopt") for n in (8, 16, 24)
        ]
        runs += [make_run("uncoded_bpsk_mix", L=n) for n in (8, 16, 24)]
        return tuple(runs)
    if name == "qam16":
        return (
            make_run("grs_16qam", 4, 2),
            make_run("grs_16qam", 6, 3),
            make_run("uncoded_6bpcu", L=4),
            make_run("uncoded_6bpcu", L=6),
        )
    raise ValueError(f"unknown recipe {name!r}; have repetition, grs_ml, suboptimal, qam16")


# --- config files -----------------------------------------------------------


def parse_config_text(text: str) -> dict:
    """Plain key = value lines; '#' starts a comment."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def sweep_from_config(options: dict) -> SweepConfig:
    if "recipe" in options:
        runs = recipe_runs(options["recipe"])
    else:
        runs = (
            make_run(
                options["scheme"],
                n=int(options["n"]) if "n" in options else None,
                k=int(options["k"]) if "k" in options else None,
                L=int(options["L"]) if "L" in options else None,
                decoder=options.get("decoder", "ml"),
            ),
        )
    snr = tuple(float(s) for s in options["snr_db"].split(","))
    if not snr:
        raise ValueError("snr_db list must not be empty")
    return SweepConfig(
        runs=runs,
        snr_db=snr,
        min_frames=int(options.get("min_frames", 1000)),
        min_frame_errors=int(options.get("min_frame_errors", 100)),
        max_frames=int(options.get("max_frames", 10_000_000)),
        master_seed=int(options.get("master_seed", 1)),
        output=options.get("output"),
    )
