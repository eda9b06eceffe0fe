import pytest

from goldencm import cli, montecarlo as mc


def run_cli(*argv):
    return cli.main(list(argv))


# --- sweep -------------------------------------------------------------------


def test_noise_off_smoke_sweep(tmp_path, capsys):
    out = tmp_path / "smoke.csv"
    rc = run_cli(
        "sweep", "--scheme", "repetition_id", "--snr-db", "inf",
        "--min-frames", "20", "--min-errors", "1", "--max-frames", "20",
        "--seed", "3", "--output", str(out),
    )
    captured = capsys.readouterr().out
    assert rc == 3  # error floor unreachable without noise -> warned
    assert "fer=0" in captured
    rows = mc.parse_plot_data(str(out))
    assert len(rows) == 1 and rows[0].errors == 0 and rows[0].fer == 0.0


def test_sweep_deterministic_bytes(tmp_path):
    args = [
        "sweep", "--scheme", "uncoded_bpsk", "--L", "2", "--snr-db", "6,8",
        "--min-frames", "300", "--min-errors", "5", "--max-frames", "2000",
        "--seed", "11",
    ]
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert run_cli(*args, "--output", str(out1)) in (0, 3)
    assert run_cli(*args, "--output", str(out2)) in (0, 3)
    assert out1.read_bytes() == out2.read_bytes()


def test_sweep_csv_roundtrip(tmp_path):
    out = tmp_path / "r.csv"
    cfg = mc.SweepConfig(
        runs=(mc.make_run("uncoded_bpsk", L=2),),
        snr_db=(5.0,),
        min_frames=200,
        min_frame_errors=5,
        max_frames=1000,
        master_seed=2,
        output=str(out),
    )
    results = mc.run_sweep(cfg)
    parsed = mc.parse_plot_data(str(out))
    assert len(parsed) == len(results) == 1
    assert parsed[0].scheme == results[0].scheme
    assert parsed[0].snr_db == results[0].snr_db
    assert parsed[0].frames == results[0].frames
    assert parsed[0].errors == results[0].errors
    assert parsed[0].fer == results[0].fer
    assert parsed[0].seed == results[0].seed


def test_sweep_header_contract(tmp_path):
    out = tmp_path / "h.csv"
    mc.emit_plot_data([], str(out))
    assert out.read_bytes() == b"scheme,snr_db,frames,errors,fer,seed\n"
    assert mc.parse_plot_data(str(out)) == []


def test_sweep_config_file(tmp_path):
    cfgfile = tmp_path / "sweep.cfg"
    cfgfile.write_text(
        """
        # repetition reference run
        scheme = repetition_hbar
        snr_db = inf
        min_frames = 10
        min_frame_errors = 1
        max_frames = 10
        master_seed = 4
        """
    )
    rc = run_cli("sweep", "--config", str(cfgfile))
    assert rc == 3  # noise off: floor never reached
    with pytest.raises(ValueError):
        mc.parse_config_text("what is this line")


def test_sweep_requires_snr(capsys):
    assert run_cli("sweep", "--scheme", "repetition_id") == 2


def test_recipes():
    labels = [r.label for r in mc.recipe_runs("repetition")]
    assert labels == ["repetition_id", "repetition_hbar", "uncoded_bpsk_mix(L=2)"]
    labels = [r.label for r in mc.recipe_runs("grs_ml")]
    assert "grs_4qam(4,2,ml)" in labels and "uncoded_bpsk(L=6)" in labels
    assert len(mc.recipe_runs("suboptimal")) == 12
    assert len(mc.recipe_runs("qam16")) == 4
    with pytest.raises(ValueError):
        mc.recipe_runs("fig7")


def test_make_run_validates_decoder():
    with pytest.raises(ValueError):
        mc.make_run("grs_4qam", 4, 2, decoder="viterbi")


# --- analysis subcommands ---------------------------------------------------------


def test_spectrum_command(tmp_path, capsys):
    out = tmp_path / "spec.csv"
    rc = run_cli("spectrum", "--scheme", "repetition_hbar", "--output", str(out))
    assert rc == 0
    stdout = capsys.readouterr().out
    assert "1 + 24q^4 + 61q^8 + 24q^9 + 8q^10 + 74q^12" in stdout
    lines = out.read_text().splitlines()
    assert lines[0] == "det_delta_units,count"
    assert "4,24" in lines
    qtxt = (tmp_path / "spec.csv.q.txt").read_text()
    assert qtxt.startswith("1 + 24q^4")


def test_spectrum_refusal(capsys):
    rc = run_cli("spectrum", "--scheme", "grs_16qam", "--n", "4", "--k", "2")
    assert rc == 2
    assert "refused" in capsys.readouterr().err


def test_dmin_command(capsys):
    rc = run_cli("dmin", "--scheme", "grs_4qam", "--n", "4", "--k", "2")
    assert rc == 0
    assert "delta_min = 16" in capsys.readouterr().out


def test_gain_command(capsys, tmp_path):
    out_file = tmp_path / "gain.csv"
    rc = run_cli(
        "gain", "--scheme", "grs_16qam", "--n", "6", "--k", "3",
        "--output", str(out_file),
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert "12/5" in out and "2.4" in out
    lines = out_file.read_text().splitlines()
    assert lines[0].startswith("scheme,reference,")
    assert lines[1].startswith("grs_16qam,uncoded_6bpcu,")
    rc = run_cli("gain", "--scheme", "repetition_id")
    assert rc == 0
    assert "3/2" in capsys.readouterr().out


def test_bounds_command(capsys, tmp_path):
    out_file = tmp_path / "bounds.txt"
    rc = run_cli("bounds", "--scheme", "repetition_id", "--output", str(out_file))
    assert rc == 0
    assert "4095 codewords checked" in capsys.readouterr().out
    assert "4095 codewords checked" in out_file.read_text()


def test_selftest_command(capsys):
    assert run_cli("selftest") == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out


def test_invalid_arguments():
    with pytest.raises(SystemExit):
        run_cli("sweep", "--scheme", "golden_plus", "--snr-db", "1")
    assert run_cli("dmin", "--scheme", "grs_4qam", "--n", "3", "--k", "5") == 2
