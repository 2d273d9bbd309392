import json
import subprocess
import sys


def run_cli(*args, cwd=None):
    proc = subprocess.run(
        [sys.executable, "-m", "plethlab.cli", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )
    return proc


def records(proc):
    return [json.loads(line) for line in proc.stdout.splitlines()]


def test_coeff_command():
    proc = run_cli("coeff", "--nu", "4", "--lambda", "2", "--mu", "2")
    assert proc.returncode == 0
    (rec,) = records(proc)
    assert rec["command"] == "coeff"
    assert rec["output"] == 1
    assert rec["inputs"] == {"nu": "4", "lambda": "2", "mu": "2"}
    assert rec["engine"].startswith("plethlab-")
    assert "wall_ms" not in rec


def test_coeff_with_oracle_cross_check():
    proc = run_cli("coeff", "--nu", "2,2", "--lambda", "2", "--mu", "1,1", "--oracle")
    assert proc.returncode == 0
    (rec,) = records(proc)
    assert rec["verification"]["ok"] is True


def test_lr_command():
    proc = run_cli("lr", "--nu", "3,2,1", "--lambda", "2,1", "--mu", "2,1")
    assert proc.returncode == 0
    assert records(proc)[0]["output"] == 2


def test_plethysm_command():
    proc = run_cli("plethysm", "--lambda", "1,1", "--mu", "2", "--oracle")
    assert proc.returncode == 0
    (rec,) = records(proc)
    assert rec["output"]["expansion"] == {"3,1": 1}
    assert rec["verification"]["ok"] is True


def test_sequence_command_matches_known_family():
    proc = run_cli(
        "sequence", "--sigma", "2,1", "--tau", "2,1", "--l", "1", "--m", "1",
        "--jmax", "4",
    )
    assert proc.returncode == 0
    (rec,) = records(proc)
    out = rec["output"]
    assert out["values"] == [1, 1, 1, 1, 1]
    assert out["stabilization_index"] == 0
    assert out["window_confirmed"] is True


def test_sequence_csv_format():
    proc = run_cli(
        "sequence", "--sigma", "4", "--tau", "2", "--l", "2", "--m", "2",
        "--jmax", "2", "--format", "csv",
    )
    assert proc.returncode == 0
    assert proc.stdout == "j,value\n0,1\n1,1\n2,1\n"


def test_usage_errors_exit_2():
    assert run_cli("coeff", "--nu", "1,2", "--lambda", "2", "--mu", "2").returncode == 2
    assert run_cli("coeff", "--nu", "4", "--lambda", "2").returncode == 2
    assert run_cli("nonsense").returncode == 2
    assert (
        run_cli("sequence", "--sigma", "1", "--tau", "1", "--l", "3", "--m", "2").returncode
        == 2
    )


def test_scan_outputs_are_byte_identical():
    args = ("scan", "--tau-sizes", "0,1", "--m", "2", "--jmax", "6", "--window", "3")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout
    assert records(a)[-1]["aggregate"]["not_stabilized"] == []


def test_scan_emits_conjectured_violation_but_passes():
    proc = run_cli("scan", "--tau-sizes", "0", "--m", "2", "--jmax", "5", "--window", "3")
    assert proc.returncode == 0
    warnings = [r for r in records(proc) if "warning" in r]
    assert len(warnings) == 1
    assert warnings[0]["cell"]["l"] == 1 and warnings[0]["cell"]["m"] == 2


def test_timing_flag_adds_wall_time():
    proc = run_cli("--timing", "coeff", "--nu", "4", "--lambda", "2", "--mu", "2")
    (rec,) = records(proc)
    assert isinstance(rec["wall_ms"], int)


def test_cache_round_trip_and_transparency(tmp_path):
    cache = tmp_path / "coefficients.tsv"
    base = run_cli("verify")
    with_cold_cache = run_cli("--cache", str(cache), "verify")
    assert cache.exists() and cache.stat().st_size > 0
    with_warm_cache = run_cli("--cache", str(cache), "verify")
    assert base.returncode == 0
    assert base.stdout == with_cold_cache.stdout == with_warm_cache.stdout
    for line in cache.read_text(encoding="utf-8").splitlines():
        key, value = line.split("\t")
        assert len(key.split("|")) == 3
        int(value)


def test_corrupt_cache_is_ignored_with_warning(tmp_path):
    cache = tmp_path / "coefficients.tsv"
    cache.write_text("not a record\n4|2|2\t1\nbad|key\tNaN\n", encoding="utf-8")
    proc = run_cli("--cache", str(cache), "coeff", "--nu", "4", "--lambda", "2", "--mu", "2")
    assert proc.returncode == 0
    assert records(proc)[0]["output"] == 1
    assert "corrupt cache line" in proc.stderr


def test_records_round_trip_through_serialization():
    proc = run_cli("coeff", "--nu", "4", "--lambda", "2", "--mu", "2")
    line = proc.stdout.strip()
    rec = json.loads(line)
    assert json.dumps(rec, sort_keys=True, separators=(",", ":")) == line
