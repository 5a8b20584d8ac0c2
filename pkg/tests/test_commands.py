# test_commands.py

import json
import logging
import math

import pytest

from asymptotics.expansions import logq_kpz_asymptotic
from det_common.errors import EXIT_IO, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE
from main import main


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_det_csv(capsys):
    code, out, _ = run(capsys, "det", "--x", "1", "--t", "1")
    assert code == EXIT_OK
    header, row = out.splitlines()
    assert header == "model,x,t,log_det,eig_min,eig_max,trunc_estimate,order_used,stable", "unexpected header"
    assert row.startswith("kpz,1,1,-"), "log det should be negative"


def test_det_is_reproducible(capsys):
    _, first, _ = run(capsys, "det", "--x", "2", "--t", "0.5", "--asymptotic")
    _, second, _ = run(capsys, "det", "--x", "2", "--t", "0.5", "--asymptotic")
    assert first == second, "repeated runs should print identical bytes"
    assert "logq_asymptotic,gap" in first.splitlines()[0], "--asymptotic should add the expansion"


def test_det_zero_model_json(capsys):
    code, out, _ = run(capsys, "det", "--model", "zero", "--x", "1", "--t", "1", "--format", "json")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["model"] == "zero" and record["log_det"] == 0, "zero weight should give log det 0"


def test_usage_errors(capsys):
    code, _, err = run(capsys, "det", "--x", "1")
    assert code == EXIT_USAGE and "--t" in err, "missing --t should be reported"
    code, _, err = run(capsys, "det", "--model", "nosuch", "--x", "1", "--t", "1")
    assert code == EXIT_USAGE and "nosuch" in err, "unknown model should be reported"
    code, _, _ = run(capsys, "det", "--x", "1", "--t", "-1")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "det", "--x", "1", "--t", "1", "--order", "4")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "tail", "--s", "10", "--T", "10", "--p", "0.5")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "det", "--model", "cutoff", "--x", "1", "--t", "1")
    assert code == EXIT_USAGE
    with pytest.raises(SystemExit) as excinfo:
        main(["det", "--format", "xml"])
    assert excinfo.value.code == 2, "argparse errors should exit with 2"


def test_numeric_failure(capsys):
    code, _, err = run(capsys, "tw", "--x", "-30")
    assert code == EXIT_NUMERIC and "tw" in err, "a singular determinant should exit with 3"


def test_output_file(tmp_path, capsys):
    path = tmp_path / "tw.csv"
    code, out, _ = run(capsys, "tw", "--x", "8", "--out", str(path))
    assert code == EXIT_OK and out == "", "nothing should reach stdout"
    _, direct, _ = run(capsys, "tw", "--x", "8")
    assert path.read_text(encoding="utf-8") == direct, "file and stdout should match"
    code, _, _ = run(capsys, "tw", "--x", "8", "--out", str(tmp_path / "missing" / "tw.csv"))
    assert code == EXIT_IO


def test_tw_json(capsys):
    _, out, _ = run(capsys, "tw", "--x", "-6", "--format", "json")
    record = json.loads(out)
    assert abs(record["gap"]) < 2e-2, "F_TW(-6) should be near its tail expansion"
    _, out, _ = run(capsys, "tw", "--x", "8", "--format", "json")
    assert json.loads(out)["tail_asymptotic"] is None, "no tail expansion for positive x"


def test_scan_grid(capsys):
    code, out, _ = run(capsys, "scan", "--model", "zero", "--x", "0,1,2", "--t", "0.5,1,2")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 10, "3 x 3 grid should give 9 rows and a header"
    assert lines[0].startswith("index,x,t,regime,log_det"), "unexpected header"
    assert [line.split(",")[0] for line in lines[1:]] == [str(i) for i in range(9)], "rows should be in grid order"


def test_scan_parallel_matches_serial(capsys):
    argv = ("scan", "--model", "zero", "--x", "lin:-1:1:3", "--t", "log:0.5:2:2")
    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--jobs", "2")
    assert serial == parallel, "parallel and serial sweeps should print identical bytes"


def test_scan_tail_axes(capsys):
    code, out, _ = run(capsys, "scan", "--s", "1,2", "--T", "1")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 3 and "big_g" in lines[0], "tail scan should report G"
    code, _, _ = run(capsys, "scan", "--x", "1,2")
    assert code == EXIT_USAGE, "x without t should be rejected"


def test_asymp_kpz(capsys):
    code, out, _ = run(capsys, "asymp", "--x", "10", "--t", "0.5", "--what", "kpz", "--format", "json")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["total"] == logq_kpz_asymptotic(10.0, 0.5).total, "total should round-trip exactly"
    assert "term_leading" in record, "terms should be flattened"


def test_endpoint(capsys):
    code, out, _ = run(capsys, "endpoint", "--x", "20", "--t", "1", "--format", "json")
    assert code == EXIT_OK
    record = json.loads(out)
    assert 0.0 < record["a"] < 1.0 and abs(record["gap"]) < 1e-3, "endpoint should match its expansion"
    assert record["u_endpoint"] == 10.0 * record["a"], "u should be (x / 2t) a"


def test_tail(capsys):
    code, out, _ = run(capsys, "tail", "--s", "10", "--T", "10", "--optimize", "--format", "json")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["lower_log_prob"] < record["upper_log_prob"], "bounds should be ordered"
    assert record["p_used"] >= 1.0 and "expansion_deep_tail" in record


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--x", "10", "--t", "0.01", "--format", "json")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["regime"] == "small_xt" and record["overlap"] is False
    assert math.isfinite(record["u_small_xt"]) and math.isfinite(record["u_asymptotic"])


def test_config_file(tmp_path, capsys):
    path = tmp_path / "run.cfg"
    path.write_text("format = json\n", encoding="utf-8")
    _, out, _ = run(capsys, "tw", "--x", "8", "--config", str(path))
    assert out.startswith("{"), "config file should select JSON"
    _, out, _ = run(capsys, "tw", "--x", "8", "--config", str(path), "--format", "csv")
    assert out.startswith("x,"), "flag should override the config file"
    path.write_text("colour = blue\n", encoding="utf-8")
    code, _, _ = run(capsys, "tw", "--x", "8", "--config", str(path))
    assert code == EXIT_USAGE


def test_verify_identities(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "identities", "--out", str(path))
    report = json.loads(path.read_text(encoding="utf-8"))
    assert code == EXIT_OK and report["passed"] is True, f"identities suite failed: {report}"
    assert {c["name"] for c in report["checks"]} >= {"identities.consistency", "identities.g_identity"}
