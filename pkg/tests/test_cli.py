import json
import subprocess
import sys

import pytest

from policykit.cli import main


def run(tmp_path, *args):
    return main([*args, "--out", str(tmp_path)])


def test_stimulus_writes_plan(tmp_path, capsys):
    assert run(tmp_path, "stimulus", "--gap", "100", "--group", "a:0.5:0.8", "--group", "b:0.5:0.4") == 0
    doc = json.loads((tmp_path / "stimulus_plan.json").read_text())
    assert doc["total_induced_ad"] == pytest.approx(100)
    assert doc["naive"]["over_stimulates"] is True
    assert "stimulus_plan.csv" in capsys.readouterr().out


def test_game_inline_payoffs(tmp_path):
    assert run(tmp_path, "game", "--payoffs", "3", "3", "0", "5", "5", "0", "1", "1") == 0
    doc = json.loads((tmp_path / "diagnosis.json").read_text())
    assert doc["diagnosis"]["is_tragedy"] is True
    assert (tmp_path / "tax_sweep.csv").exists()


def test_npv_and_charity(tmp_path):
    assert run(tmp_path, "npv", "--i-social", "0.04", "--sweep", "spread", "--grid", "0", "0.01", "0.02") == 0
    assert json.loads((tmp_path / "npv_decision.json").read_text())["passes"] is True
    assert run(tmp_path, "charity") == 0
    assert json.loads((tmp_path / "charity.json").read_text())["response"]["giving"] == pytest.approx(96.0)


def test_missing_data_file_names_path(tmp_path, capsys):
    missing = tmp_path / "nope.csv"
    assert run(tmp_path, "gaps", "--unemployment", str(missing)) == 1
    assert str(missing) in capsys.readouterr().err


def test_malformed_data_file_is_input_error(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("DATE,UNRATE\n1949-01-01,x\n")
    assert run(tmp_path, "gaps", "--unemployment", str(bad)) == 1
    err = capsys.readouterr().err
    assert str(bad) in err and "row 2" in err


def test_invalid_parameter_and_usage_errors(tmp_path):
    assert run(tmp_path, "stimulus", "--group", "a:0.7:0.8") == 1
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 1


def test_config_file_merges_nested(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"npv": {"rates": {"i_social": 0.05}}}))
    assert main(["npv", "--config", str(cfg), "--out", str(tmp_path / "o")]) == 0
    doc = json.loads((tmp_path / "o" / "npv_decision.json").read_text())
    assert doc["costs_npv"] > 0
    assert run(tmp_path, "npv", "--config", str(tmp_path / "missing.json")) == 1


def test_retime_outputs(tmp_path):
    assert run(tmp_path, "retime", "--growth-scheme", "arithmetic") == 0
    rows = (tmp_path / "proposed_schedule.csv").read_text().splitlines()
    assert rows[1].endswith(",0.4") and rows[-1].endswith(",7.25")
    assert (tmp_path / "retime.svg").read_text().startswith("<svg")


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "policykit", "game", "--out", str(tmp_path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
