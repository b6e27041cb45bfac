"""Runner, config parsing, CLI subcommands, determinism of artifacts."""

import json
import os
import subprocess
import sys

from charlab import runner, scenarios


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "charlab", *args], capture_output=True, text=True
    )


def read_tree(out_dir):
    data = {}
    for name in sorted(os.listdir(out_dir)):
        with open(os.path.join(out_dir, name), "rb") as fh:
            data[name] = fh.read()
    return data


def test_list_scenarios_stable():
    names = [name for name, _ in scenarios.list_scenarios()]
    assert names == sorted(names)
    for required in ("fk-sums", "inverse-series", "hyperbola", "reconstruct-q", "reduced-model", "pgl2-ratios"):
        assert required in names
    assert scenarios.list_scenarios() == scenarios.list_scenarios()


def test_config_loading(tmp_path):
    cfg = tmp_path / "exp.ini"
    cfg.write_text(
        "[experiment]\nscenario = fk-sums\nseed = 11\n\n[params]\nR = 8\nk_max = 3\n"
    )
    config = runner.load_config(str(cfg))
    assert config.scenario == "fk-sums"
    assert config.seed == 11
    assert config.params["R"] == "8"  # option names keep their case
    assert config.params["k_max"] == "3"


def test_malformed_config_exit_code(tmp_path):
    cfg = tmp_path / "bad.ini"
    cfg.write_text("[experiment]\nscenario = fk-sums\nseed = not-a-number\n")
    assert runner.run(config=str(cfg), out=str(tmp_path / "out")) == 2
    missing = runner.run(config=str(tmp_path / "nope.ini"), out=str(tmp_path / "out"))
    assert missing == 2


def test_unknown_scenario_is_parse_error(tmp_path):
    assert runner.run(scenario="no-such-thing", out=str(tmp_path / "out")) == 2


def test_run_writes_artifacts_and_manifest(tmp_path):
    out = tmp_path / "out"
    code = runner.run(scenario="fk-sums", out=str(out), seed=3)
    assert code == 0
    names = set(os.listdir(out))
    assert {"fk_series.csv", "summary.json", "manifest.json"} <= names
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["scenario"] == "fk-sums"
    assert "fk_series.csv" in manifest["files"]
    summary = json.loads((out / "summary.json").read_text())
    assert summary["ok"] is True


def test_rerun_is_byte_identical(tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert runner.run(scenario="inverse-series", out=str(out1), seed=9) == 0
    assert runner.run(scenario="inverse-series", out=str(out2), seed=9) == 0
    assert read_tree(out1) == read_tree(out2)


def test_parallel_equals_serial(tmp_path):
    out1, out2 = tmp_path / "serial", tmp_path / "parallel"
    assert runner.run(scenario="mixing3-sweep", out=str(out1), seed=5) == 0
    assert runner.run(scenario="mixing3-sweep", out=str(out2), seed=5, jobs=8) == 0
    assert read_tree(out1) == read_tree(out2)


def test_cli_list():
    res = run_cli("list")
    assert res.returncode == 0
    assert "kloosterman-tower" in res.stdout


def test_cli_identity_subcommands():
    res = run_cli("identity", "power-build", "--n", "2")
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert data["N"] == 4 and data["coeffs"] == ["1", "2", "1", "-1"]
    res = run_cli("identity", "independence", "--n", "2", "--m", "-1")
    assert json.loads(res.stdout)["independent"] is True
    res = run_cli("identity", "mixing3", "--q", "25")
    assert res.returncode == 0 and json.loads(res.stdout)["all_one"] is True
    res = run_cli("identity", "poscorr", "--q", "5", "--N", "2", "--trials", "5")
    assert res.returncode == 0


def test_cli_pattern_subcommands():
    res = run_cli("pattern", "hyperbola3", "--q", "5")
    assert res.returncode == 0 and json.loads(res.stdout)["hits"] == []
    res = run_cli("pattern", "hyperbola-diffset", "--q", "5", "--t", "1", "--size", "4")
    assert json.loads(res.stdout)["num_hits"] == 0
    res = run_cli("pattern", "prod", "--q", "5", "--points", "0,0;1,1;2,3")
    assert res.returncode == 0
    res = run_cli("pattern", "spacetime", "--q", "7", "--z", "3", "--points", "0,0;1,1;2,6;3,2")
    assert res.returncode == 0
    res = run_cli(
        "pattern", "laurent-fs", "--q", "13", "--coeffs", "1:1;-1:1", "--set", "0,2,4,6"
    )
    assert res.returncode == 0


def test_cli_pgl2_subcommands():
    res = run_cli("pgl2", "qset", "--field", "finite:p=5:n=1", "--set", "0,1,2,3")
    assert json.loads(res.stdout)["size"] == 24
    res = run_cli("pgl2", "ratio", "--field", "rational", "--set", "1,2,3,4,5", "--b", "1")
    assert res.returncode == 0
    res = run_cli(
        "pgl2", "section-check", "--field", "rational", "--set", "1,2,1/2,-1,3,1/3", "--b", "2"
    )
    assert res.returncode == 0 and json.loads(res.stdout)["equal"] is True


def test_cli_malformed_literal_exit2(tmp_path):
    cfg = tmp_path / "bad2.ini"
    cfg.write_text("[experiment]\nscenario = kloosterman-tower\n\n[params]\nsched = 1,two,4\n")
    res = run_cli("run", "--config", str(cfg), "--out", str(tmp_path / "o"))
    assert res.returncode == 2


def test_cap_is_surfaced_cleanly(tmp_path):
    # a cap too small for the sweep is reported as a failed run, not a crash
    code = runner.run(scenario="mixing3-sweep", out=str(tmp_path / "o"), cap=100)
    assert code == 1
