import json
import subprocess
import sys

import pytest

from ietlab.cli import ConfigError, ExperimentConfig, main, parse_target
from ietlab.iet import build_iet, rotation
from ietlab.exactnum import golden_mean, parse_exact
from gmpy2 import mpq


def run_cli(args, cwd):
    return subprocess.run(
        [sys.executable, "-m", "ietlab.cli", *args],
        cwd=cwd,
        capture_output=True,
        text=True,
    )


def test_config_ini_roundtrip():
    cfg = ExperimentConfig(
        experiment="gauge",
        target="rot: alpha=golden",
        parameters={"kind": "rho", "scale": "pow:1", "horizon": "1000"},
        seed=42,
        output="out",
    )
    text = cfg.to_ini()
    cfg2 = ExperimentConfig.from_ini(text)
    assert cfg2 == cfg
    assert ExperimentConfig.from_ini(cfg2.to_ini()) == cfg2


def test_config_json():
    raw = json.dumps(
        {"experiment": "cf", "target": "rot: alpha=golden",
         "parameters": {"depth": 10}, "seed": 1}
    )
    cfg = ExperimentConfig.from_json(raw)
    assert cfg.experiment == "cf" and cfg.parameters["depth"] == "10"
    with pytest.raises(ConfigError):
        ExperimentConfig.from_json('{"experiment": "nope"}')


def test_parse_target():
    t = parse_target("iet: lengths=[1/2,1/4,1/4] perm=[3,2,1]")
    assert t == build_iet([mpq(1, 2), mpq(1, 4), mpq(1, 4)], (3, 2, 1))
    r = parse_target("rot: alpha=sqrt(2)-1")
    assert r == rotation(parse_exact("sqrt(2)-1"))
    assert parse_target("golden") == rotation(golden_mean())
    with pytest.raises(ConfigError):
        parse_target("iet: lengths=[1/2] oops")


def test_cf_golden_payload(tmp_path):
    r = run_cli(["cf", "--alpha", "golden", "--depth", "10", "--out", "cf"], tmp_path)
    assert r.returncode == 0
    rep = json.loads((tmp_path / "cf.json").read_text())
    assert rep["payload"]["q"] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert rep["artifact"]["name"] == "ietlab"


def test_cf_rational_is_property_failure(tmp_path):
    r = run_cli(["cf", "--alpha", "1/3", "--out", "cf"], tmp_path)
    assert r.returncode == 2


def test_usage_error_exit_code(tmp_path):
    r = run_cli(["not-an-experiment"], tmp_path)
    assert r.returncode == 1
    r2 = run_cli(["gauge", "--rot", "golden", "--out", "x"], tmp_path)  # missing kind
    assert r2.returncode == 1


def test_gauge_csv_header_and_determinism(tmp_path):
    args = ["gauge", "--rot", "golden", "--kind", "rho", "--scale", "pow:1",
            "--pairs", "3", "--horizon", "2000", "--seed", "42", "--out", "tr"]
    a = tmp_path / "a"
    b = tmp_path / "b"
    a.mkdir()
    b.mkdir()
    r1 = run_cli(args, a)
    assert r1.returncode == 0, r1.stderr
    r2 = run_cli(args, b)
    assert (a / "tr.csv").read_bytes() == (b / "tr.csv").read_bytes()
    assert (a / "tr.json").read_bytes() == (b / "tr.json").read_bytes()
    header = (a / "tr.csv").read_text().splitlines()[0]
    assert header == "sample_id,x,y,horizon,running_min,argmin"


def test_gauge_thread_env_does_not_change_csv(tmp_path):
    args = ["gauge", "--rot", "golden", "--kind", "psi", "--scale", "pow:1",
            "--pairs", "3", "--horizon", "2000", "--seed", "7", "--out", "tr"]
    a = tmp_path / "a"
    b = tmp_path / "b"
    a.mkdir()
    b.mkdir()
    subprocess.run([sys.executable, "-m", "ietlab.cli", *args], cwd=a,
                   capture_output=True, env={"LAB_THREADS": "1", "PATH": "/usr/bin:/bin"})
    subprocess.run([sys.executable, "-m", "ietlab.cli", *args], cwd=b,
                   capture_output=True, env={"LAB_THREADS": "8", "PATH": "/usr/bin:/bin"})
    assert (a / "tr.csv").read_bytes() == (b / "tr.csv").read_bytes()


def test_mix3_passes_and_writes_report(tmp_path):
    r = run_cli(["mix3", "--alpha", "golden", "--t", "(3-sqrt(5))/2",
                 "--mrange", "6:9", "--cells", "20", "--out", "mix"], tmp_path)
    assert r.returncode == 0, r.stderr
    rep = json.loads((tmp_path / "mix.json").read_text())
    assert all(e["missed_min"] >= 6 for e in rep["payload"]["entries"])


def test_akc_big_integers_as_strings(tmp_path):
    r = run_cli(["akc", "--set", "scale=pow:2", "--k", "3", "--c", "1", "--out", "akc"],
                tmp_path)
    assert r.returncode == 0, r.stderr
    rep = json.loads((tmp_path / "akc.json").read_text())
    # exact rationals travel as "p/q" strings
    assert "/" in rep["payload"]["lower"]


def test_liouville_big_ints(tmp_path):
    r = run_cli(["liouville", "--set", "scale=powlog:1:1", "--k", "3", "--out", "lv"],
                tmp_path)
    assert r.returncode == 0, r.stderr
    rep = json.loads((tmp_path / "lv.json").read_text())
    qs = rep["payload"]["q"]
    assert isinstance(qs[-1], str)  # decimal string for big integers
    assert int(qs[-1]) > 1 << 53


def test_towerbook_cli(tmp_path):
    r = run_cli(["towerbook", "--m", "1000,10000000,1000000000000000",
                 "--n", "10,1000,100000", "--k", "3", "--out", "tb"], tmp_path)
    assert r.returncode == 0, r.stderr
    rep = json.loads((tmp_path / "tb.json").read_text())
    assert "cond1" in rep["payload"]["conditions"]
    r2 = run_cli(["towerbook", "--m", "10,100", "--n", "1,2", "--k", "5", "--out", "t2"],
                 tmp_path)
    assert r2.returncode == 1  # k mismatch is a usage error


def test_tower_and_induce_cli(tmp_path):
    r = run_cli(["induce", "--rot", "golden", "--interval", "0,golden", "--out", "ind"],
                tmp_path)
    assert r.returncode == 0
    rep = json.loads((tmp_path / "ind.json").read_text())
    assert rep["payload"]["r"] == 2
    r2 = run_cli(["tower", "--rot", "golden", "--eps", "1/10", "--out", "tw"], tmp_path)
    assert r2.returncode == 0
    rep2 = json.loads((tmp_path / "tw.json").read_text())
    assert rep2["payload"]["certificate"]["status"] == "certified"


def test_plot_svg_deterministic(tmp_path):
    args = ["gauge", "--rot", "golden", "--kind", "rho", "--scale", "pow:1",
            "--pairs", "2", "--horizon", "2000", "--seed", "1", "--out", "tr"]
    run_cli(args, tmp_path)
    p1 = run_cli(["plot", "--set", "csv=tr.csv", "--kind", "trace",
                  "--set", "hline=0.4472135954999579", "--out", "p1.svg"], tmp_path)
    assert p1.returncode == 0, p1.stderr
    p2 = run_cli(["plot", "--set", "csv=tr.csv", "--kind", "trace",
                  "--set", "hline=0.4472135954999579", "--out", "p2.svg"], tmp_path)
    assert (tmp_path / "p1.svg").read_bytes() == (tmp_path / "p2.svg").read_bytes()
    svg = (tmp_path / "p1.svg").read_text()
    assert svg.startswith("<svg") and "viewBox" in svg and "0.447214" in svg


def test_plot_bad_csv(tmp_path):
    (tmp_path / "empty.csv").write_text("n,card\n")
    r = run_cli(["plot", "--set", "csv=empty.csv", "--kind", "loglog", "--out", "e.svg"],
                tmp_path)
    assert r.returncode == 1


def test_config_file_flow(tmp_path):
    cfg = ExperimentConfig(
        experiment="tau",
        target="rot: alpha=sqrt(2)-1",
        parameters={"nmax": "64"},
        seed=3,
        output="tau",
    )
    (tmp_path / "exp.ini").write_text(cfg.to_ini())
    r = run_cli(["tau", "--config", "exp.ini"], tmp_path)
    assert r.returncode == 0, r.stderr
    rep = json.loads((tmp_path / "tau.json").read_text())
    assert rep["payload"]["tau_hat"] == 0.0
    # JSON config variant
    (tmp_path / "exp.json").write_text(json.dumps({
        "experiment": "tau", "target": "rot: alpha=sqrt(2)-1",
        "parameters": {"nmax": 64}, "seed": 3, "output": "tau2"}))
    r2 = run_cli(["tau", "--config", "exp.json"], tmp_path)
    assert r2.returncode == 0, r2.stderr


def test_main_inprocess_unknown():
    assert main([]) == 1
