"""Command-line surface: exit codes, report schemas, config handling."""

import json
import math
import subprocess
import sys

import pytest

CMD = [sys.executable, "-m", "zenopdc"]


def run(*args, **kwargs):
    return subprocess.run(
        [*CMD, *args], capture_output=True, text=True, timeout=120, **kwargs
    )


def test_simulate_default_report():
    proc = run("simulate", "--gamma", "0.5", "--kappa", "1", "--length", "1")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["command"] == "simulate"
    assert report["engine"] == "exact"
    assert report["params"] == {"gamma": 0.5, "kappa": 1.0, "delta": 0.0, "length": 1.0}
    assert report["n_s"] == pytest.approx(0.2485385524325554, abs=1e-12)
    assert report["n_s"] == pytest.approx(report["n_i"] + report["n_b"], abs=1e-12)
    assert report["symplectic_residual"] <= 1e-10
    assert report["branch"] is None


def test_simulate_engines_agree():
    outs = {}
    for engine in ("exact", "ode", "closed-form"):
        proc = run("simulate", "--engine", engine, "--gamma", "0.5", "--kappa", "1")
        assert proc.returncode == 0
        outs[engine] = json.loads(proc.stdout)
    assert outs["ode"]["n_s"] == pytest.approx(outs["exact"]["n_s"], abs=1e-8)
    assert outs["closed-form"]["n_s"] == pytest.approx(outs["exact"]["n_s"], abs=1e-9)
    assert outs["closed-form"]["symplectic_residual"] is None
    assert outs["closed-form"]["branch"] == "trigonometric"


def test_simulate_zero_gain_is_all_zeros():
    proc = run("simulate", "--gamma", "0", "--kappa", "3", "--delta", "2")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["n_s"] == report["n_i"] == report["n_b"] == 0.0


def test_simulate_closed_form_needs_special_case():
    proc = run("simulate", "--engine", "closed-form", "--kappa", "2", "--delta", "3")
    assert proc.returncode == 3
    assert "closed-form" in proc.stderr


def test_invalid_parameter_exits_2():
    proc = run("simulate", "--gamma", "-1")
    assert proc.returncode == 2
    assert "gamma" in proc.stderr


def test_unknown_config_key_exits_2(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"gamma": 0.5, "gammma": 1.0}))
    proc = run("simulate", "--config", str(cfg))
    assert proc.returncode == 2
    assert "gammma" in proc.stderr


def test_missing_config_exits_2():
    proc = run("simulate", "--config", "nope.json")
    assert proc.returncode == 2


def test_flags_override_config(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"gamma": 0.7, "kappa": 2.0}))
    proc = run("simulate", "--config", str(cfg), "--gamma", "0.5")
    report = json.loads(proc.stdout)
    assert report["params"]["gamma"] == 0.5  # flag wins
    assert report["params"]["kappa"] == 2.0  # config fills the rest


def test_simulate_rejects_csv():
    proc = run("simulate", "--format", "csv")
    assert proc.returncode == 2


def test_classify_report_and_hint():
    proc = run("classify", "--gamma", "0.5", "--kappa", "4", "--delta", "5")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["regime"] == "oscillatory"
    assert report["coefficients"] == {"c2": 10.0, "c1": 9.25, "c0": 1.25}
    assert len(report["roots"]) == 3
    assert "regime: oscillatory" in proc.stderr
    k1, k2 = report["boundary_kappas"]
    assert k1 == pytest.approx(5.6961449956848424, abs=1e-9)
    assert k2 == pytest.approx(4.278309501208921, abs=1e-9)

    proc = run("classify", "--gamma", "0.5", "--kappa", "0", "--delta", "5")
    assert proc.returncode == 3
    assert "kappa != 0" in proc.stderr


def test_classify_detuned_examples():
    inside = run("classify", "--gamma", "0.5", "--kappa", "5", "--delta", "5")
    assert json.loads(inside.stdout)["regime"] == "hyperbolic"
    below = run("classify", "--gamma", "0.5", "--kappa", "2", "--delta", "5")
    assert json.loads(below.stdout)["regime"] == "oscillatory"


def test_sweep_json_report(tmp_path):
    cfg = tmp_path / "sweep.json"
    cfg.write_text(
        json.dumps(
            {
                "fixed": {"gamma": 0.5, "length": 1.0},
                "axis1": {"name": "kappa", "start": 0.0, "stop": 2.0, "count": 3},
                "axis2": {"name": "delta", "start": 0.0, "stop": 1.0, "count": 2},
            }
        )
    )
    proc = run("sweep", "--config", str(cfg))
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["engine"] == "numeric"
    assert doc["failures"] == 0
    assert len(doc["values"]) == 3 and len(doc["values"][0]) == 2
    assert doc["fixed"]["gamma"] == 0.5 and doc["fixed"]["kappa"] == 0.0


def test_sweep_csv_format(tmp_path):
    cfg = tmp_path / "sweep.json"
    cfg.write_text(
        json.dumps(
            {
                "fixed": {"gamma": 0.5},
                "axis1": {"name": "kappa", "start": 0.0, "stop": 2.0, "count": 3},
                "axis2": {"name": "length", "start": 0.0, "stop": 1.0, "count": 2},
            }
        )
    )
    proc = run("sweep", "--config", str(cfg), "--format", "csv")
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "axis1,axis2,n_s,engine"
    assert len(lines) == 1 + 3 * 2
    first = lines[1].split(",")
    assert float(first[0]) == 0.0 and float(first[1]) == 0.0
    assert float(first[2]) == 0.0 and first[3] == "numeric"


def test_sweep_output_reingests_as_config(tmp_path):
    cfg = tmp_path / "sweep.json"
    cfg.write_text(
        json.dumps(
            {
                "fixed": {"gamma": 0.5, "length": 1.2},
                "axis1": {"name": "kappa", "start": 0.0, "stop": 3.0, "count": 4},
                "axis2": {"name": "delta", "start": -1.0, "stop": 1.0, "count": 3},
            }
        )
    )
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run("sweep", "--config", str(cfg), "--out", str(a)).returncode == 0
    assert run("sweep", "--config", str(a), "--out", str(b)).returncode == 0
    assert a.read_bytes() == b.read_bytes()


def test_sweep_failures_exit_4(tmp_path):
    cfg = tmp_path / "sweep.json"
    cfg.write_text(
        json.dumps(
            {
                "fixed": {"length": 2.5},
                "axis1": {"name": "gamma", "start": 200.0, "stop": 500.0, "count": 2},
                "axis2": {"name": "length", "start": 2.5, "stop": 3.0, "count": 2},
            }
        )
    )
    out = tmp_path / "grid.json"
    proc = run("sweep", "--config", str(cfg), "--out", str(out))
    assert proc.returncode == 4
    doc = json.loads(out.read_text())  # artifact still written
    assert doc["failures"] == 4
    assert all(math.isnan(v) for row in doc["values"] for v in row)
    assert all(tag == "failed" for row in doc["provenance"] for tag in row)


def test_bundled_configs_resolve():
    for name in ("fig2", "fig3.json"):
        proc = run("sweep", "--config", name, "--format", "csv")
        assert proc.returncode == 0
        assert proc.stdout.startswith("axis1,axis2,n_s,engine")


def test_dressed_check_seeded():
    for seed in ("0", "1234"):
        proc = run("dressed-check", "--seed", seed)
        assert proc.returncode == 0
        report = json.loads(proc.stdout)
        assert report["passed"] is True
        assert report["residual"] <= report["tolerance"] == 1e-8
        assert report["qpm"]["ratio"] == pytest.approx(
            math.pi / (2.0 * math.sqrt(2.0)), abs=1e-12
        )


def test_dressed_check_flags():
    proc = run("dressed-check", "--gamma", "0.5", "--kappa", "5", "--delta", "5", "--length", "1.5")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["direct"]["n_s"] == pytest.approx(report["dressed"]["n_s"], abs=1e-9)


def test_ridge_json_and_fit():
    proc = run("ridge", "--gamma", "0.5", "--length", "1.5", "--delta", "3:5:3")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert [p["delta"] for p in report["points"]] == [3.0, 4.0, 5.0]
    assert report["fit"]["slope"] == pytest.approx(1.0, abs=0.1)
    for p in report["points"]:
        assert abs(p["kappa_opt"] - p["delta"]) <= math.sqrt(2.0) * 0.5


def test_ridge_csv_single_delta():
    proc = run("ridge", "--delta", "5", "--format", "csv")
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "delta,kappa_opt,n_s_max"
    assert len(lines) == 2
    assert float(lines[1].split(",")[0]) == 5.0


def test_ridge_bad_range_exits_2():
    assert run("ridge", "--delta", "5:3:4").returncode == 2
    assert run("ridge", "--delta", "1:2").returncode == 2
    assert run("ridge").returncode == 2


def test_out_file_matches_stdout(tmp_path):
    out = tmp_path / "report.json"
    direct = run("simulate", "--gamma", "0.5")
    filed = run("simulate", "--gamma", "0.5", "--out", str(out))
    assert filed.returncode == 0 and filed.stdout == ""
    assert out.read_text() == direct.stdout
