import csv
import json
import math
import re

import numpy as np
import pytest

from fracwell import cli
from fracwell import gammafn as gf

SCI = re.compile(r"-?\d\.\d{11}e[+-]\d{2}$")


def run(tmp_path, *args, out="out"):
    path = tmp_path / out
    code = cli.main(list(args) + ["--output", str(path)])
    return code, path


def read_csv(path):
    comments = []
    with open(path) as fh:
        rows = []
        for line in fh:
            if line.startswith("#"):
                comments.append(line.rstrip("\n"))
            else:
                rows.append(line)
    return comments, list(csv.DictReader(rows))


# ----------------------------------------------------------------- energy

def test_energy_json_classical(tmp_path):
    code, path = run(tmp_path, "--mode", "energy", "--alpha", "2.0",
                     "--lambda", "1.0", "--format", "json", out="e.json")
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["meta"]["mode"] == "energy"
    assert doc["meta"]["alpha"] == 2.0
    row = doc["rows"][0]
    assert row["E_closed_form"] == -0.25
    assert row["kappa"] == 0.5
    assert row["rel_deviation"] <= 1e-6


def test_energy_csv_formatting(tmp_path):
    code, path = run(tmp_path, "--mode", "energy", "--alpha", "1.5",
                     "--lambda", "0.5", "--format", "csv", out="e.csv")
    assert code == 0
    _, rows = read_csv(path)
    assert len(rows) == 1
    # every numeric cell in fixed 12-significant-digit scientific form
    for cell in rows[0].values():
        assert SCI.match(cell), cell
    assert float(rows[0]["E_closed_form"]) == pytest.approx(-0.5964329867355498,
                                                            rel=1e-11)


def test_energy_rejects_bad_alpha(tmp_path, capsys):
    code = cli.main(["--mode", "energy", "--alpha", "3.0"])
    assert code == 2
    assert "alpha" in capsys.readouterr().err


# ------------------------------------------------------------ wavefunction

def test_wavefunction_csv_classical(tmp_path):
    code, path = run(tmp_path, "--mode", "wavefunction", "--alpha", "2.0",
                     "--lambda", "1.0", "--x-min", "0", "--x-max", "2",
                     "--x-steps", "5", "--format", "csv", out="w.csv")
    assert code == 0
    comments, rows = read_csv(path)
    meta = dict(c.lstrip("# ").split(" = ") for c in comments)
    assert float(meta["E"]) == pytest.approx(-0.25, rel=1e-11)
    assert float(meta["kappa"]) == pytest.approx(0.5, rel=1e-11)
    assert meta["hfox_verified"] == "true"
    assert len(rows) == 5
    # normalized profile: phi(0) = sqrt(kappa)
    assert float(rows[0]["phi_quadrature"]) == pytest.approx(
        math.sqrt(0.5), rel=1e-6)
    for r in rows:
        assert float(r["rel_dev"]) < 1e-6


def test_wavefunction_json_fractional_unverified(tmp_path):
    code, path = run(tmp_path, "--mode", "wavefunction", "--alpha", "1.5",
                     "--lambda", "0.8", "--x-min", "0.5", "--x-max", "3",
                     "--x-steps", "4", "--format", "json", out="w.json")
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["meta"]["hfox_verified"] is False
    for row in doc["rows"]:
        assert np.isfinite(row["rel_dev"])
        assert row["phi_quadrature"] > 0


def test_wavefunction_byte_deterministic(tmp_path):
    args = ["--mode", "wavefunction", "--alpha", "1.8", "--lambda", "0.5",
            "--x-min", "0", "--x-max", "4", "--x-steps", "6",
            "--format", "csv"]
    _, p1 = run(tmp_path, *args, out="w1.csv")
    _, p2 = run(tmp_path, *args, out="w2.csv")
    assert p1.read_bytes() == p2.read_bytes()


# ------------------------------------------------------------------ sweep

def test_sweep_grid_and_determinism(tmp_path):
    args = ["--mode", "sweep", "--sweep-alpha", "1.5,2.0",
            "--sweep-lambda", "0.5,1.0", "--format", "csv"]
    code, p1 = run(tmp_path, *args, out="s1.csv")
    assert code == 0
    _, p2 = run(tmp_path, *args, out="s2.csv")
    assert p1.read_bytes() == p2.read_bytes()
    _, rows = read_csv(p1)
    assert len(rows) == 4
    assert all(r["status"] == "ok" for r in rows)
    assert all(float(r["rel_dev"]) <= 1e-6 for r in rows)


def test_sweep_partial_domain_failure(tmp_path):
    code, path = run(tmp_path, "--mode", "sweep", "--sweep-alpha", "1.2",
                     "--sweep-lambda", "0.5,1.5", "--format", "csv",
                     out="s.csv")
    assert code == 0       # some rows succeeded
    _, rows = read_csv(path)
    status = {r["lambda"]: r["status"] for r in rows}
    assert status["5.00000000000e-01"] == "ok"
    assert status["1.50000000000e+00"] == "domain_error"
    bad = [r for r in rows if r["status"] == "domain_error"][0]
    assert bad["E_closed"] == "" and bad["E_oracle"] == ""


def test_sweep_all_rows_failed(tmp_path):
    code, _ = run(tmp_path, "--mode", "sweep", "--sweep-alpha", "1.2",
                  "--sweep-lambda", "1.5", "--format", "csv", out="s.csv")
    assert code == 3


def test_sweep_requires_a_grid(tmp_path, capsys):
    code = cli.main(["--mode", "sweep"])
    assert code == 2


def test_sweep_colon_grid_syntax(tmp_path):
    code, path = run(tmp_path, "--mode", "sweep", "--sweep-gamma", "0.5:2.0:4",
                     "--alpha", "2.0", "--lambda", "1.0", "--format", "json",
                     out="s.json")
    assert code == 0
    doc = json.loads(path.read_text())
    gammas = [r["gamma"] for r in doc["rows"]]
    assert gammas == pytest.approx(list(np.linspace(0.5, 2.0, 4)))


# --------------------------------------------------------------- validate

def test_validate_all_green(tmp_path):
    code, path = run(tmp_path, "--mode", "validate", "--format", "csv",
                     out="v.csv")
    assert code == 0
    _, rows = read_csv(path)
    assert len(rows) == 20
    assert all(r["passed"] == "true" for r in rows)
    names = {r["name"] for r in rows}
    assert {"delta_unit_mass", "hfox_mellin_exp", "energy_classical_limit",
            "wavefunction_classical_profile"} <= names


def test_validate_catches_corrupted_gamma(tmp_path, monkeypatch, capsys):
    """Negative control: a 1e-4 perturbation of the Lanczos coefficients
    must trip the Mellin cross-checks and flip the exit code."""
    monkeypatch.setattr(gf, "LANCZOS_COEFFS", gf.LANCZOS_COEFFS * (1.0 + 1e-4))
    code, path = run(tmp_path, "--mode", "validate", "--format", "csv",
                     out="v.csv")
    assert code == 1
    _, rows = read_csv(path)
    failed = {r["name"] for r in rows if r["passed"] == "false"}
    assert "hfox_mellin_exp" in failed
    assert "hfox_mellin_rational" in failed
    err = capsys.readouterr().err
    assert "hfox_mellin_exp" in err


# -------------------------------------------------------------- hfox-eval

def test_hfox_eval_exponential(tmp_path):
    code, path = run(tmp_path, "--mode", "hfox-eval", "--hfox", "1,0,0,1;;0:1",
                     "--z", "0.5,1.0,2.0", "--format", "csv", out="h.csv")
    assert code == 0
    _, rows = read_csv(path)
    got = [float(r["value"]) for r in rows]
    assert got == pytest.approx([math.exp(-0.5), math.exp(-1.0), math.exp(-2.0)],
                                rel=1e-10)
    assert all(r["method"] in ("series", "contour") for r in rows)


def test_hfox_eval_rational(tmp_path):
    code, path = run(tmp_path, "--mode", "hfox-eval", "--hfox",
                     "1,1,1,1;0:1;0:1", "--z", "3.0", "--format", "json",
                     out="h.json")
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["rows"][0]["value"] == pytest.approx(0.25, rel=1e-10)


def test_hfox_eval_rejects_invalid_params(capsys):
    code = cli.main(["--mode", "hfox-eval", "--hfox", "0,0,0,1;;0:1"])
    assert code == 2
    assert "invalid H parameters" in capsys.readouterr().err


def test_hfox_eval_rejects_nonpositive_z(capsys):
    code = cli.main(["--mode", "hfox-eval", "--hfox", "1,0,0,1;;0:1",
                     "--z", "-1.0"])
    assert code == 2


# ----------------------------------------------------------- config files

def test_config_file_and_flag_precedence(tmp_path):
    cfgfile = tmp_path / "run.cfg"
    cfgfile.write_text("mode = energy\n"
                       "alpha = 1.5\n"
                       "lambda = 0.5\n"
                       "gamma = 2.0   # overridden below\n")
    code, path = run(tmp_path, "--config", str(cfgfile), "--gamma", "1.0",
                     "--format", "json", out="c.json")
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["meta"]["gamma"] == 1.0     # flag beats file
    assert doc["meta"]["alpha"] == 1.5
    assert doc["rows"][0]["E_closed_form"] == pytest.approx(
        -0.5964329867355498, rel=1e-10)


def test_config_unknown_key(tmp_path, capsys):
    cfgfile = tmp_path / "bad.cfg"
    cfgfile.write_text("alpha = 1.5\nbogus_key = 3\n")
    code = cli.main(["--mode", "energy", "--config", str(cfgfile)])
    assert code == 2
    err = capsys.readouterr().err
    assert "bogus" in err and "2" in err    # key and line number


def test_mode_required(capsys):
    assert cli.main([]) == 2
    assert "mode" in capsys.readouterr().err
