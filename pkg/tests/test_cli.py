import io
import json
import subprocess
import sys

import pytest

from stablelaws.cli import fmt, main, parse_grid
from stablelaws.monotone import monotone_modes
from stablelaws import StableParams


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_modes_example():
    code, out, _ = run("modes", "--family", "boolean", "--alpha", "2", "--rho", "0.5")
    data = json.loads(out)
    assert code == 0 and data["modality"] == "Bimodal"
    assert [m["location"] for m in data["modes"]] == [-1.0, 1.0]
    assert data["params"]["theta"] == pytest.approx(StableParams.boolean(2, 0.5).theta)


def test_info_example():
    code, out, _ = run("info", "--family", "monotone", "--alpha", "1", "--rho", "0.5")
    data = json.loads(out)
    assert code == 0
    assert data["decomposition"]["atoms"] == []
    assert [p["kernel"] for p in data["decomposition"]["pieces"]] == ["cauchy"]
    assert data["modes"]["modality"] == "Unimodal"
    assert [m["location"] for m in data["modes"]["modes"]] == [0.0]
    assert "theta" in data["params"]


def test_phase_diagram_example():
    code, out, _ = run("phase-diagram", "--family", "monotone", "--na", "3", "--nr", "3")
    lines = out.strip().split("\n")
    assert code == 0 and lines[0] == "alpha,rho,modality,mode1,mode2"
    rows = [l.split(",") for l in lines[1:]]
    assert len(rows) == 9
    for a, r, modality, *_ in rows:
        assert modality == monotone_modes(StableParams.monotone(float(a), float(r))).modality.value


def test_pdf_csv_and_inf_marker():
    code, out, _ = run("pdf", "--family", "boolean", "--alpha", "0.5", "--rho", "0.5",
                       "--x", "0", "1")
    lines = out.strip().split("\n")
    assert code == 0 and lines[0] == "x,pdf"
    assert lines[1] == "0,inf"
    assert float(lines[2].split(",")[1]) > 0


def test_cdf_grid_and_json():
    code, out, _ = run("cdf", "--family", "boolean", "--alpha", "2", "--rho", "0.5",
                       "--grid=-2:2:5", "--format", "json")
    data = json.loads(out)
    assert [p["cdf"] for p in data["points"]] == [0.0, 0.5, 0.5, 1.0, 1.0]
    assert "theta" in data["params"]


def test_quantile_and_sample():
    code, out, _ = run("quantile", "--family", "boolean", "--alpha", "2", "--rho", "0.5",
                       "--p", "0.25", "0.75")
    assert code == 0 and out.strip().split("\n")[1:] == ["0.25,-1", "0.75,1"]
    args = ("sample", "--family", "monotone", "--alpha", "1.5", "--rho", "0.3",
            "--n", "20", "--seed", "5")
    first, second = run(*args), run(*args)
    assert first == second and len(first[1].strip().split("\n")) == 20


def test_csv_is_deterministic():
    args = ("phase-diagram", "--family", "boolean", "--na", "6", "--nr", "5")
    assert run(*args)[1] == run(*args)[1]


@pytest.mark.parametrize("argv", [
    ("pdf", "--family", "monotone", "--alpha", "1", "--rho", "0.3", "--x", "0"),
    ("pdf", "--family", "boolean", "--alpha", "3", "--rho", "0.5", "--x", "0"),
    ("pdf", "--family", "boolean", "--alpha", "1", "--rho", "0.5", "--grid", "1:0:3"),
    ("quantile", "--family", "boolean", "--alpha", "1", "--rho", "0.5", "--p", "1"),
    ("sample", "--family", "boolean", "--alpha", "1", "--rho", "0.5", "--n", "0"),
    ("bogus",),
])
def test_usage_errors_exit_2(argv):
    code, _, err = run(*argv)
    assert code == 2 and err


def test_verify_exit_codes():
    code, out, _ = run("verify", "--suite", "reflection")
    assert code == 0 and out.rstrip().endswith("0 failed")
    code, out, _ = run("verify", "--suite", "normalization", "--inject-fault", "1.01")
    assert code == 1 and "FAIL" in out


def test_verify_bad_env_tolerance(monkeypatch):
    monkeypatch.setenv("STABLE_LAWS_TOL", "nope")
    assert run("verify", "--suite", "reflection")[0] == 2


def test_helpers():
    assert fmt(float("inf")) == "inf" and fmt(0.1) == "0.10000000000000001"
    assert list(parse_grid("0:1:3")) == [0.0, 0.5, 1.0]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stablelaws", "modes", "--family", "boolean",
                           "--alpha", "1", "--rho", "0.5", "--format", "csv"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "location,kind\n0,continuous-peak\n"
