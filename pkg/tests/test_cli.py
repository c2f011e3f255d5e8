import json
import subprocess
import sys

import pytest

from cyclecollide.cli import build_parser, main, parse_n_values


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------- exact

def test_exact_basic(capsys):
    code, out, _ = run_cli(capsys, "exact", "--n", "5", "--row")
    assert code == 0
    assert "f(n) = 4402" in out  # 24^2 + 50^2 + 35^2 + 10^2 + 1
    assert "row: 24 50 35 10 1" in out
    assert "2201/7200" in out  # 4402 / (120^2) reduced


def test_exact_json(capsys):
    code, out, _ = run_cli(capsys, "exact", "--n", "4", "--row", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["f"] == 194
    assert doc["row"] == [6, 11, 6, 1]
    assert doc["p_numerator"] == 97
    assert doc["p_denominator"] == 288


def test_exact_invalid_n(capsys):
    code, _, err = run_cli(capsys, "exact", "--n", "0")
    assert code == 1
    assert "error" in err


# --------------------------------------------------------------- collide

@pytest.mark.parametrize(
    "method", ["exact", "quadrature", "eq2", "asymptotic", "montecarlo"]
)
def test_collide_methods(capsys, method):
    code, out, _ = run_cli(
        capsys, "collide", "--n", "10", "--method", method, "--pairs", "2000"
    )
    assert code == 0
    p_line = [l for l in out.splitlines() if l.startswith("p = ")]
    assert len(p_line) == 1
    value = float(p_line[0].removeprefix("p = ").split()[0])
    assert 0.1 < value < 0.3  # p(10) ~ 0.24, asymptotic ~ 0.19


def test_collide_montecarlo_sampler_and_seed(capsys):
    args = ("collide", "--n", "6", "--method", "montecarlo",
            "--pairs", "4000", "--sampler", "bernoulli", "--seed", "11")
    code, out1, _ = run_cli(capsys, *args)
    assert code == 0
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    assert "std err" in out1


def test_collide_quadrature_reports_error_estimate(capsys):
    code, out, _ = run_cli(
        capsys, "collide", "--n", "100", "--method", "quadrature", "--tol", "1e-8"
    )
    assert code == 0
    assert "error estimate" in out
    assert "evaluations" in out


def test_collide_domain_error_exits_1(capsys):
    code, _, err = run_cli(capsys, "collide", "--n", "1", "--method", "asymptotic")
    assert code == 1
    assert "error" in err


# ----------------------------------------------------------------- table

def test_table_csv_stdout(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--n", "3,5", "--methods", "exact,asymptotic",
        "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("n,p_exact,")
    assert len(lines) == 3
    assert lines[1].split(",")[1] == "0.38888888888888888889"


def test_table_geometric_spec_and_file_output(tmp_path, capsys):
    out_path = tmp_path / "table.json"
    code, out, _ = run_cli(
        capsys, "table", "--n", "100:10000:10",
        "--methods", "quadrature,asymptotic", "--format", "json",
        "--out", str(out_path),
    )
    assert code == 0
    assert out == ""
    doc = json.loads(out_path.read_text())
    assert [r["n"] for r in doc["rows"]] == [100, 1000, 10000]
    assert doc["config"]["methods"] == ["quadrature", "asymptotic"]


def test_table_deterministic_bytes(capsys):
    args = ("table", "--n", "2,10", "--methods",
            "exact,quadrature,eq2,asymptotic,montecarlo",
            "--pairs", "3000", "--seed", "5")
    code, out1, _ = run_cli(capsys, *args)
    assert code == 0
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    assert "" != out1


def test_table_validation_error_exits_1(capsys):
    code, _, err = run_cli(
        capsys, "table", "--n", "1,5", "--methods", "asymptotic"
    )
    assert code == 1
    assert "error" in err


# ------------------------------------------------------------ usage/misc

def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc_info:
        build_parser().parse_args(["collide", "--n", "5", "--method", "bogus"])
    assert exc_info.value.code == 2


def test_missing_subcommand_exit_code():
    with pytest.raises(SystemExit) as exc_info:
        build_parser().parse_args([])
    assert exc_info.value.code == 2


def test_parse_n_values():
    assert parse_n_values("3,5,10") == (3, 5, 10)
    assert parse_n_values("100:1000000:10") == (100, 1000, 10000, 100000, 1000000)
    assert parse_n_values("7:7:2") == (7,)
    with pytest.raises(ValueError):
        parse_n_values("10:5:2")
    with pytest.raises(ValueError):
        parse_n_values("1:10:1")
    with pytest.raises(ValueError):
        parse_n_values("1:2:3:4")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cyclecollide", "exact", "--n", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "f(n) = 14" in proc.stdout
