"""Tests of the command line
"""

import importlib
import json
import runpy
import sys
from fractions import Fraction

import pytest
from click.testing import CliRunner

from windschitl import __version__
from windschitl.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args))


def test_version(runner):
    result = invoke(runner, "--version")
    assert result.exit_code == 0
    assert __version__ in result.output


class TestCoeffs:

    def test_a(self, runner):
        result = invoke(runner, "coeffs", "a", "6")
        assert result.exit_code == 0
        assert result.output.splitlines()[-1] == "6,-2260261/1178793000"

    def test_b(self, runner):
        result = invoke(runner, "coeffs", "b", "10")
        assert result.exit_code == 0
        assert "10,1/5248800" in result.output.splitlines()

    def test_lu_ignores_n_max(self, runner):
        result = invoke(runner, "coeffs", "lu", "0")
        assert result.exit_code == 0
        assert len(result.output.splitlines()) == 3

    def test_csv_and_json(self, runner):
        result = invoke(runner, "coeffs", "a", "4", "--format", "csv")
        assert result.output.splitlines()[0] == "n,value"
        result = invoke(runner, "coeffs", "stirling", "3", "--format", "json")
        dumped = json.loads(result.output)
        assert dumped["command"] == "coeffs"
        assert dumped["family"] == "stirling"
        assert set(dumped["rows"][0]) == {"n", "stirling_prime", "stirling_dprime"}

    def test_unknown_family(self, runner):
        assert invoke(runner, "coeffs", "z", "3").exit_code == 2


class TestApprox:

    def test_w1_at_one(self, runner):
        result = invoke(runner, "approx", "w1", "1", "--format", "json")
        assert result.exit_code == 0
        row = json.loads(result.output)["rows"][0]
        assert row["formula"] == "w1"
        assert abs(Fraction(row["mid"]) - 1) < Fraction(2, 10 ** 4)
        assert Fraction(row["lo"]) <= Fraction(row["hi"])

    def test_text(self, runner):
        result = invoke(runner, "approx", "w1", "1", "--digits", "8")
        lines = result.output.splitlines()
        assert [line[:4] for line in lines] == ["lo  ", "hi  ", "mid "]
        assert lines[2] == "mid 1.0001832e+0"

    def test_expansion(self, runner):
        assert invoke(runner, "approx", "exp:8", "2").exit_code == 0
        assert invoke(runner, "approx", "exp:2", "2").exit_code == 2
        assert invoke(runner, "approx", "series:4", "2").exit_code == 2

    @pytest.mark.parametrize("args", [
        ("approx", "w1", "0"),
        ("approx", "w9", "1"),
        ("approx", "w1", "one"),
        ("approx", "w1", "1", "--precision", "32"),
        ("approx", "w1", "1", "--precision", "8192"),
    ])
    def test_usage_errors(self, runner, args):
        result = invoke(runner, *args)
        assert result.exit_code == 2
        assert "Error" in result.output


class TestGamma:

    def test_gamma(self, runner):
        result = invoke(runner, "gamma", "5", "--format", "json")
        assert result.exit_code == 0
        row = json.loads(result.output)["rows"][0]
        assert Fraction(row["lo"]) <= 120 <= Fraction(row["hi"])
        assert row["shift"] >= 15

    def test_domain(self, runner):
        assert invoke(runner, "gamma", "0").exit_code == 2
        assert invoke(runner, "gamma", "1", "--width", "abc").exit_code == 2

    def test_unreachable_width(self, runner):
        result = invoke(runner, "gamma", "10", "--width", "1e-80", "--precision", "64")
        assert result.exit_code == 3
        assert "PrecisionError" in result.output


class TestTable:

    def test_single_cell(self, runner):
        result = invoke(runner, "table", "--xs", "2", "--formulas", "w1", "--format", "csv")
        assert result.exit_code == 0
        assert result.output == "x,w1\n2,2.668e-6\n"

    def test_default(self, runner):
        result = invoke(runner, "table", "--format", "csv")
        assert result.exit_code == 0
        rows = [line.split(",") for line in result.output.splitlines()]
        assert rows[0] == ["x", "w1", "wc1", "w01", "wl1"]
        assert [r[0] for r in rows[1:]] == ["1", "2", "5", "10", "20", "50", "100"]
        assert rows[1][1] == "1.832e-4"
        assert rows[5][2] == "4.370e-13"

    def test_text_is_aligned(self, runner):
        result = invoke(runner, "table", "--xs", "1,2", "--formulas", "w1,wl1")
        lines = result.output.splitlines()
        assert lines[0].split() == ["x", "w1", "wl1"]
        assert lines[1].index("1.832e-4") == lines[0].index("w1")

    def test_unknown_formula(self, runner):
        assert invoke(runner, "table", "--formulas", "w1,wz").exit_code == 2


class TestVerify:

    def test_remainder(self, runner):
        result = invoke(runner, "verify", "remainder", "--n", "4:8", "--xs", "1,2,5,10")
        assert result.exit_code == 0
        assert result.output.splitlines()[-1] == (
            "certified=20 violated=0 inconclusive=0 attained=0"
        )

    def test_rate_json(self, runner):
        result = invoke(runner, "verify", "rate", "--formula", "w1", "--x", "1000",
                        "--format", "json")
        assert result.exit_code == 0
        dumped = json.loads(result.output)
        assert dumped["check"] == "rate"
        assert dumped["rows"][0]["target"] == "-163/340200"
        assert dumped["rows"][0]["status"] == "certified"

    def test_check_option(self, runner):
        result = invoke(runner, "verify", "--check", "ordering", "--grid", "1:3:1")
        assert result.exit_code == 0
        assert invoke(runner, "verify", "ordering", "--grid", "1:3:1").output == result.output

    def test_sandwich_reports_attained(self, runner):
        result = invoke(runner, "verify", "sandwich", "--grid", "1:2:1")
        assert result.exit_code == 0
        assert result.output.splitlines()[0].startswith("attained     beta0*w1 < gamma  x=1")

    @pytest.mark.parametrize("args", [
        ("verify",),
        ("verify", "bogus"),
        ("verify", "ordering", "--check", "rate"),
        ("verify", "ordering", "--grid", "3:1:1"),
        ("verify", "ordering", "--grid", "1:3"),
        ("verify", "ordering", "--grid", "0.5:2:0.5"),
        ("verify", "remainder", "--n", "2:5"),
    ])
    def test_usage_errors(self, runner, args):
        assert invoke(runner, *args).exit_code == 2


def test_deterministic_output(runner):
    args = ("table", "--xs", "1,10", "--format", "json")
    assert invoke(runner, *args).output == invoke(runner, *args).output


def test_module_entry_point(monkeypatch, capsys):
    module = importlib.import_module("windschitl.__main__")
    assert module.cli is cli

    monkeypatch.delitem(sys.modules, "windschitl.__main__")
    monkeypatch.setattr(sys, "argv", ["windschitl", "--version"])
    with pytest.raises(SystemExit) as exc:
        runpy.run_module("windschitl", run_name="__main__")
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out
