"""
Tests for the command line interface.
"""

import json
import os

import pytest
from click.testing import CliRunner

from catalanff.cli import cli
from catalanff.config import CONFIG_FILENAME
from catalanff.version import __version__

ELLIPTIC = "char=5;e=2;f=x^3+x+1"
RATIONAL5 = "char=5;e=1;f=x"
RATIONAL3 = "char=3;e=1;f=x"


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, args, **kwargs):
    return runner.invoke(cli, args, obj={}, **kwargs)


def test_version(runner):
    """Test the version option."""
    result = invoke(runner, ["--version"])

    assert result.exit_code == 0
    assert __version__ in result.output


def test_lpoly_json(runner):
    """Test the L-polynomial of the elliptic model."""
    result = invoke(runner, ["lpoly", "-c", ELLIPTIC, "--json"])

    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["curve"] == "char=5;deg=1;e=2;f=x^3+x+1"
    assert data["coeffs"] == [1, 3, 5]
    assert data["h"] == 9
    assert data["counts"] == [9, 27]


def test_lpoly_text_and_genus_zero(runner):
    """Test the text output and h = 1 for the rational field."""
    result = invoke(runner, ["lpoly", "-c", RATIONAL5])

    assert result.exit_code == 0
    assert "genus:  0" in result.output
    assert "h:      1" in result.output


def test_invalid_curve_exits_one(runner):
    """Test that an inadmissible model is reported with exit code 1."""
    result = invoke(runner, ["lpoly", "-c", "char=5;e=2;f=x^4+1"])

    assert result.exit_code == 1
    assert "no degree-1 infinite place guaranteed" in result.output


def test_spec_syntax_error_exits_one(runner):
    """Test that a curve spec syntax error shows its position."""
    result = invoke(runner, ["lpoly", "-c", "char=5;e=2;g=x"])

    assert result.exit_code == 1
    assert "position 11" in result.output


def test_classnum(runner):
    """Test h_n and h(F(mu_p)) for the elliptic model."""
    result = invoke(runner, ["classnum", "-c", ELLIPTIC, "--degrees", "1,2",
                             "--primes", "2,3", "--json"])

    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["h_n"] == {"1": 9, "2": 27}
    assert data["h_mu"]["h(F(mu_3))"] == {"degree": 2, "h": 27}
    assert data["h_mu"]["h(F(mu_2))"] == {"degree": 1, "h": 9}


def test_classnum_orders_and_deduplicates_degrees(runner):
    """Test that repeated or unordered degrees give one ascending h_n table."""
    result = invoke(runner, ["classnum", "-c", ELLIPTIC, "--degrees", "2,1,2", "--json"])

    assert result.exit_code == 0
    assert list(json.loads(result.output)["h_n"].items()) == [("1", 9), ("2", 27)]


def test_classnum_rejects_characteristic(runner):
    """Test that p = l cannot be adjoined."""
    result = invoke(runner, ["classnum", "-c", ELLIPTIC, "--primes", "5"])

    assert result.exit_code == 1


@pytest.mark.parametrize("curve,m,n,status,code", [
    (ELLIPTIC, 2, 3, "THEOREM_APPLIES", 0),
    ("char=5;e=2;f=x^3+1", 2, 3, "INCONCLUSIVE", 2),
    (RATIONAL5, 5, 2, "CHAR_DIVIDES_BOTH_SIDES_IMPOSSIBLE", 3),
    (RATIONAL3, 3, 2, "CHAR_DIVIDES_BOTH_SIDES_IMPOSSIBLE", 3),
])
def test_check_exit_codes(runner, curve, m, n, status, code):
    """Test the status and exit code of the check command."""
    result = invoke(runner, ["check", "-c", curve, "-m", str(m), "-n", str(n), "--json"])

    assert result.exit_code == code
    assert json.loads(result.output)["status"] == status


def test_search_constants_only(runner):
    """Test a search that finds the five constant solutions."""
    result = invoke(runner, ["search", "-c", RATIONAL5, "-m", "2", "-n", "3", "-B", "4",
                             "--json", "--no-timing"])

    assert result.exit_code == 0
    data = json.loads(result.output)
    assert len(data["solutions"]) == 5
    assert all(s["constant"] for s in data["solutions"])
    assert data["elapsed_s"] is None
    assert data["params"]["rhs"] == "Y^3 + 1"


def test_search_nonconstant_exits_four(runner):
    """Test that X^3 - Y^2 = 1 over F_3[T] reports a non-constant solution."""
    result = invoke(runner, ["search", "-c", RATIONAL3, "-m", "3", "-n", "2", "-B", "6",
                             "--json"])

    assert result.exit_code == 4
    data = json.loads(result.output)
    assert {"X": "T^2 + 1", "Y": "T^3", "d_X": 2, "d_Y": 3, "constant": False} \
        in data["solutions"]


def test_search_generalized_rhs_and_text(runner):
    """Test the --rhs option with the text output."""
    result = invoke(runner, ["search", "-c", RATIONAL5, "-m", "2", "-n", "3", "-B", "2",
                             "--rhs", "Y^3+2", "--strategy", "enumerate", "--no-sieve"])

    assert result.exit_code == 0
    assert "X^2 = Y^3 + 2" in result.output


def test_search_saves_report(runner, tmp_path):
    """Test the --output option."""
    base = str(tmp_path / "report")
    result = invoke(runner, ["search", "-c", RATIONAL5, "-m", "2", "-n", "3", "-B", "2",
                             "-o", base])

    assert result.exit_code == 0
    assert os.path.exists(base + ".json")
    assert os.path.exists(base + ".csv")


def test_search_budget_from_environment(runner):
    """Test that CATALANFF_BUDGET caps the search."""
    result = invoke(runner, ["search", "-c", ELLIPTIC, "-m", "2", "-n", "3", "-B", "6"],
                    env={"CATALANFF_BUDGET": "10"})

    assert result.exit_code == 1
    assert "search candidate count" in result.output


def test_json_output_is_byte_identical(runner):
    """Test that repeated runs and different thread counts print the same JSON."""
    check_args = ["check", "-c", ELLIPTIC, "-m", "2", "-n", "3", "--json"]
    search_args = ["search", "-c", ELLIPTIC, "-m", "2", "-n", "3", "-B", "4",
                   "--no-timing", "--json"]

    first, second = invoke(runner, check_args), invoke(runner, check_args)
    serial = invoke(runner, search_args + ["-t", "1"])
    parallel = invoke(runner, search_args + ["-t", "2"])

    assert first.exit_code == second.exit_code == 0
    assert first.output == second.output
    assert serial.exit_code == parallel.exit_code == 0
    assert serial.output == parallel.output
    assert "threads" not in json.loads(serial.output)["params"]


def test_counterexample(runner):
    """Test the witness family for the rational field over F_3."""
    result = invoke(runner, ["counterexample", "-c", RATIONAL3, "-n", "2", "--json"])

    assert result.exit_code == 0
    data = json.loads(result.output)
    assert (data["X"], data["Y"], data["m"]) == ("T^2 + 1", "T^3", 3)


def test_counterexample_with_witness(runner):
    """Test a user-supplied witness on the elliptic model."""
    result = invoke(runner, ["counterexample", "-c", ELLIPTIC, "-n", "3", "-z", "y"])

    assert result.exit_code == 0
    assert "X^5 - Y^3 = 1 verified" in result.output


@pytest.mark.parametrize("sampler", ["random", "grid"])
def test_lemmas(runner, sampler):
    """Test the pole-order identity check with both samplers."""
    result = invoke(runner, ["lemmas", "-c", ELLIPTIC, "--sampler", sampler,
                             "--samples", "200", "-B", "2", "--json"])

    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["passed"] is True
    assert data["sampler"] == sampler


def test_init_config(runner, tmp_path):
    """Test writing the default configuration file."""
    result = invoke(runner, ["init-config", "-o", str(tmp_path)])

    assert result.exit_code == 0
    assert (tmp_path / CONFIG_FILENAME).exists()
    result = invoke(runner, ["--config", str(tmp_path / CONFIG_FILENAME),
                             "lpoly", "-c", ELLIPTIC])
    assert result.exit_code == 0


def test_invalid_config_exits_one(runner, tmp_path):
    """Test that a configuration failing validation is rejected."""
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"search": {"threads": 0}}))

    result = invoke(runner, ["--config", str(path), "lpoly", "-c", ELLIPTIC])

    assert result.exit_code == 1
    assert "search.threads" in result.output
