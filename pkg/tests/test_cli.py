import json
from fractions import Fraction
import logging

import pytest
from click.testing import CliRunner

import app
from suites.common import suite_node
from tools.records import rows_from_csv


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def restore_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def run(runner, *args):
    return runner.invoke(app.cli, [str(arg) for arg in args])


# =============================================================================
# RESIDUES
# =============================================================================


def test_residues_table(runner):
    result = run(runner, "residues", "--gens", "6,9,20", "--n", 1000, "--modulus", 2)
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0].split() == ["residue", "count", "proportion"]
    assert lines[1].split() == ["0", "233", "0.5011"]
    assert lines[2].split() == ["1", "232", "0.4989"]


@pytest.mark.parametrize("modulus", range(2, 9))
@pytest.mark.parametrize(
    "gens, n, table",
    [("6,9,20", 1000, "mcnugget_n1000.csv"), ("17,29,47,65", 5000, "bigger_delta_n5000.csv")],
)
def test_residues_table_matches_transcribed(runner, golden, gens, n, table, modulus):
    result = run(runner, "residues", "--gens", gens, "--n", n, "--modulus", modulus)
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0].split() == ["residue", "count", "proportion"]
    rows = [line.split() for line in lines[1:]]
    expected = [(r, c, p) for N, r, c, p in golden(table) if N == modulus]
    assert [(int(r), int(c)) for r, c, _ in rows] == [(r, c) for r, c, _ in expected]
    for (_, _, ours), (_, _, theirs) in zip(rows, expected):
        assert abs(Fraction(ours) - Fraction(theirs)) <= Fraction(1, 10**4)


@pytest.mark.parametrize("modulus", range(2, 9))
def test_residues_reproduce_counts(runner, golden, modulus):
    result = run(runner, "--format", "csv", "residues", "--gens", "17,29,47,65", "--n", 5000, "--modulus", modulus)
    assert result.exit_code == 0, result.output
    columns, rows = rows_from_csv(result.stdout)
    assert columns == ["residue", "count", "proportion"]
    expected = [(r, c) for N, r, c, _ in golden("bigger_delta_n5000.csv") if N == modulus]
    assert [(int(r), int(c)) for r, c, _ in rows] == expected


def test_residues_single_class(runner):
    result = run(runner, "--format", "json", "residues", "--gens", "17,29,47,65", "--n", 5000, "--modulus", 6)
    payload = json.loads(result.stdout)
    proportions = [row["proportion"] for row in payload["rows"]]
    assert proportions == ["0.0000"] * 4 + ["1.0000", "0.0000"]
    assert payload["exact"]["total"] == "14500"
    assert payload["exact"]["proportion_4"] == "1"


def test_residues_outside_the_semigroup(runner):
    result = run(runner, "--format", "csv", "residues", "--gens", "6,9,20", "--n", 43, "--modulus", 3)
    _, rows = rows_from_csv(result.stdout)
    assert rows == [["0", "0", "-"], ["1", "0", "-"], ["2", "0", "-"]]


@pytest.mark.parametrize(
    "gens, fragment",
    [("2,4", "gcd"), ("5", "at least two"), ("9,6,20", "increasing"), ("6,x,20", "integers")],
)
def test_bad_generators_are_usage_errors(runner, gens, fragment):
    result = run(runner, "residues", "--gens", gens, "--n", 10, "--modulus", 2)
    assert result.exit_code == 2
    assert fragment in result.output


# =============================================================================
# MOMENTS
# =============================================================================


def test_moments(runner):
    result = run(runner, "moments", "--gens", "17,29,47,65", "--n", 5000, "--modulus", 6, "--residue", 4)
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[1].split()[:2] == ["exact", "14500"]
    assert lines[2].split()[1] == "12500000000/903669"
    assert lines[-1] == "# attainable: true"


def test_moments_exact_values(runner):
    result = run(runner, "--format", "json", "moments", "--gens", "17,29,47,65", "--n", 5000)
    payload = json.loads(result.stdout)
    assert payload["exact"]["exact"] == "14500"
    assert payload["exact"]["leading"] == "12500000000/903669"
    assert payload["exact"]["attainable"] == "true"
    assert payload["rows"][1]["decimal"].startswith("13832.")


def test_moments_unattainable_and_bad_residue(runner):
    result = run(runner, "--format", "json", "moments", "--gens", "17,29,47,65", "--n", 5000, "--modulus", 6)
    payload = json.loads(result.stdout)
    assert payload["exact"]["exact"] == "0"
    assert payload["exact"]["leading"] == "0"
    assert payload["exact"]["attainable"] == "false"

    result = run(runner, "moments", "--gens", "6,9,20", "--n", 100, "--modulus", 3, "--residue", 3)
    assert result.exit_code == 2


def test_moments_restricted_count(runner):
    result = run(runner, "--format", "csv", "moments", "--gens", "6,9,20", "--n", 1000, "--modulus", 7, "--residue", 2)
    _, rows = rows_from_csv(result.stdout)
    assert rows[0][:2] == ["exact", "59"]


# =============================================================================
# DENSITY
# =============================================================================


def test_density_integral(runner):
    result = run(runner, "--format", "csv", "density", "--gens", "6,9,20", "--integral", "1/20", "1/6")
    assert result.exit_code == 0, result.output
    _, rows = rows_from_csv(result.stdout)
    assert rows == [["integral", "1", "1.0000000000"]]


def test_density_partial_integral(runner):
    result = run(runner, "--format", "json", "density", "--gens", "6,9,20", "--integral", "0", "1/9")
    assert json.loads(result.stdout)["exact"]["integral"] == "11/21"


def test_density_samples(runner):
    result = run(runner, "--format", "csv", "density", "--gens", "6,9,20", "--samples", 5)
    assert result.exit_code == 0, result.output
    _, rows = rows_from_csv(result.stdout)
    assert len(rows) == 5
    assert rows[0][0] == "0.0500000000"
    assert rows[-1][0] == "0.1666666667"


@pytest.mark.parametrize(
    "args",
    [
        ("--gens", "3,5", "--samples", 5),
        ("--gens", "6,9,20"),
        ("--gens", "6,9,20", "--samples", 5, "--integral", "0", "1"),
        ("--gens", "6,9,20", "--integral", "1/6", "1/20"),
        ("--gens", "6,9,20", "--samples", 1),
    ],
)
def test_density_usage_errors(runner, args):
    assert run(runner, "density", *args).exit_code == 2


# =============================================================================
# ZETA
# =============================================================================


def test_zeta_single(runner):
    result = run(runner, "--format", "csv", "zeta", "--k", 5)
    _, rows = rows_from_csv(result.stdout)
    assert rows == [["5", "0.9581"]]
    _, rows = rows_from_csv(run(runner, "--format", "csv", "zeta", "--k", 2).stdout)
    assert rows == [["2", "0.0000"]]


def test_zeta_table(runner):
    result = run(runner, "--format", "csv", "zeta")
    _, rows = rows_from_csv(result.stdout)
    assert [row[0] for row in rows] == [str(k) for k in range(2, 11)]
    assert rows[1] == ["3", "0.7308"]
    assert rows[-1] == ["10", "0.9990"]


def test_zeta_usage_errors(runner):
    assert run(runner, "zeta", "--k", 1).exit_code == 2
    assert run(runner, "zeta", "--k", 3, "--mc", 3, 100, 10, 0).exit_code == 2


def test_zeta_monte_carlo(runner):
    result = run(runner, "--format", "json", "zeta", "--mc", 3, 10_000, 100_000, 42)
    assert result.exit_code == 0, result.output
    row = json.loads(result.stdout)["rows"][0]
    assert row["seed"] == "42"
    assert abs(float(row["estimate"]) - 0.7308) < 0.01
    again = run(runner, "--format", "json", "zeta", "--mc", 3, 10_000, 100_000, 42)
    assert again.stdout == result.stdout


# =============================================================================
# STATS AND CONVERGENCE
# =============================================================================


def test_stats(runner):
    result = run(runner, "--format", "json", "stats", "--gens", "6,9,20", "--n", 60)
    assert result.exit_code == 0, result.output
    rows = {row["quantity"]: row for row in json.loads(result.stdout)["rows"]}
    assert rows["total"]["exact"] == "5"
    assert rows["mean"]["exact"] == "37/5"
    assert rows["median"]["exact"] == "8"
    assert rows["mode"]["exact"] == "3"
    assert rows["harmonic_mean"]["exact"] == "12600/2047"
    assert rows["geometric_mean"]["exact"] == "-"
    assert rows["geometric_mean"]["decimal"].startswith("6.8")


def test_stats_empty_class(runner):
    result = run(runner, "--format", "json", "stats", "--gens", "17,29,47,65", "--n", 5000, "--modulus", 6, "--residue", 0)
    payload = json.loads(result.stdout)
    assert payload["exact"]["empty"] == "true"
    exact = {row["quantity"]: row["exact"] for row in payload["rows"]}
    assert exact["mean"] == exact["harmonic_mean"] == exact["geometric_mean"] == "-"


def test_stats_needs_both(runner):
    assert run(runner, "stats", "--gens", "6,9,20", "--n", 60, "--modulus", 3).exit_code == 2


def test_convergence(runner):
    result = run(runner, "convergence", "--gens", "6,9,20", "--modulus", 5, "--n-schedule", "250,500,1000")
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0].split() == ["n", "empirical", "limit", "gap"]
    assert lines[1].split()[0] == "250"
    assert lines[3].split()[2] == "0.2000000000"
    assert lines[-1].startswith("# final gap ")


def test_convergence_single_point(runner):
    result = run(runner, "--format", "csv", "convergence", "--gens", "6,9,20", "--n-schedule", "1000")
    _, rows = rows_from_csv(result.stdout)
    assert len(rows) == 1
    assert rows[0][2] == "1.0000000000"


def test_convergence_usage_errors(runner):
    mixed = run(runner, "convergence", "--gens", "17,29,47,65", "--modulus", 6, "--residue", 4,
                "--n-schedule", "5000,5001")
    assert mixed.exit_code == 2
    assert "mixes" in mixed.output
    assert run(runner, "convergence", "--gens", "6,9,20", "--n-schedule", "10,x").exit_code == 2
    assert run(runner, "convergence", "--gens", "6,9,20", "--n-schedule", "").exit_code == 2


# =============================================================================
# VERIFY
# =============================================================================


def test_verify_defaults_pass(runner):
    result = run(runner, "verify")
    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[-1] == "6/6 suites passed"


def test_verify_worked_example(runner):
    result = run(runner, "verify", "--gens", "7,19,25,31", "--max-n", 434, "--modulus-max", 12)
    assert result.exit_code == 0, result.output
    assert "lengths of 434 are all 2 mod 6" in result.output


def test_verify_reports_failure(runner, monkeypatch):
    @suite_node("fourier")
    def broken(state):
        raise AssertionError("injected fault")

    real = app.build_graph
    monkeypatch.setattr(app, "build_graph", lambda: real(suites={"fourier": broken}))
    result = run(runner, "--format", "json", "verify", "--max-n", 60)
    assert result.exit_code == 1
    payload = json.loads(result.stdout)
    assert payload["exact"] == {"passed": "5", "total": "6"}
    failed = [row for row in payload["rows"] if row["passed"] == "false"]
    assert failed == [{"suite": "fourier", "passed": "false", "checks": "0", "detail": "injected fault"}]


# =============================================================================
# OUTPUT OPTIONS
# =============================================================================


def test_out_writes_file(runner, tmp_path):
    target = tmp_path / "table.csv"
    result = run(runner, "--format", "csv", "--out", target, "residues", "--gens", "6,9,20", "--n", 1000, "--modulus", 2)
    assert result.exit_code == 0
    assert result.output == ""
    assert target.read_bytes() == b"residue,count,proportion\n0,233,0.5011\n1,232,0.4989\n"


def test_command_format_overrides_global(runner):
    result = run(runner, "--format", "csv", "zeta", "--k", 4, "--format", "json")
    assert json.loads(result.stdout)["rows"] == [{"k": "4", "probability": "0.9004"}]


def test_verbose_logs_to_stderr(restore_logging):
    runner = CliRunner()
    result = runner.invoke(app.cli, ["--verbose", "--format", "csv", "residues", "--gens", "6,9,20", "--n", 200, "--modulus", 2])
    assert result.exit_code == 0
    assert result.stdout.startswith("residue,count,proportion\n")
    assert "DEBUG" in result.stderr


def test_quiet_by_default(runner):
    result = run(runner, "residues", "--gens", "6,9,20", "--n", 200, "--modulus", 2)
    assert "DEBUG" not in result.output
