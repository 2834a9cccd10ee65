"""Tests for the command-line front end and run configuration."""

import json

import pytest

from prime_heuristics import __version__
from prime_heuristics.cli import (
    EXIT_CODES,
    default_checkpoints,
    exit_code_for,
    main,
)
from prime_heuristics.config import RunConfig
from prime_heuristics.exceptions import (
    ConfigurationError,
    DomainError,
    HeuristicsError,
    ParseError,
    PolynomialOverflowError,
    SieveRangeError,
    ValidationError,
)

FAST = ["-q", "--brute-force-limit", "1e3"]


def run(capsys, *argv):
    """Run the CLI and return (exit code, stdout)."""
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_mertens_ratio_single_checkpoint(capsys):
    """Test mertens-ratio at x = 4."""
    code, out = run(capsys, "mertens-ratio", "--checkpoints", "4", "--format", "csv", "-q")

    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "x,dependency_ratio,abs_error"
    assert len(lines) == 2
    assert float(lines[1].split(",")[1]) == pytest.approx(1.4427, abs=1e-4)


def test_mertens_ratio_ladder(capsys):
    """Test the three-row ladder ends within 0.01 of 0.5 e^gamma."""
    code, out = run(
        capsys, "mertens-ratio", "--checkpoints", "1e4,1e8,1e12", "--format", "json", "-q"
    )

    assert code == 0
    rows = json.loads(out)
    assert [row["x"] for row in rows] == [10**4, 10**8, 10**12]
    assert rows[-1]["abs_error"] < 0.01


def test_mertens_ratio_requires_checkpoints(capsys):
    """Test a missing --checkpoints flag is a usage error."""
    assert main(["mertens-ratio"]) == 2


def test_mertens_ratio_domain_error(capsys):
    """Test x < 4 exits with the domain error code."""
    code, out = run(capsys, "mertens-ratio", "--checkpoints", "3", "-q")
    assert code == 5
    assert out == ""


def test_mertens_ratio_checkpoint_beyond_sieve_ceiling(capsys):
    """Test a checkpoint whose square root exceeds the sieve ceiling is a range error."""
    code, out = run(capsys, "mertens-ratio", "--checkpoints", "1e4,1e20", "-q")
    assert code == 3
    assert out == ""


def test_tuple_twin(capsys):
    """Test the twin tuple reports the twin constant and exact counts."""
    code, out = run(capsys, "tuple", "0,2", "--xmax", "1e5", "--format", "text", *FAST)

    assert code == 0
    assert "admissible: true" in out
    assert "constant: 1.32032" in out
    assert "1224" in out


def test_tuple_inadmissible(capsys):
    """Test (0, 2, 4) reports admissible=false, constant 0 and one hit."""
    code, out = run(capsys, "tuple", "0,2,4", "--xmax", "1e4", "--format", "text", *FAST)

    assert code == 0
    assert "admissible: false" in out
    assert "constant: 0.0" in out
    assert "vanishing_prime: 3" in out

    code, out = run(capsys, "tuple", "0,2,4", "--xmax", "1e4", "--format", "csv", *FAST)
    assert out.strip().split("\n")[-1] == "10000,1,0.0,,0.0,1000000"


@pytest.mark.parametrize("spec", ["0,3", "2,4", "0,x"])
def test_tuple_malformed(capsys, spec):
    """Test malformed tuples exit 2."""
    assert main(["tuple", spec]) == 2


def test_bh_fixed_divisor(capsys):
    """Test x^2 + x + 2 reports constant 0 with fixed divisor 2."""
    code, out = run(capsys, "bh", "x^2+x+2", "--xmax", "100", "--format", "text", *FAST)

    assert code == 0
    assert "fixed_divisor: 2" in out
    assert "constant: 0.0" in out
    assert "H: 2" in out


def test_bh_x_squared_plus_one(capsys):
    """Test x^2 + 1 rows stay within 10% at 10^3..10^4."""
    code, out = run(
        capsys,
        "bh",
        "x^2+1",
        "--xmax",
        "1e4",
        "--sieve-limit",
        "1e6",
        "--format",
        "json",
        "-q",
        "--brute-force-limit",
        "1e4",
    )

    assert code == 0
    rows = {row["x"]: row for row in json.loads(out)}
    assert rows[10**4]["empirical"] == 841
    assert abs(rows[10**4]["ratio"] - 1) < 0.1


def test_bh_matches_tuple(capsys):
    """Test {x, x+2} and tuple (0, 2) print identical CSV."""
    _, from_tuple = run(capsys, "tuple", "0,2", "--xmax", "1e5", "--format", "csv", *FAST)
    _, from_family = run(capsys, "bh", "x", "x+2", "--xmax", "1e5", "--format", "csv", *FAST)
    assert from_family == from_tuple
    assert from_tuple


def test_bh_parse_error(capsys):
    """Test non-integer coefficients exit 2."""
    assert main(["bh", "x^2+1.5"]) == 2


def test_bh_overflow(capsys):
    """Test values past 2^64 - 1 exit 4."""
    assert main(["bh", "x^10", "--xmax", "1e4", "-q"]) == 4


def test_sieve_range_error(capsys):
    """Test a sieve too small for the checkpoints exits 3."""
    code = main(
        ["tuple", "0,2", "--xmax", "1000", "--sieve-limit", "500", "--plimit", "100", "-q"]
    )
    assert code == 3


def test_plimit_above_sieve_limit(capsys):
    """Test truncation beyond the sieve is a configuration error."""
    assert main(["tuple", "0,2", "--sieve-limit", "1000", "--plimit", "2000", "-q"]) == 2


def test_threads_do_not_change_output(capsys):
    """Test --threads and --segment-size leave the bytes unchanged."""
    args = ["tuple", "0,2,6", "--xmax", "1e6", "--format", "csv", *FAST]
    _, single = run(capsys, *args)
    _, again = run(capsys, *args)
    _, threaded = run(capsys, *args, "--threads", "4", "--segment-size", "4096")

    assert single == again == threaded


def test_out_writes_file(capsys, tmp_path):
    """Test --out writes the report instead of stdout."""
    path = tmp_path / "twin.csv"
    code, out = run(
        capsys, "tuple", "0,2", "--xmax", "1000", "--format", "csv", "--out", str(path), *FAST
    )

    assert code == 0
    assert out == ""
    assert path.read_text(encoding="utf-8").startswith(
        "x,empirical,predicted,ratio,constant,truncation\n"
    )


def test_report_small(capsys):
    """Test the canned suite at a reduced scale."""
    code, out = run(capsys, "report", "--xmax", "1e4", "--format", "json", *FAST)

    assert code == 0
    payload = json.loads(out)
    assert list(payload) == [
        "dependency ratio",
        "tuple 0,2",
        "tuple 0,2,4",
        "family x x+2",
        "family x^2+1",
        "conditional dependency",
    ]
    assert payload["tuple 0,2"]["rows"] == payload["family x x+2"]["rows"]
    assert payload["tuple 0,2,4"]["rows"][-1]["ratio"] is None
    assert payload["dependency ratio"]["metadata"]["errors_nonincreasing"] is True


def test_version(capsys):
    """Test --version exits 0."""
    assert main(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def test_default_checkpoints():
    """Test powers of ten up to xmax, with xmax appended."""
    assert default_checkpoints(10**4) == [10, 100, 1000, 10**4]
    assert default_checkpoints(5000) == [10, 100, 1000, 5000]
    assert default_checkpoints(4) == [4]


def test_exit_codes_distinct_per_class():
    """Test each error class maps to its documented exit code."""
    assert exit_code_for(ConfigurationError("x")) == 2
    assert exit_code_for(ParseError("x")) == 2
    assert exit_code_for(ValidationError("x")) == 2
    assert exit_code_for(SieveRangeError("x")) == 3
    assert exit_code_for(PolynomialOverflowError("x")) == 4
    assert exit_code_for(DomainError("x")) == 5
    assert exit_code_for(HeuristicsError("x")) == 1
    assert len({code for _, code in EXIT_CODES if code != 2}) == 3


def test_run_config_normalises_checkpoints():
    """Test checkpoints are sorted and deduplicated."""
    config = RunConfig.build(sieve_limit=100, truncation_limit=50, checkpoints=[30, 10, 30])
    assert config.checkpoints == [10, 30]
    assert config.sieve_config.threads == 1


@pytest.mark.parametrize(
    "settings",
    [
        {"sieve_limit": 100, "truncation_limit": 200},
        {"sieve_limit": 100, "truncation_limit": 50, "threads": 0},
        {"sieve_limit": 100, "truncation_limit": 50, "output_format": "xml"},
        {"sieve_limit": 100, "truncation_limit": 50, "segment_size": 12},
        {"sieve_limit": 1, "truncation_limit": 1},
    ],
)
def test_run_config_rejects(settings):
    """Test invalid settings raise ConfigurationError."""
    with pytest.raises(ConfigurationError):
        RunConfig.build(**settings)
