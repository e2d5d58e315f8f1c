"""CLI surface: formats, exit codes, report determinism, round-trips."""

import csv
import io
import json
import subprocess
import sys

import pytest

from quatsplit.arith import primes_up_to
from quatsplit.classify import Biquadratic, Cyclotomic, Kummer, Quadratic, classify
from quatsplit.cli import (
    EXIT_BAD_ARGS,
    EXIT_DISAGREEMENTS,
    EXIT_OK,
    EXIT_UNSUPPORTED,
    build_sweep_report,
    format_trace,
    main,
    parse_field_spec,
    render_report_csv,
)
from quatsplit.errors import InvalidInputError


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_field_spec():
    assert parse_field_spec("quadratic:-7") == Quadratic(-7)
    assert parse_field_spec("biquadratic:-1,-3") == Biquadratic(-1, -3)
    assert parse_field_spec("cyclotomic:7") == Cyclotomic(7)
    assert parse_field_spec("cyclotomic:14") == Cyclotomic(7)  # canonicalized
    assert parse_field_spec("kummer:3^2") == Kummer(3, 2)
    for bad in ("septic:3", "cyclotomic", "kummer:3", "biquadratic:-1", "quadratic:x"):
        with pytest.raises(InvalidInputError):
            parse_field_spec(bad)


def test_classify_text(capsys):
    code, out, _ = run_cli(capsys, "classify", "--field", "cyclotomic:7", "--p", "3", "--q", "2")
    assert code == EXIT_OK
    assert "outcome: Division" in out
    assert "certainty: Exact" in out
    assert "prop3.3/case2:hit" in out


def test_classify_unknown_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "classify", "--field", "cyclotomic:5", "--p", "7", "--q", "3")
    assert code == EXIT_OK
    assert "outcome: Unknown" in out
    assert "certainty: SufficientOnly" in out


def test_classify_quadratic_example(capsys):
    code, out, _ = run_cli(capsys, "classify", "--field", "quadratic:-7", "--p", "3", "--q", "2")
    assert code == EXIT_OK
    assert "outcome: Division" in out
    assert "thm3.1/case2/p≡3mod8:hit" in out


def test_classify_json(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--field", "cyclotomic:9", "--p", "19", "--q", "2", "--format", "json"
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["field"] == "cyclotomic:9"
    assert payload["outcome"] == "Division"
    assert payload["certainty"] == "Exact"
    assert {"criterion": "prop3.6/case2", "fired": True} in payload["trace"]


def test_classify_csv(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--field", "biquadratic:-1,-3", "--p", "13", "--q", "2", "--format", "csv"
    )
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["field", "p1", "p2", "classify", "certainty", "trace"]
    assert rows[1][:5] == ["biquadratic:-1,-3", "13", "2", "Division", "Exact"]


def test_classify_error_exit_codes(capsys):
    code, _, err = run_cli(capsys, "classify", "--field", "cyclotomic:13", "--p", "3", "--q", "2")
    assert code == EXIT_UNSUPPORTED and "error:" in err
    code, _, _ = run_cli(capsys, "classify", "--field", "kummer:5^1", "--p", "3", "--q", "2")
    assert code == EXIT_UNSUPPORTED
    code, _, _ = run_cli(capsys, "classify", "--field", "quadratic:12", "--p", "3", "--q", "2")
    assert code == EXIT_BAD_ARGS
    code, _, _ = run_cli(capsys, "classify", "--field", "cyclotomic:7", "--p", "3", "--q", "3")
    assert code == EXIT_BAD_ARGS
    code, _, _ = run_cli(capsys, "classify", "--field", "cyclotomic:7", "--p", "9", "--q", "2")
    assert code == EXIT_BAD_ARGS
    code, _, _ = run_cli(capsys, "classify", "--field", "nonsense", "--p", "3", "--q", "2")
    assert code == EXIT_BAD_ARGS


def test_classify_canonicalizes_field(capsys):
    code, out, _ = run_cli(capsys, "classify", "--field", "cyclotomic:14", "--p", "3", "--q", "2")
    assert code == EXIT_OK
    assert "field: cyclotomic:7" in out
    assert "outcome: Division" in out


def test_ramification_text(capsys):
    code, out, _ = run_cli(capsys, "ramification", "--a", "3", "--b", "2")
    assert code == EXIT_OK
    assert "ramified: 2 3" in out
    assert "reduced_discriminant: 6" in out

    code, out, _ = run_cli(capsys, "ramification", "--a", "7", "--b", "2")
    assert code == EXIT_OK
    assert "ramified: (none)" in out
    assert "reduced_discriminant: 1" in out

    code, out, _ = run_cli(capsys, "ramification", "--a", "7", "--b", "3")
    assert "ramified: 2 7" in out and "reduced_discriminant: 14" in out


def test_ramification_json_and_csv(capsys):
    code, out, _ = run_cli(capsys, "ramification", "--a", "-1", "--b", "-1", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["ramified"] == ["2", "inf"]
    assert payload["reduced_discriminant"] == 2

    code, out, _ = run_cli(capsys, "ramification", "--a", "3", "--b", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["a", "b", "ramified", "reduced_discriminant"]
    assert rows[1] == ["3", "2", "2;3", "6"]


def test_ramification_rejects_zero(capsys):
    code, _, err = run_cli(capsys, "ramification", "--a", "0", "--b", "5")
    assert code == EXIT_BAD_ARGS and "error:" in err


def test_verify_csv_report(capsys, tmp_path):
    out_path = tmp_path / "report.csv"
    code, out, _ = run_cli(
        capsys,
        "verify", "--field", "cyclotomic:7", "--max-prime", "50",
        "--format", "csv", "--out", str(out_path),
    )
    assert code == EXIT_OK
    assert "disagree=0" in out
    body = out_path.read_text(encoding="utf-8")
    rows = list(csv.reader(io.StringIO(body)))
    assert rows[0] == ["field", "p1", "p2", "classify", "certainty", "oracle", "agree", "trace"]
    n_primes = len(primes_up_to(50))
    assert len(rows) - 1 == n_primes * (n_primes - 1)
    assert all(row[6] == "true" for row in rows[1:])
    # ascending (p1, p2) ordering
    keys = [(int(r[1]), int(r[2])) for r in rows[1:]]
    assert keys == sorted(keys)


def test_verify_report_determinism(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        code = main(
            ["verify", "--field", "cyclotomic:9", "--max-prime", "60",
             "--format", "json", "--out", str(path)]
        )
        assert code == EXIT_OK
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_verify_unknown_rows(capsys):
    code, out, _ = run_cli(capsys, "verify", "--field", "cyclotomic:5", "--max-prime", "100")
    assert code == EXIT_OK
    summary = {
        line.split(": ")[0]: line.split(": ")[1]
        for line in out.splitlines()
        if ": " in line
    }
    assert int(summary["unknown"]) > 0
    assert int(summary["disagree"]) == 0


def test_verify_kummer_and_quadratic(capsys):
    for spec in ("kummer:7^1", "quadratic:-7", "biquadratic:-1,-3", "cyclotomic:12"):
        code, out, _ = run_cli(capsys, "verify", "--field", spec, "--max-prime", "40")
        assert code == EXIT_OK, spec
        assert "disagree: 0" in out, spec


def test_verify_bad_arguments(capsys):
    code, _, _ = run_cli(capsys, "verify", "--field", "cyclotomic:7", "--max-prime", "20000")
    assert code == EXIT_BAD_ARGS
    code, _, _ = run_cli(capsys, "verify", "--field", "cyclotomic:13", "--max-prime", "40")
    assert code == EXIT_UNSUPPORTED


def test_verify_disagreement_exit_code(capsys, monkeypatch, tmp_path):
    """Force a bogus oracle to check the exit-4 path; the report is still written."""
    import quatsplit.cli as cli_module
    from quatsplit.classify import Outcome

    monkeypatch.setattr(cli_module, "division_oracle", lambda field, p1, p2: Outcome.SPLIT)
    out_path = tmp_path / "bad.csv"
    code, _, _ = run_cli(
        capsys,
        "verify", "--field", "cyclotomic:7", "--max-prime", "20",
        "--format", "csv", "--out", str(out_path),
    )
    assert code == EXIT_DISAGREEMENTS
    assert out_path.exists()
    body = out_path.read_text(encoding="utf-8")
    assert ",false," in body


def test_verify_round_trip():
    """Every report row re-fed to the classifier reproduces outcome and trace."""
    field = Cyclotomic(9)
    report = build_sweep_report(field, 50)
    for row in report.rows:
        verdict = classify(field, row.p1, row.p2)
        assert verdict.outcome is row.classify_outcome
        assert format_trace(verdict) == row.trace
    assert report.agree + report.disagree + report.unknown == len(report.rows)
    # rendering is pure
    assert render_report_csv(report) == render_report_csv(report)


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "quatsplit", "classify", "--field", "cyclotomic:7", "--p", "3", "--q", "2"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "outcome: Division" in result.stdout
