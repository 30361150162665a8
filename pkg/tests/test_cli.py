"""Command-line contract: outputs, exit codes, formats, determinism."""

import csv
import io
import json

import pytest

from eigencount import cli, oracle
from eigencount.oracle import OracleCountReport


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_e_polynomial_only(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--mode", "e", "--n", "3", "--k", "2")
        assert code == 0
        assert "polynomial=2q^4+2q^3+2q^2" in out
        assert "value=" not in out

    def test_m_with_evaluation(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--mode", "m", "--n", "2", "--k", "2", "--q", "2"
        )
        assert code == 0
        assert "polynomial=q^2+q+2" in out
        assert "value=8" in out

    def test_e_impossible_spectrum_size(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--mode", "e", "--n", "2", "--k", "3")
        assert code == 0
        assert "polynomial=0" in out

    def test_concrete_spectrum_sets_k_and_point(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--mode", "m", "--n", "2", "--p", "5", "--alphas", "0,3"
        )
        assert code == 0
        assert "value=32" in out
        assert "spectrum=0,3" in out

    def test_small_field_warning_for_e_mode(self, capsys):
        code, out, err = run_cli(
            capsys, "count", "--mode", "e", "--n", "3", "--k", "3", "--q", "2"
        )
        assert code == 0
        assert "warning" in err
        assert "value=" in out

    @pytest.mark.parametrize(
        "argv",
        [
            ("count", "--mode", "m", "--n", "2", "--k", "0"),
            ("count", "--mode", "m", "--n", "0", "--k", "1"),
            ("count", "--mode", "m", "--n", "2"),
            ("count", "--mode", "m", "--n", "2", "--p", "6", "--alphas", "0,1"),
            ("count", "--mode", "m", "--n", "2", "--p", "5", "--alphas", "1,1"),
            ("count", "--mode", "m", "--n", "2", "--p", "5", "--alphas", "0,7"),
            ("count", "--mode", "m", "--n", "2", "--k", "3", "--p", "5", "--alphas", "0,1"),
            ("count", "--mode", "m", "--n", "2", "--k", "2", "--q", "2", "--p", "5", "--alphas", "0,1"),
            ("count", "--mode", "x", "--n", "2", "--k", "2"),
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, _, _ = run_cli(capsys, *argv)
        assert code == 2


class TestTable:
    def test_reference_range_all_match(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--n-max", "6")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 14
        assert all("verdict=match" in line for line in lines)

    def test_minimum_range(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--n-max", "3")
        assert code == 0
        assert len(out.strip().splitlines()) == 2

    def test_specific_row_text(self, capsys):
        _, out, _ = run_cli(capsys, "table", "--n-max", "4")
        assert "n=4 k=3 polynomial=3q^10+6q^9+9q^8+9q^7+6q^6+3q^5" in out

    def test_rows_beyond_reference_have_no_verdict(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--n-max", "7")
        assert code == 0
        rows = out.strip().splitlines()
        assert len(rows) == 20
        assert sum("verdict" not in row for row in rows) == 6

    @pytest.mark.parametrize("bad", ["2", "9"])
    def test_range_validation(self, capsys, bad):
        code, _, _ = run_cli(capsys, "table", "--n-max", bad)
        assert code == 2

    def test_mismatch_marked_and_exit_3(self, capsys, monkeypatch):
        monkeypatch.setitem(cli.REFERENCE_BY_NK, (3, 2), "2q^4+2q^3+2q^2+1")
        code, out, err = run_cli(capsys, "table", "--n-max", "3")
        assert code == 3
        assert out.startswith("! ")
        assert "verdict=mismatch" in out
        assert "expected=2q^4+2q^3+2q^2+1" in out
        assert "differ" in err


class TestVerify:
    def test_all_subsets_small(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n", "2", "--p", "3", "--all-subsets")
        assert code == 0
        lines = out.strip().splitlines()
        # 7 nonempty subsets, one m record and one e record each
        assert len(lines) == 14
        assert all("verdict=pass" in line for line in lines)
        assert all("provenance=both" in line for line in lines)

    def test_single_spectrum(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--n", "2", "--p", "5", "--spectrum", "1,4"
        )
        assert code == 0
        assert "mode=e" in out and "mode=m" in out

    def test_potent_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n", "2", "--p", "7", "--potent", "3")
        assert code == 0
        assert "value=340" in out
        assert "verdict=pass" in out

    def test_potent_formula_unavailable_reports_oracle(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--n", "2", "--p", "2", "--potent", "2")
        assert code == 0
        assert "verdict=oracle-only" in out
        assert "value=11" in out
        assert "provenance=oracle" in out

    def test_scan_timing_goes_to_stderr(self, capsys):
        _, out, err = run_cli(capsys, "verify", "--n", "2", "--p", "2", "--all-subsets")
        assert "millis" not in out and "ms" not in out
        assert "matrices" in err

    def test_mismatch_exits_4(self, capsys, monkeypatch):
        real = oracle.count_m

        def skewed(n, field, alphas, **kwargs):
            report = real(n, field, alphas, **kwargs)
            report.count += 1
            return report

        monkeypatch.setattr(oracle, "count_m", skewed)
        code, out, _ = run_cli(
            capsys, "verify", "--n", "2", "--p", "2", "--spectrum", "0,1"
        )
        assert code == 4
        assert "verdict=fail" in out
        assert "formula=8" in out and "oracle=9" in out

    def test_budget_exceeded_exits_5(self, capsys, monkeypatch):
        monkeypatch.setenv("EIGENCOUNT_BUDGET", "10")
        code, out, err = run_cli(capsys, "verify", "--n", "2", "--p", "3", "--all-subsets")
        assert code == 5
        assert "budget" in err

    def test_force_overrides_budget(self, capsys, monkeypatch):
        monkeypatch.setenv("EIGENCOUNT_BUDGET", "10")
        code, _, _ = run_cli(
            capsys, "verify", "--n", "2", "--p", "2", "--spectrum", "0", "--force"
        )
        assert code == 0

    def test_bad_budget_env_exits_2(self, capsys, monkeypatch):
        monkeypatch.setenv("EIGENCOUNT_BUDGET", "lots")
        code, _, _ = run_cli(capsys, "verify", "--n", "2", "--p", "2", "--all-subsets")
        assert code == 2

    @pytest.mark.parametrize(
        "argv",
        [
            ("verify", "--n", "2", "--p", "4", "--all-subsets"),
            ("verify", "--n", "2", "--p", "3", "--spectrum", "1,1"),
            ("verify", "--n", "2", "--p", "3", "--potent", "0"),
            ("verify", "--n", "2", "--p", "3"),
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, _, _ = run_cli(capsys, *argv)
        assert code == 2


class TestBound:
    def test_matrix_tight_case(self, capsys):
        code, out, _ = run_cli(
            capsys, "bound", "--kind", "matrix", "--n", "1", "--p", "3", "--k", "1",
            "--count", "2",
        )
        assert code == 0
        assert "lhs=36" in out and "rhs=36" in out
        assert "verdict=holds" in out

    def test_matrix_computed_count_formula(self, capsys):
        code, out, _ = run_cli(
            capsys, "bound", "--kind", "matrix", "--n", "2", "--p", "7", "--k", "3"
        )
        assert code == 0
        assert "value=340" in out
        assert "source=computed" in out
        assert "provenance=formula" in out

    def test_matrix_computed_count_oracle_fallback(self, capsys):
        code, out, err = run_cli(
            capsys, "bound", "--kind", "matrix", "--n", "2", "--p", "2", "--k", "2"
        )
        assert code == 0
        assert "value=11" in out
        assert "provenance=oracle" in out

    def test_ring_single_prime(self, capsys):
        code, out, _ = run_cli(
            capsys, "bound", "--kind", "ring", "--factors", "2^4", "--k", "1",
            "--count", "8",
        )
        assert code == 0
        assert "mode=theorem2" in out
        assert "verdict=holds" in out

    def test_ring_multi_prime_default_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, "bound", "--kind", "ring", "--factors", "2^1,3^1", "--k", "1",
            "--count", "4",
        )
        assert code == 0
        assert "mode=theorem3" in out
        assert "lhs=576" in out and "rhs=576" in out

    def test_violated_exits_6(self, capsys):
        code, out, _ = run_cli(
            capsys, "bound", "--kind", "matrix", "--n", "1", "--p", "2", "--k", "1",
            "--count", "100",
        )
        assert code == 6
        assert "verdict=violated" in out

    @pytest.mark.parametrize(
        "argv",
        [
            ("bound", "--kind", "matrix", "--k", "1", "--count", "2"),
            ("bound", "--kind", "matrix", "--n", "1", "--p", "4", "--k", "1", "--count", "2"),
            ("bound", "--kind", "ring", "--k", "1", "--count", "4"),
            ("bound", "--kind", "ring", "--factors", "2^1,3^1", "--k", "1"),
            ("bound", "--kind", "ring", "--factors", "2^1,3^1", "--k", "1", "--count", "4", "--mode", "theorem2"),
            ("bound", "--kind", "ring", "--factors", "junk", "--k", "1", "--count", "4"),
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, _, _ = run_cli(capsys, *argv)
        assert code == 2


class TestFormats:
    def test_json_lines_parse_and_keep_exact_strings(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--mode", "m", "--n", "2", "--k", "2", "--q", "2",
            "--format", "json",
        )
        assert code == 0
        records = [json.loads(line) for line in out.strip().splitlines()]
        assert len(records) == 1
        rec = records[0]
        assert rec["value"] == "8"
        assert rec["polynomial"] == "q^2+q+2"
        assert rec["parameters"]["n"] == "2"

    def test_json_big_value_no_scientific_notation(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--mode", "e", "--n", "6", "--k", "6", "--q", "1000003",
            "--format", "json",
        )
        assert code == 0
        value = json.loads(out)["value"]
        assert value.isdigit()
        assert "e" not in value and "." not in value

    def test_csv_header_and_rows(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--n-max", "3", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["command", "parameters", "polynomial", "value", "verdict", "provenance"]
        assert len(rows) == 3
        assert rows[1][2] == "2q^4+2q^3+2q^2"

    def test_identical_invocations_identical_bytes(self, capsys):
        outs = []
        for _ in range(2):
            code, out, _ = run_cli(
                capsys, "verify", "--n", "2", "--p", "3", "--all-subsets",
                "--format", "json",
            )
            assert code == 0
            outs.append(out)
        assert outs[0] == outs[1]


class TestParserPlumbing:
    def test_help_exits_zero(self, capsys):
        assert cli.main(["--help"]) == 0

    def test_no_subcommand_is_usage_error(self, capsys):
        assert cli.main([]) == 2

    def test_unknown_flag_is_usage_error(self, capsys):
        assert cli.main(["table", "--bogus"]) == 2


def test_report_record_is_flat_strings():
    report = OracleCountReport(n=2, p=3, spec="m:{0}", count=1, scanned=81, seconds=0.5)
    record = report.record()
    assert record == {
        "n": "2",
        "p": "3",
        "spec": "m:{0}",
        "count": "1",
        "scanned": "81",
        "millis": "500",
    }
