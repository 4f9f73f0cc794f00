"""Command-line front end: formats, exit codes, determinism, file output."""

import contextlib
import io
import json

import pytest

from twobridge.cli import (
    EXIT_OK,
    EXIT_RESOURCE_CAP,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    run,
)
from twobridge.counts import knots_total, t_total
from twobridge.oracle import TABLE2


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


class TestEnumerate:
    def test_jsonl_lines_and_genus(self):
        code, out, _ = invoke(["enumerate", "--crossings", "5"])
        assert code == EXIT_OK
        rows = [json.loads(line) for line in out.splitlines()]
        assert [r["eps"] for r in rows] == [[1, 1, 2, 2, 1], [1, 2, 1, 2, 1], [1, 2, 2, 1, 1]]
        assert [r["genus"] for r in rows] == [1, 2, 1]
        assert rows[1]["palindromic"] is True

    def test_line_counts_match_totals(self):
        for c in (7, 9, 10):
            code, out, _ = invoke(["enumerate", "--crossings", str(c)])
            assert code == EXIT_OK
            assert len(out.splitlines()) == t_total(c)

    def test_dedupe_multiplicities(self):
        code, out, _ = invoke(["enumerate", "--crossings", "9", "--dedupe"])
        assert code == EXIT_OK
        rows = [json.loads(line) for line in out.splitlines()]
        assert len(rows) == knots_total(9)
        assert sum(r["multiplicity"] for r in rows) == t_total(9)

    def test_palindromic_only(self):
        code, out, _ = invoke(["enumerate", "--crossings", "8", "--palindromic-only"])
        rows = [json.loads(line) for line in out.splitlines()]
        assert all(r["palindromic"] for r in rows)
        assert len(rows) == 3

    def test_csv_header_and_eps_digits(self):
        code, out, _ = invoke(["enumerate", "--crossings", "5", "--format", "csv"])
        lines = out.splitlines()
        assert lines[0] == "c,eps,symbols,palindromic,genus"
        assert lines[1] == "5,11221,+-++--+,false,1"

    def test_json_array(self):
        code, out, _ = invoke(["enumerate", "--crossings", "5", "--format", "json"])
        rows = json.loads(out)
        assert isinstance(rows, list) and len(rows) == 3

    def test_too_small_crossings_is_usage_error(self):
        code, _, err = invoke(["enumerate", "--crossings", "2"])
        assert code == EXIT_USAGE
        assert "crossing number" in err

    def test_cap_exceeded(self):
        code, _, err = invoke(["enumerate", "--crossings", "40"])
        assert code == EXIT_RESOURCE_CAP

    def test_cap_flag_raises_ceiling(self):
        code, out, _ = invoke(["enumerate", "--crossings", "6", "--max-enum-c", "6"])
        assert code == EXIT_OK
        code, _, _ = invoke(["enumerate", "--crossings", "7", "--max-enum-c", "6"])
        assert code == EXIT_RESOURCE_CAP


class TestTable:
    def test_default_range_matches_golden_table(self):
        code, out, _ = invoke(["table"])
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "c,g,t,tp,tbar"
        got = {}
        for line in lines[1:]:
            c, g, t, tp, tbar = line.split(",")
            got[(int(c), int(g))] = int(tbar)
        for c, row in TABLE2.items():
            for g, val in enumerate(row, start=1):
                assert got[(c, g)] == val

    def test_min_c_validation(self):
        code, _, _ = invoke(["table", "--min-c", "2"])
        assert code == EXIT_USAGE

    def test_empty_range_emits_header_only(self):
        code, out, _ = invoke(["table", "--min-c", "6", "--max-c", "5"])
        assert code == EXIT_OK
        assert out == "c,g,t,tp,tbar\n"

    def test_large_c_row_is_exact(self):
        code, out, _ = invoke(["table", "--min-c", "300", "--max-c", "300"])
        assert code == EXIT_OK
        first = out.splitlines()[1].split(",")
        assert first[:2] == ["300", "1"]
        assert int(first[2]) == 149  # (c-1)//2 words of genus one

    def test_json_format(self):
        code, out, _ = invoke(["table", "--min-c", "3", "--max-c", "5", "--format", "json"])
        rows = json.loads(out)
        assert rows[0] == {"c": 3, "g": 1, "t": 1, "tp": 1, "tbar": 1}


class TestStats:
    def test_document(self):
        code, out, _ = invoke(["stats", "--crossings", "7"])
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["mean"] == "13/7"
        assert doc["variance"] == "20/49"
        assert doc["qs_class"] == "LeftDominated"

    def test_jsonl_single_line(self):
        code, out, _ = invoke(["stats", "--crossings", "11", "--format", "jsonl"])
        assert code == EXIT_OK
        doc = json.loads(out)
        assert out.count("\n") == 1
        assert doc["median_set"] == [3]

    def test_tied_mode(self):
        code, out, _ = invoke(["stats", "--crossings", "5"])
        assert json.loads(out)["mode_set"] == [1, 2]

    def test_csv_rejected(self):
        code, _, _ = invoke(["stats", "--crossings", "7", "--format", "csv"])
        assert code == EXIT_USAGE


class TestVerify:
    def test_quick_pass(self):
        code, out, _ = invoke(["verify", "--max-enum-c", "8", "--max-c", "25"])
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["passed"] is True

    def test_fault_injection_fails(self):
        code, out, _ = invoke(
            ["verify", "--max-enum-c", "8", "--max-c", "25", "--inject-fault", "t5g1"]
        )
        assert code == EXIT_VERIFICATION_FAILED
        doc = json.loads(out)
        failed = [c for c in doc["checks"] if c["status"] == "fail"]
        assert failed
        ce = next(c["first_counterexample"] for c in failed if c["name"] == "t5g1_base_value")
        assert (ce["c"], ce["g"]) == (5, 1)

    def test_unknown_fault_is_usage_error(self):
        code, _, _ = invoke(
            ["verify", "--max-enum-c", "6", "--max-c", "25", "--inject-fault", "bogus"]
        )
        assert code == EXIT_USAGE


class TestNormality:
    def test_row_per_crossing_number(self):
        code, out, _ = invoke(["normality", "--crossings-list", "23,43", "--format", "csv"])
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "c,n,ks_to_normal,binom_tv,mean_gap,var_gap"
        first = lines[1].split(",")
        assert first[0] == "23" and first[1] == "10"
        assert float(first[2]) == pytest.approx(0.14658304017208712, abs=1e-15)

    def test_ks_column_decreases(self):
        code, out, _ = invoke(["normality", "--crossings-list", "23,43,83", "--format", "csv"])
        ks = [float(line.split(",")[2]) for line in out.splitlines()[1:]]
        assert ks == sorted(ks, reverse=True)

    def test_small_c_rejected(self):
        code, _, _ = invoke(["normality", "--crossings-list", "4"])
        assert code == EXIT_USAGE


class TestPlumbing:
    def test_unknown_command_is_usage_error(self):
        code, _, _ = invoke(["frobnicate"])
        assert code == EXIT_USAGE

    def test_help_exits_zero(self):
        code, _, _ = invoke(["--help"])
        assert code == EXIT_OK

    def test_output_file_matches_stdout_bytes(self, tmp_path):
        _, stdout_text, _ = invoke(["enumerate", "--crossings", "9", "--format", "csv"])
        target = tmp_path / "out.csv"
        code, piped, _ = invoke(
            ["enumerate", "--crossings", "9", "--format", "csv", "--output", str(target)]
        )
        assert code == EXIT_OK
        assert piped == ""
        data = target.read_bytes()
        assert data == stdout_text.encode()
        assert b"\r" not in data

    def test_failed_run_leaves_no_partial_file(self, tmp_path):
        target = tmp_path / "never.csv"
        code, _, _ = invoke(
            ["enumerate", "--crossings", "40", "--format", "csv", "--output", str(target)]
        )
        assert code == EXIT_RESOURCE_CAP
        assert not target.exists()

    def test_threads_do_not_change_bytes(self):
        base = invoke(["enumerate", "--crossings", "11", "--threads", "1"])
        for threads in ("2", "5"):
            again = invoke(["enumerate", "--crossings", "11", "--threads", threads])
            assert again == base

    def test_threads_env_fallback(self, monkeypatch):
        monkeypatch.setenv("TWOBRIDGE_THREADS", "3")
        code, out, _ = invoke(["enumerate", "--crossings", "9"])
        assert code == EXIT_OK
        assert len(out.splitlines()) == t_total(9)
        monkeypatch.setenv("TWOBRIDGE_THREADS", "zero")
        code, _, _ = invoke(["enumerate", "--crossings", "9"])
        assert code == EXIT_USAGE

    def test_repeated_runs_are_identical(self):
        a = invoke(["table", "--min-c", "3", "--max-c", "12"])
        b = invoke(["table", "--min-c", "3", "--max-c", "12"])
        assert a == b
