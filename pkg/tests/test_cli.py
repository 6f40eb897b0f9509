"""Command-line contract: exit codes, formats, determinism."""

import csv
import json
import subprocess
import sys

import pytest

from qbern.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_basis_value(self, capsys):
        code, out, _ = run_cli(["eval", "basis", "--j", "1", "--n", "2", "--x", "0.5"], capsys)
        assert code == 0
        assert out == "0.5\n"

    def test_y_at_q_one(self, capsys):
        # equals basis(1, 3, 0.5) = 3 * 0.5 * 0.25
        code, out, _ = run_cli(
            ["eval", "y", "--n", "3", "--k", "1", "--x", "0.5", "--q", "1"], capsys)
        assert code == 0
        assert out == "0.375\n"

    def test_precondition_violation_exits_2(self, capsys):
        code, _, err = run_cli(
            ["eval", "y", "--n", "3", "--k", "5", "--x", "0.5", "--q", "1"], capsys)
        assert code == 2
        assert "k <= n" in err

    def test_missing_parameter_exits_2(self, capsys):
        code, _, err = run_cli(["eval", "y", "--n", "3", "--k", "1", "--q", "1"], capsys)
        assert code == 2
        assert "--x" in err

    def test_unknown_quantity_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "bogus", "--n", "1"])
        assert exc.value.code == 2

    def test_s_q_value(self, capsys):
        code, out, _ = run_cli(
            ["eval", "s_q", "--z", "-3", "--k", "1", "--x", "0.5", "--q", "0.7"], capsys)
        assert code == 0
        float(out)

    def test_precision_flag(self, capsys):
        code, out, _ = run_cli(
            ["eval", "basis", "--j", "1", "--n", "3", "--x", "0.1",
             "--precision", "5"], capsys)
        assert code == 0
        assert out == "0.243\n"

    def test_moment(self, capsys):
        code, out, _ = run_cli(
            ["eval", "moment", "--n", "10", "--x", "0.3", "--m", "1"], capsys)
        assert code == 0
        assert float(out) == pytest.approx(3.0)

    def test_phillips(self, capsys):
        code, out, _ = run_cli(
            ["eval", "phillips", "--fn", "square", "--n", "3", "--x", "0.5",
             "--q", "0.8"], capsys)
        assert code == 0
        float(out)


class TestTable:
    def test_basis_row_count(self, capsys):
        code, out, _ = run_cli(["table", "basis", "--n", "2", "--grid", "0:1:0.5"], capsys)
        assert code == 0
        rows = list(csv.DictReader(out.splitlines()))
        assert len(rows) == 9
        assert [r["j"] for r in rows] == ["0"] * 3 + ["1"] * 3 + ["2"] * 3

    def test_y_row_count_and_order(self, capsys):
        code, out, _ = run_cli(
            ["table", "y", "--n", "4", "--k", "2", "--q", "0.5,0.9",
             "--grid", "0.1:0.9:0.4"], capsys)
        assert code == 0
        rows = list(csv.DictReader(out.splitlines()))
        assert len(rows) == 6
        assert [(r["q"], r["x"]) for r in rows] == [
            ("0.5", "0.1"), ("0.5", "0.5"), ("0.5", "0.9"),
            ("0.9", "0.1"), ("0.9", "0.5"), ("0.9", "0.9"),
        ]

    def test_s_q_single_row_matches_eval(self, capsys):
        code, out, _ = run_cli(
            ["table", "s_q", "--z", "-3", "--k", "1", "--x", "0.5", "--q", "0.7"], capsys)
        assert code == 0
        rows = list(csv.DictReader(out.splitlines()))
        assert len(rows) == 1
        code2, out2, _ = run_cli(
            ["eval", "s_q", "--z", "-3", "--k", "1", "--x", "0.5", "--q", "0.7"], capsys)
        assert rows[0]["value"] == out2.strip()

    def test_json_round_trip(self, capsys):
        code, out, _ = run_cli(
            ["table", "moment", "--n", "6", "--m", "2", "--x", "0.25,0.75",
             "--format", "json"], capsys)
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 2
        assert rows[0]["value"] == pytest.approx(
            float(f"{rows[0]['value']!r}"))

    def test_missing_grid_exits_2(self, capsys):
        code, _, err = run_cli(["table", "basis", "--n", "2"], capsys)
        assert code == 2
        assert "--x or --grid" in err

    def test_byte_identical_files(self, tmp_path, capsys):
        out1 = tmp_path / "a.csv"
        out2 = tmp_path / "b.csv"
        argv = ["table", "y", "--n", "5", "--k", "2", "--q", "0.4,0.8",
                "--grid", "0:1:0.25"]
        assert main(argv + ["--out", str(out1)]) == 0
        assert main(argv + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        assert b"\r" not in out1.read_bytes()

    def test_unwritable_output_exits_1(self, tmp_path, capsys):
        target = tmp_path / "missing-dir" / "t.csv"
        code, _, err = run_cli(
            ["table", "basis", "--n", "1", "--grid", "0:1:0.5",
             "--out", str(target)], capsys)
        assert code == 1


class TestVerify:
    def test_classical_passes(self, tmp_path):
        out = tmp_path / "report.jsonl"
        assert main(["verify", "classical", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        summary = json.loads(lines[-1])
        assert summary["failed"] == 0
        assert summary["checks"] == len(lines) - 1
        for line in lines[:-1]:
            assert json.loads(line)["passed"] is True

    def test_absurd_tolerance_exits_1(self, tmp_path):
        out = tmp_path / "report.jsonl"
        assert main(["verify", "classical", "--tol", "1e-30", "--out", str(out)]) == 1
        summary = json.loads(out.read_text().splitlines()[-1])
        assert summary["failed"] > 0

    def test_unknown_suite_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "everything"])
        assert exc.value.code == 2

    def test_deterministic_output(self, tmp_path):
        out1 = tmp_path / "a.jsonl"
        out2 = tmp_path / "b.jsonl"
        assert main(["verify", "identities", "--out", str(out1)]) == 0
        assert main(["verify", "identities", "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()


class TestApprox:
    def test_classical_error_shrinks(self, capsys):
        code, out, _ = run_cli(["approx", "cos", "classical", "--n", "10,100"], capsys)
        assert code == 0
        rows = list(csv.DictReader(out.splitlines()))
        errs = {int(r["n"]): float(r["max_error"]) for r in rows}
        assert errs[100] < errs[10]

    def test_phillips_margin_nonnegative(self, capsys):
        code, out, _ = run_cli(
            ["approx", "square", "phillips", "--n", "5", "--q", "0.8"], capsys)
        assert code == 0
        rows = list(csv.DictReader(out.splitlines()))
        assert float(rows[0]["margin"]) >= -1e-12

    def test_phillips_monotone_error_column(self, capsys):
        code, out, _ = run_cli(
            ["approx", "square", "phillips", "--n", "2,3,4", "--q", "0.8"], capsys)
        assert code == 0
        rows = list(csv.DictReader(out.splitlines()))
        assert [int(r["n"]) for r in rows] == [2, 3, 4]
        assert all(float(r["margin"]) >= -1e-12 for r in rows)

    def test_missing_q_exits_2(self, capsys):
        code, _, err = run_cli(["approx", "square", "phillips", "--n", "3"], capsys)
        assert code == 2
        assert "--q" in err

    def test_unknown_function_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["approx", "sinh", "classical", "--n", "3"])
        assert exc.value.code == 2


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "qbern", "eval", "basis",
             "--j", "1", "--n", "2", "--x", "0.5"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout == "0.5\n"
