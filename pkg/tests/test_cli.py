"""Command-line front end."""
import csv
import io
import json
import math
import subprocess
import sys

import pytest

from invgauss import IgParams, cdf, quantile
from invgauss.cli import main, parse_token


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_cell(text):
    return parse_token(text, 0) if isinstance(text, str) else float(text)


class TestEvaluate:
    def test_quantile_example(self, capsys):
        code, out, _ = run(capsys, "quantile", "--p", "0.00013", "--mean", "1", "--shape", "3")
        assert code == 0 and out.strip() == "0.1504"

    def test_cdf_example(self, capsys):
        code, out, _ = run(capsys, "cdf", "--q", "110", "--mean", "1.5", "--dispersion", "0.7",
                           "--upper-tail")
        assert code == 0 and out.strip() == "2.197e-18"

    def test_full_digits(self, capsys):
        _, out, _ = run(capsys, "quantile", "--p", "0.00013", "--shape", "3", "--digits", "17")
        assert float(out) == quantile(0.00013, IgParams.from_shape(1.0, 3.0))

    def test_special_tokens(self, capsys):
        _, out, _ = run(capsys, "density", "--x", "-1", "0", "1", "2", "Inf", "NA",
                        "--mean", "1.5", "--dispersion", "0.7", "--digits", "3")
        assert out.split() == ["0", "0", "0.44", "0.162", "0", "NA"]

    def test_log_flag(self, capsys):
        _, out, _ = run(capsys, "cdf", "--q", "0.0001", "--mean", "1.5", "--dispersion", "0.7",
                        "--log", "--digits", "7")
        assert out.strip() == "-7146.914"

    def test_recycled_means(self, capsys):
        _, out, _ = run(capsys, "quantile", "--p", "0.5", "--mean", "0", "1", "2")
        assert out.split() == ["NA", "0.6758", "1.028"]

    def test_csv_and_json_agree(self, capsys):
        args = ["cdf", "--q", "0.001", "1", "110", "Inf", "--mean", "1.5", "--dispersion", "0.7"]
        _, csv_out, _ = run(capsys, *args, "--format", "csv")
        _, json_out, _ = run(capsys, *args, "--format", "json")
        rows = list(csv.DictReader(io.StringIO(csv_out)))
        recs = json.loads(json_out)
        assert list(rows[0]) == ["input", "mean", "dispersion", "result"]
        assert len(rows) == len(recs) == 4
        for r, j in zip(rows, recs):
            for key in r:
                assert parse_cell(r[key]) == parse_cell(j[key])
        assert parse_cell(rows[0]["result"]) == cdf(0.001, IgParams(1.5, 0.7))

    def test_shape_sets_dispersion_column(self, capsys):
        _, out, _ = run(capsys, "density", "--x", "1", "--shape", "4", "--format", "json")
        assert json.loads(out)[0]["dispersion"] == 0.25

    def test_input_file(self, capsys, tmp_path):
        path = tmp_path / "p.txt"
        path.write_text("0.1 0.5\nna\n  -inf\n")
        _, out, _ = run(capsys, "quantile", "--input", str(path))
        assert out.split() == ["0.2376", "0.6758", "NA", "NA"]

    def test_maxit_and_tol(self, capsys):
        _, out, _ = run(capsys, "quantile", "--p", "1e-10", "--maxit", "1", "--digits", "17")
        assert float(out) != quantile(1e-10, IgParams())


class TestErrors:
    def test_bad_token(self, capsys):
        code, _, err = run(capsys, "quantile", "--p", "0.1", "abc")
        assert code == 2 and "'abc'" in err and "position 2" in err

    def test_bad_token_in_file(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0.1 0.2 x7")
        code, _, err = run(capsys, "cdf", "--input", str(path))
        assert code == 2 and "'x7'" in err and "position 3" in err

    def test_unreadable_file(self, capsys, tmp_path):
        missing = tmp_path / "nope.txt"
        code, _, err = run(capsys, "density", "--input", str(missing))
        assert code == 2 and str(missing) in err

    def test_no_values(self, capsys):
        code, _, err = run(capsys, "density")
        assert code == 2 and "no input" in err

    def test_exclusive_parameters(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["cdf", "--q", "1", "--dispersion", "1", "--shape", "1"])
        assert exc.value.code == 2

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["plot"])
        assert exc.value.code == 2

    def test_bad_parameter_token(self, capsys):
        code, _, err = run(capsys, "cdf", "--q", "1", "--mean", "one")
        assert code == 2 and "'one'" in err


class TestSample:
    def test_reproducible(self, capsys):
        args = ["sample", "--n", "50", "--seed", "7", "--mean", "1.5", "--dispersion", "0.7"]
        _, a, _ = run(capsys, *args)
        _, b, _ = run(capsys, *args)
        assert a == b and len(a.split()) == 50

    def test_round_trip_precision(self, capsys):
        _, out, _ = run(capsys, "sample", "--n", "3", "--seed", "1", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["input"] for r in rows] == ["1", "2", "3"]

    def test_single_parameter_set(self, capsys):
        code, _, err = run(capsys, "sample", "--n", "2", "--mean", "1", "2")
        assert code == 2 and "single" in err

    def test_negative_n(self, capsys):
        code, _, _ = run(capsys, "sample", "--n", "-1")
        assert code == 2


class TestSelftestAndBench:
    def test_selftest_passes(self, capsys):
        code, out, _ = run(capsys, "selftest")
        assert code == 0 and "selftest passed" in out
        line = next(l for l in out.splitlines() if l.startswith("roundtrip |p"))
        assert float(line.split("max ")[1].split()[0]) <= 2.3e-16

    def test_selftest_reads_oracle_report(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        path.write_text(json.dumps({"cases": [{}], "max_rel_error": 1e-15}))
        code, out, _ = run(capsys, "selftest", "--oracle-report", str(path), "--cases", "5")
        assert code == 0 and "oracle report: 1 cases" in out
        path.write_text(json.dumps({"cases": [{}], "max_rel_error": 1e-12}))
        code, out, _ = run(capsys, "selftest", "--oracle-report", str(path), "--cases", "5")
        assert code == 1 and "FAILED" in out

    def test_selftest_bad_report(self, capsys, tmp_path):
        code, _, err = run(capsys, "selftest", "--oracle-report", str(tmp_path / "none.json"))
        assert code == 2 and "none.json" in err

    def test_bench_small(self, capsys):
        code, out, _ = run(capsys, "bench", "--n", "2000", "--compare", "--compare-n", "50")
        assert code == 0 and "quantiles in" in out and "interpreted core" in out

    def test_module_entry_point(self):
        res = subprocess.run([sys.executable, "-m", "invgauss", "cdf", "--q", "2", "--digits", "6"],
                             capture_output=True, text=True, check=True)
        assert res.stdout.strip() == f"{cdf(2.0, IgParams()):.6g}"
