"""Command-line surface: argument parsing, output formats, exit codes."""

import csv
import io
import json
from contextlib import redirect_stdout

import pytest

from xiverify.cli import (build_parser, default_grid, load_grid_file, main,
                          parse_z, report_to_dict, render_json)
from xiverify.identities import verify_theta
from xiverify.xikernel import KernelParams


class TestParseZ:
    @pytest.mark.parametrize("text,want", [
        ("0", 0.0 + 0.0j),
        ("2", 2.0 + 0.0j),
        ("2i", 2.0j),
        ("-1.5i", -1.5j),
        ("1+0.5i", 1.0 + 0.5j),
        ("1-0.5i", 1.0 - 0.5j),
        ("1e-3", 1e-3 + 0.0j),
    ])
    def test_accepted_forms(self, text, want):
        assert parse_z(text) == want

    @pytest.mark.parametrize("text", ["", "abc", "1++2i", "1e400", "nan"])
    def test_rejected_forms(self, text):
        with pytest.raises(ValueError):
            parse_z(text)


class TestGridFile:
    def test_parses_rows_and_comments(self, tmp_path):
        p = tmp_path / "grid.txt"
        p.write_text("# comment line\n"
                     "1.0 0.0 0.0\n"
                     "\n"
                     "2.0 1.0 0.5\n")
        grid = load_grid_file(str(p))
        assert grid == [(1.0, 0.0 + 0.0j), (2.0, 1.0 + 0.5j)]

    def test_error_carries_line_number(self, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("1.0 0.0 0.0\n1.0 oops 0.0\n")
        with pytest.raises(ValueError, match="bad.txt:2"):
            load_grid_file(str(p))

    def test_rejects_nonpositive_alpha(self, tmp_path):
        p = tmp_path / "neg.txt"
        p.write_text("-1.0 0.0 0.0\n")
        with pytest.raises(ValueError, match="positive"):
            load_grid_file(str(p))

    def test_rejects_empty(self, tmp_path):
        p = tmp_path / "empty.txt"
        p.write_text("# nothing here\n")
        with pytest.raises(ValueError, match="no points"):
            load_grid_file(str(p))

    def test_default_grid_shape(self):
        grid = default_grid()
        assert len(grid) == 20
        assert (1.0, 0.0 + 0.0j) in grid


def test_report_to_dict_round_trips_complex():
    rep = verify_theta(KernelParams(2.0, 1.0), 1e-8)
    d = report_to_dict(rep)
    assert d["identity"] == "theta"
    assert d["alpha"] == 2.0
    assert d["z"] == [1.0, 0.0]
    assert d["pass"] is True
    side = d["sides"]["alpha_series"]
    assert isinstance(side, list) and len(side) == 2
    # survives JSON
    json.loads(json.dumps(d))


def run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


class TestMain:
    def test_single_point_json(self):
        code, out = run_cli(["--identity", "theta", "--alpha", "2",
                             "--z", "1"])
        assert code == 0
        doc = json.loads(out)
        assert doc["all_pass"] is True
        assert len(doc["reports"]) == 1
        assert doc["reports"][0]["identity"] == "theta"

    def test_aux_battery(self):
        code, out = run_cli(["--identity", "aux"])
        assert code == 0
        doc = json.loads(out)
        assert len(doc["reports"]) == 14

    def test_csv_format(self):
        code, out = run_cli(["--identity", "digamma", "--alpha", "1.5",
                             "--format", "csv"])
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["identity", "alpha", "z", "pair", "residual",
                           "tolerance", "pass"]
        assert len(rows) == 4  # three pairwise residuals for three sides
        assert rows[1][0] == "digamma"
        assert rows[1][6] == "pass"

    def test_out_file_and_determinism(self, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        argv = ["--identity", "theta", "--alpha", "1.25", "--z", "0.5i"]
        code, _ = run_cli(argv + ["--out", str(a)])
        assert code == 0
        code, _ = run_cli(argv + ["--out", str(b)])
        assert code == 0
        assert a.read_bytes() == b.read_bytes()

    def test_jobs_match_serial(self, tmp_path):
        a = tmp_path / "serial.json"
        b = tmp_path / "parallel.json"
        argv = ["--identity", "digamma"]
        run_cli(argv + ["--out", str(a)])
        run_cli(argv + ["--jobs", "2", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_grid_file_mode(self, tmp_path):
        p = tmp_path / "grid.txt"
        p.write_text("1.0 0.0 0.0\n2.0 0.0 0.0\n")
        code, out = run_cli(["--identity", "theta", "--grid",
                             f"file:{p}"])
        assert code == 0
        doc = json.loads(out)
        assert [r["alpha"] for r in doc["reports"]] == [1.0, 2.0]

    def test_failure_exit_code(self, sample_zeros_path):
        # an absurdly tight trend tolerance forces a reported failure
        code, out = run_cli(["--identity", "rhl", "--zeros",
                             sample_zeros_path, "--alpha", "2", "--z", "0",
                             "--rhl-tol", "1e-9"])
        assert code == 1
        doc = json.loads(out)
        assert doc["all_pass"] is False

    def test_unreachable_tol_reports_not_raises(self):
        code, out = run_cli(["--identity", "theta", "--alpha", "2",
                             "--z", "0", "--tol", "1e-16"])
        assert code == 1
        doc = json.loads(out)
        assert doc["reports"][0]["pass"] is False
        assert "error" in doc["reports"][0]["diagnostics"]


class TestUsageErrors:
    @pytest.mark.parametrize("argv", [
        ["--identity", "theta", "--z", "1"],            # z without alpha
        ["--identity", "theta", "--alpha", "-2"],
        ["--identity", "theta", "--alpha", "2", "--z", "oops"],
        ["--identity", "rhl"],                          # needs --zeros
        ["--identity", "theta", "--tol", "-1"],
        ["--identity", "theta", "--jobs", "0"],
        ["--identity", "theta", "--grid", "file:/nonexistent/path.txt"],
        ["--identity", "nope"],
    ])
    def test_exit_two(self, argv, capsys):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2

    def test_mobius_limit_floor(self, sample_zeros_path):
        with pytest.raises(SystemExit) as exc:
            main(["--identity", "rhl", "--zeros", sample_zeros_path,
                  "--mobius-limit", "500"])
        assert exc.value.code == 2


def test_tol_env_default(monkeypatch):
    monkeypatch.setenv("XI_VERIFY_TOL", "1e-6")
    args = build_parser().parse_args(["--identity", "aux"])
    assert args.tol == 1e-6
    monkeypatch.delenv("XI_VERIFY_TOL")
    args = build_parser().parse_args(["--identity", "aux"])
    assert args.tol == 1e-8


def test_render_json_trailing_newline():
    rep = verify_theta(KernelParams(1.0, 0.0), 1e-8)
    text = render_json([report_to_dict(rep)])
    assert text.endswith("\n")
    assert json.loads(text)["all_pass"] is True
