"""Command-line front end, driven in process through main(argv)."""

import json
import math

import pytest

from sharpineq.cli import main

REPORT_KEYS = [
    "check_id", "formula_id", "params", "closed_form", "numeric",
    "abs_err", "rel_err", "tol", "pass", "runtime_ms",
]


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestConstant:
    def test_diagonal_value_json(self, capsys):
        code, out, err = run_cli(
            capsys, "constant", "sw_diag_d", "--n", "3", "--p", "2",
            "--alpha", "0.5", "--beta", "0.5", "--format", "json")
        assert code == 0
        assert err == ""
        payload = json.loads(out)
        assert payload["formula_id"] == "sw_diag_d"
        assert payload["value"] == pytest.approx(math.pi ** 3, rel=1e-12)
        assert payload["log_value"] == pytest.approx(3 * math.log(math.pi),
                                                     rel=1e-12)
        assert payload["params"] == {
            "n": 3, "p": 2.0, "alpha": 0.5, "beta": 0.5, "lambda": 2.0}
        assert payload["certificate"] == "hypotheses verified"

    def test_rejects_inadmissible_weight(self, capsys):
        code, out, err = run_cli(
            capsys, "constant", "sw_diag_d", "--n", "3", "--p", "2",
            "--alpha", "2.0", "--beta", "0.5")
        assert code == 2
        assert out == ""
        assert "alpha < n/p" in err

    def test_missing_flag(self, capsys):
        code, _, err = run_cli(capsys, "constant", "pitt_c", "--n", "3")
        assert code == 2
        assert "requires --alpha" in err

    def test_stray_flag(self, capsys):
        code, _, err = run_cli(
            capsys, "constant", "pitt_c", "--n", "3", "--alpha", "0.5",
            "--beta", "1.0")
        assert code == 2
        assert "--beta is not a parameter of pitt_c" in err

    def test_composition_rides_weight_flags(self, capsys):
        # no --lambda flag exists; the two exponents come in as alpha, beta
        # and the echo restores their proper names
        code, out, _ = run_cli(
            capsys, "constant", "riesz_composition", "--n", "3",
            "--alpha", "2.0", "--beta", "1.5", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["params"] == {"n": 3, "lambda": 2.0, "mu": 1.5}
        assert payload["value"] == pytest.approx(4 * math.pi ** 2, rel=1e-12)

    def test_slope_has_no_log_form(self, capsys):
        code, out, _ = run_cli(
            capsys, "constant", "log_uncertainty_d", "--n", "3", "--p", "2",
            "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["log_value"] is None
        assert payload["value"] < 0

    def test_text_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "constant", "pitt_c", "--n", "3", "--alpha", "0.5")
        assert code == 0
        assert out.startswith("pitt_c(")
        assert "hypotheses verified" in out

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "constant", "pitt_c", "--n", "3", "--alpha", "0.5",
            "--format", "csv")
        assert code == 0
        header, row, _ = out.split("\n")
        assert header == "formula_id,params,value,log_value,certificate"
        assert row.startswith("pitt_c,")

    def test_unknown_formula_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["constant", "no_such_constant", "--n", "3"])
        assert exc.value.code == 2
        capsys.readouterr()


class TestKernelNorm:
    def test_match_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "kernel-norm", "herbst_c", "--n", "3", "--p", "2",
            "--alpha", "1.0", "--format", "json")
        assert code == 0
        record = json.loads(out)
        assert list(record) == REPORT_KEYS
        assert record["pass"] is True
        assert record["rel_err"] <= 1e-7

    def test_unreachable_tolerance_fails(self, capsys):
        code, out, _ = run_cli(
            capsys, "kernel-norm", "herbst_c", "--n", "3", "--p", "2",
            "--alpha", "1.0", "--tol", "1e-16", "--format", "json")
        assert code == 1
        assert json.loads(out)["pass"] is False

    def test_catalog_only_formulas(self, capsys):
        # pitt_c has no single reduction kernel, so the probe surface
        # refuses it at the parser
        with pytest.raises(SystemExit) as exc:
            main(["kernel-norm", "pitt_c", "--n", "3", "--alpha", "0.5"])
        assert exc.value.code == 2
        capsys.readouterr()


class TestProbe:
    def test_csv_columns(self, capsys):
        code, out, _ = run_cli(
            capsys, "probe", "herbst_c", "--n", "3", "--p", "2",
            "--alpha", "1.0", "--widths", "8,16", "--format", "csv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "width,ratio,bound,fraction"
        assert len(lines) == 3
        rows = [line.split(",") for line in lines[1:]]
        assert [int(float(row[0])) for row in rows] == [8, 16]
        for row in rows:
            width, ratio, bound, fraction = map(float, row)
            assert fraction == pytest.approx(ratio / bound, rel=1e-15)
        assert float(rows[0][1]) <= float(rows[1][1])

    def test_json_report_schema(self, capsys):
        code, out, _ = run_cli(
            capsys, "probe", "herbst_c", "--n", "3", "--p", "2",
            "--alpha", "1.0", "--widths", "16,32,64", "--format", "json")
        assert code == 0
        record = json.loads(out)
        assert list(record) == REPORT_KEYS
        assert record["check_id"].startswith("probe[")
        assert record["numeric"] <= record["closed_form"] * (1 + 1e-6)

    def test_malformed_widths(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["probe", "herbst_c", "--n", "3", "--p", "2",
                  "--alpha", "1.0", "--widths", "8,x"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_single_width_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, "probe", "herbst_c", "--n", "3", "--p", "2",
            "--alpha", "1.0", "--widths", "8")
        assert code == 2
        assert "at least two" in err


class TestOutputAndFigures:
    ARGS = ("probe", "herbst_c", "--n", "3", "--p", "2", "--alpha", "1.0",
            "--widths", "8,16", "--format", "csv")

    def test_output_file_with_figure(self, capsys, tmp_path):
        target = tmp_path / "probe.csv"
        code, out, _ = run_cli(capsys, *self.ARGS, "--output", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("width,ratio,bound,fraction")
        png = target.with_suffix(".png")
        assert png.exists()
        assert png.read_bytes()[:4] == b"\x89PNG"

    def test_no_figures_flag(self, capsys, tmp_path):
        target = tmp_path / "probe.csv"
        code, _, _ = run_cli(capsys, *self.ARGS, "--output", str(target),
                             "--no-figures")
        assert code == 0
        assert target.exists()
        assert not target.with_suffix(".png").exists()

    def test_stdout_report_renders_nothing(self, capsys, tmp_path,
                                           monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, out, _ = run_cli(capsys, *self.ARGS)
        assert code == 0
        assert out.startswith("width,ratio,bound,fraction")
        assert list(tmp_path.iterdir()) == []

    def test_constant_output_has_no_figure(self, capsys, tmp_path):
        target = tmp_path / "value.json"
        code, _, _ = run_cli(
            capsys, "constant", "pitt_c", "--n", "3", "--alpha", "0.5",
            "--format", "json", "--output", str(target))
        assert code == 0
        assert json.loads(target.read_text())["formula_id"] == "pitt_c"
        assert not target.with_suffix(".png").exists()


@pytest.fixture(scope="module")
def battery(tmp_path_factory):
    target = tmp_path_factory.mktemp("verify") / "verify.json"
    code = main(["verify", "all", "--format", "json",
                 "--output", str(target)])
    records = [json.loads(line)
               for line in target.read_text().splitlines()]
    return code, target, records


class TestVerify:
    def test_exit_zero_when_all_pass(self, battery):
        code, _, records = battery
        assert code == 0
        assert all(r["pass"] for r in records)

    def test_one_json_line_per_check(self, battery):
        _, _, records = battery
        assert len(records) >= 100
        ids = [r["check_id"] for r in records]
        assert ids == sorted(ids)
        assert len(set(ids)) == len(ids)

    def test_stable_record_schema(self, battery):
        _, _, records = battery
        for record in records:
            assert list(record) == REPORT_KEYS
            assert isinstance(record["pass"], bool)
            assert all(isinstance(v, (int, float))
                       for v in record["params"].values())
            assert math.isfinite(record["rel_err"])

    def test_summary_figure_rendered(self, battery):
        _, target, _ = battery
        png = target.with_suffix(".png")
        assert png.exists()
        assert png.read_bytes()[:4] == b"\x89PNG"
