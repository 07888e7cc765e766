"""Tests for the command-line interface."""

import math

import pytest

from gaussfisher import cli, verification
from gaussfisher.errors import ValidationError

MTS_DOC = """\
family = MTS
n1 = 2.0
n2 = 1.0
theta = 1.5707963267948966
phi = 0.0
"""

STS_DOC = """\
family = STS
n1 = 0.0
n2 = 0.0
r = 0.7
phi = 0.0
"""


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def parse_report(text):
    out = {}
    for line in text.strip().splitlines():
        key, _, value = line.partition(" = ")
        out[key] = value
    return out


class TestStateDocuments:
    def test_round_trip(self):
        spec = cli.parse_state_document(MTS_DOC)
        assert cli.parse_state_document(cli.render_state_document(spec)) == spec

    def test_round_trip_with_mean(self):
        spec = cli.parse_state_document(STS_DOC + "mean = 0.1, -0.2, 0.3, 0\n")
        assert spec.displaced
        assert cli.parse_state_document(cli.render_state_document(spec)) == spec

    def test_missing_key_reports_coordinate(self):
        with pytest.raises(ValidationError, match="theta"):
            cli.parse_state_document("family = MTS\nn1 = 1\nn2 = 0.5\nphi = 0\n")

    def test_bad_number_reports_key(self):
        with pytest.raises(ValidationError, match="n1"):
            cli.parse_state_document("family = TS\nn1 = abc\nn2 = 0.5\n")

    def test_unknown_keys_rejected(self):
        with pytest.raises(ValidationError, match="wobble"):
            cli.parse_state_document(MTS_DOC + "wobble = 3\n")


class TestFidelityCommand:
    def test_identical_specs(self, tmp_path, capsys):
        path = write(tmp_path, "a.txt", MTS_DOC)
        assert cli.main(["fidelity", path, path]) == 0
        report = parse_report(capsys.readouterr().out)
        assert float(report["fidelity"]) == pytest.approx(1.0, abs=1e-12)
        assert float(report["closed_form_residual"]) < 1e-12

    def test_thermal_quarter(self, tmp_path, capsys):
        a = write(tmp_path, "a.txt", "family = TS\nn1 = 0\nn2 = 0\n")
        b = write(tmp_path, "b.txt", "family = TS\nn1 = 1\nn2 = 1\n")
        assert cli.main(["fidelity", a, b]) == 0
        report = parse_report(capsys.readouterr().out)
        assert float(report["fidelity"]) == pytest.approx(0.25, rel=1e-12)
        assert float(report["bures_angle"]) == pytest.approx(math.pi / 3.0, rel=1e-12)

    def test_displaced_pair_skips_closed_form(self, tmp_path, capsys):
        a = write(tmp_path, "a.txt", MTS_DOC + "mean = 1, 0, 0, 0\n")
        b = write(tmp_path, "b.txt", MTS_DOC)
        assert cli.main(["fidelity", a, b]) == 0
        report = parse_report(capsys.readouterr().out)
        assert "closed_form_fidelity" not in report
        assert float(report["fidelity"]) < 1.0

    def test_malformed_document_exits_2_without_output(self, tmp_path, capsys):
        bad = write(tmp_path, "bad.txt", "family = MTS\nn1 = 1\n")
        good = write(tmp_path, "good.txt", MTS_DOC)
        out = tmp_path / "report.txt"
        assert cli.main(["fidelity", bad, good, "--out", str(out)]) == 2
        assert not out.exists()
        assert "error" in capsys.readouterr().err


class TestMetricCommand:
    def test_mts_anchor_components(self, tmp_path, capsys):
        path = write(tmp_path, "a.txt", MTS_DOC)
        assert cli.main(["metric", path, "--measurements", "100"]) == 0
        report = parse_report(capsys.readouterr().out)
        assert float(report["qfi_n1"]) == pytest.approx(1.0 / 6.0, rel=1e-12)
        assert float(report["qfi_n2"]) == pytest.approx(0.5, rel=1e-12)
        assert float(report["qfi_theta"]) == pytest.approx(1.0 / 7.0, rel=1e-12)
        assert float(report["qfi_phi"]) == pytest.approx(1.0 / 7.0, rel=1e-12)
        assert float(report["crb_n1"]) == pytest.approx(0.06, rel=1e-12)

    def test_sts_squeezed_vacuum(self, tmp_path, capsys):
        path = write(tmp_path, "a.txt", STS_DOC)
        assert cli.main(["metric", path]) == 0
        report = parse_report(capsys.readouterr().out)
        assert float(report["qfi_2r"]) == pytest.approx(1.0, rel=1e-12)
        assert float(report["qfi_n1"]) == math.inf

    def test_numeric_deviation_column(self, tmp_path, capsys):
        path = write(tmp_path, "a.txt", MTS_DOC.replace("phi = 0.0", "phi = 0.3"))
        assert cli.main(["metric", path, "--numeric"]) == 0
        report = parse_report(capsys.readouterr().out)
        assert float(report["numeric_max_deviation"]) < 1e-4

    def test_degenerate_numeric_point_fails(self, tmp_path, capsys):
        doc = "family = MTS\nn1 = 1.0\nn2 = 1.0\ntheta = 1.0\nphi = 0.0\n"
        path = write(tmp_path, "a.txt", doc)
        assert cli.main(["metric", path, "--numeric"]) == 2
        assert "degenerate" in capsys.readouterr().err


class TestCurvatureCommand:
    def test_mts_zero_point(self, capsys):
        assert cli.main(["curvature", "MTS", "0.5", "0.5"]) == 0
        report = parse_report(capsys.readouterr().out)
        assert float(report["curvature_closed"]) == pytest.approx(0.0, abs=1e-12)

    def test_sts_squeezed_vacuum_value(self, capsys):
        assert cli.main(["curvature", "STS", "0", "0"]) == 0
        report = parse_report(capsys.readouterr().out)
        assert float(report["curvature_closed"]) == pytest.approx(-16.0)

    def test_method_all_three_values(self, capsys):
        assert cli.main(["curvature", "MTS", "2", "1", "--method", "all"]) == 0
        report = parse_report(capsys.readouterr().out)
        for key in ("curvature_closed", "curvature_pipeline", "curvature_warped"):
            assert float(report[key]) == pytest.approx(-448.0 / 49.0, rel=1e-3)
        assert float(report["max_residual"]) < 1e-3

    def test_pipeline_fallback_at_degenerate_point(self, capsys):
        assert cli.main(["curvature", "MTS", "0.5", "0.5", "--method", "pipeline"]) == 0
        report = parse_report(capsys.readouterr().out)
        assert "warning_0" in report
        assert "fallback" in report["warning_0"]


class TestSurfaceCommand:
    def test_symmetric_zero_crossing(self, capsys):
        assert cli.main(["surface", "2a", "--values", "0.5,1.0"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "n,R"
        row = dict(zip(lines[0].split(","), lines[1].split(",")))
        assert float(row["R"]) == pytest.approx(0.0, abs=1e-12)

    def test_edge_curves_share_asymptote(self, capsys):
        assert cli.main(["surface", "5", "--values", "100000000"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        _, mt, st_ = (float(v) for v in lines[1].split(","))
        assert mt == pytest.approx(2.0, abs=1e-6)
        assert st_ == pytest.approx(2.0, abs=1e-6)

    def test_deterministic_output(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert cli.main(["surface", "4b", "--count", "41", "--out", str(a)]) == 0
        assert cli.main(["surface", "4b", "--count", "41", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_surface_figure_grid(self, tmp_path):
        out = tmp_path / "fig1.csv"
        assert cli.main(["surface", "1", "--values", "0,1", "--out", str(out)]) == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "n1,n2,R"
        assert len(lines) == 5
        grid = {tuple(line.split(",")[:2]): float(line.split(",")[2])
                for line in lines[1:]}
        assert grid[("0", "1")] == pytest.approx(20.0)

    def test_domain_violation_exits_2(self, capsys):
        assert cli.main(["surface", "2b", "--values", "1.5"]) == 2
        assert "error" in capsys.readouterr().err

    def test_bad_range_exits_2(self, capsys):
        assert cli.main(["surface", "1", "--range", "5:1"]) == 2
        capsys.readouterr()

    def test_unknown_figure_exits_2(self, capsys):
        assert cli.main(["surface", "9"]) == 2
        capsys.readouterr()


class TestVerifyCommand:
    def test_core_suite_passes(self, capsys):
        assert cli.main(["verify", "core", "--seed", "11"]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out and "FAIL" not in out

    def test_all_without_oracle_notes_gate(self, capsys):
        assert cli.main(["verify", "all", "--seed", "11"]) == 0
        assert "gated behind --include-oracle" in capsys.readouterr().out

    def test_failure_exit_code(self, capsys, monkeypatch):
        failing = lambda seed: [verification.CheckResult("forced", False, "boom")]
        monkeypatch.setitem(verification.SUITES, "core", failing)
        assert cli.main(["verify", "core"]) == 1
        assert "FAIL" in capsys.readouterr().out


class TestOracleCommand:
    def test_small_truncation_agreement(self, tmp_path, capsys):
        a = write(tmp_path, "a.txt",
                  "family = MTS\nn1 = 0.3\nn2 = 0.1\ntheta = 1.1\nphi = 0.4\n")
        b = write(tmp_path, "b.txt",
                  "family = MTS\nn1 = 0.2\nn2 = 0.35\ntheta = 0.6\nphi = -0.8\n")
        assert cli.main(["oracle", a, b, "--truncation", "20"]) == 0
        report = parse_report(capsys.readouterr().out)
        assert float(report["closed_form_difference"]) < 1e-6
        assert float(report["trace_deficit_a"]) < 1e-6

    def test_displaced_states_rejected(self, tmp_path, capsys):
        a = write(tmp_path, "a.txt", MTS_DOC + "mean = 1, 0, 0, 0\n")
        b = write(tmp_path, "b.txt", MTS_DOC)
        assert cli.main(["oracle", a, b]) == 2
        capsys.readouterr()
