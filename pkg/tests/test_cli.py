import json

import pytest

from sympineq.cli import main

from conftest import SAMPLE_Q, SAMPLE_R


@pytest.fixture
def files(tmp_path):
    paths = {}

    def write(name, content):
        p = tmp_path / name
        p.write_text(content)
        paths[name] = str(p)

    write("x.json", '[4, "19/10", "11/10"]')
    write("y.json", "[3, 3, 1]")
    write("a.json", "[3, 1]")
    write("b.json", "[2, 2]")
    write("q.json", json.dumps([list(r) for r in SAMPLE_Q]))
    write("r.json", json.dumps([list(r) for r in SAMPLE_R]))
    write("q.csv", "\n".join(",".join(str(v) for v in row) for row in SAMPLE_Q))
    write("c.json", '[1, "1/2"]')
    write("bad.json", "[1, 2,")
    write("negative.json", "[1, -2]")
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


class TestNorms:
    def test_defaults(self, capsys, files):
        code, report, _ = run_json(capsys, "norms", "--x", files["x.json"])
        assert code == 0
        assert report["partial_sums_desc"] == ["4", "59/10", "7"]
        by_p = {row["p"]: row["mean"] for row in report["means"]}
        assert by_p[1.0] == pytest.approx(7 / 3)

    def test_explicit_exponents(self, capsys, files):
        code, report, _ = run_json(capsys, "norms", "--x", files["y.json"],
                                   "--p", "inf", "--p", "0")
        assert code == 0
        assert report["means"][0]["mean"] == 3.0


class TestFkr:
    def test_table(self, capsys, files):
        code, report, _ = run_json(capsys, "fkr", "--x", files["b.json"],
                                   "--r", "2")
        assert code == 0
        assert [row["value"] for row in report["values"]] == \
            ["1", "4", "8", "8", "4"]

    def test_single_k(self, capsys, files):
        code, report, _ = run_json(capsys, "fkr", "--x", files["b.json"],
                                   "--r", "2", "--k", "3")
        assert report["values"] == [
            {"k": 3, "value": "8", "kfact_value": "48"}]


class TestTheorem1:
    def test_matrix_mode_order_two_certifies(self, capsys, files):
        code, report, _ = run_json(
            capsys, "theorem1", "--qx", files["q.json"], "--qy",
            files["r.json"], "--r", "2")
        assert code == 0
        assert report["certified_r"] == 2
        assert report["certified_interval"] == [0.0, 3.0]
        assert report["conclusions"]["low_all_pass"]
        assert report["conclusions"]["high_all_pass"]

    def test_matrix_mode_order_three_fails_with_witness(self, capsys, files):
        code, report, _ = run_json(
            capsys, "theorem1", "--qx", files["q.json"], "--qy",
            files["r.json"], "--r", "3")
        assert code == 1
        failing = [c for c in report["hypotheses"][0]["checks"]
                   if not c["pass"]]
        assert failing == [{
            "k": 10, "fx": "73/216", "fy": "71/216",
            "kfact_fx": "1226400", "kfact_fy": "1192800", "pass": False}]

    def test_matrix_scan_certifies_order_two(self, capsys, files):
        code, report, _ = run_json(
            capsys, "theorem1", "--qx", files["q.json"], "--qy",
            files["r.json"], "--r-max", "3")
        assert code == 1  # the r = 3 hypothesis check fails
        assert report["certified_r"] == 2

    def test_vector_mode(self, capsys, files):
        code, report, _ = run_json(
            capsys, "theorem1", "--x", files["x.json"], "--y",
            files["y.json"], "--r", "3")
        assert code == 0
        assert report["certified_r"] == 3

    def test_csv_matrix_input(self, capsys, files):
        code, report, _ = run_json(
            capsys, "theorem1", "--qx", files["q.csv"], "--qy",
            files["r.json"], "--r", "1")
        assert code == 0

    def test_mode_confusion_rejected(self, capsys, files):
        code, _, err = run(capsys, "theorem1", "--x", files["x.json"],
                           "--r", "1")
        assert code == 2 and "error:" in err


class TestMajorize:
    def test_holds(self, capsys, files):
        code, report, _ = run_json(capsys, "majorize", "--x", files["a.json"],
                                   "--y", files["b.json"])
        assert code == 0 and report["holds"]

    def test_fails_with_witness(self, capsys, files):
        code, report, _ = run_json(capsys, "majorize", "--x", files["x.json"],
                                   "--y", files["y.json"])
        assert code == 1
        assert report["first_violation"] == {
            "k": 2, "x_partial": "59/10", "y_partial": "6"}

    def test_psi_grid(self, capsys, files):
        code, report, _ = run_json(capsys, "majorize", "--x", files["a.json"],
                                   "--y", files["b.json"], "--psi-grid", "1",
                                   "--psi-grid", "2")
        assert [row["holds"] for row in report["psi"]] == [True, True]


class TestTheorem2:
    def test_majorizing_pair(self, capsys, files):
        code, report, _ = run_json(capsys, "theorem2", "--x", files["a.json"],
                                   "--y", files["b.json"], "--k-max", "6")
        assert code == 0 and report["pass"]

    def test_probe_pair_reports_violations(self, capsys, files):
        code, report, _ = run_json(capsys, "theorem2", "--x", files["x.json"],
                                   "--y", files["y.json"], "--k-max", "12")
        assert code == 1
        assert not report["majorization_holds"]
        assert report["subset_power_family_violation"]["k"] == 11


class TestSpectral:
    def test_gram_pipeline(self, capsys, files):
        code, report, _ = run_json(capsys, "spectral", "--q", files["q.json"],
                                   "--r", "2")
        assert code == 0
        assert report["e_coeffs"] == ["1", "9", "16", "9", "1"]
        table = report["f_tables"]["2"]
        assert [row["kfact_value"] for row in table[2:9]] == \
            ["81", "405", "1524", "4050", "7290", "5670", "2520"]

    def test_requires_exactly_one_input(self, capsys, files):
        code, _, err = run(capsys, "spectral", "--q", files["q.json"],
                           "--matrix", files["q.json"])
        assert code == 2 and "error:" in err


class TestMellinValidate:
    def test_identity_passes(self, capsys):
        code, report, _ = run_json(capsys, "mellin-validate", "--which", "id1",
                                   "--r", "2", "--p", "0.5", "--a", "2")
        assert code == 0
        assert report["relative_error"] < 1e-6
        assert report["target"] == pytest.approx(2 ** 0.5)

    def test_out_of_range_p(self, capsys):
        code, _, err = run(capsys, "mellin-validate", "--which", "id1",
                           "--r", "2", "--p", "1.5", "--a", "2")
        assert code == 2 and "error:" in err


class TestCatalyst:
    def test_comparison_passes(self, capsys, files):
        code, report, _ = run_json(capsys, "catalyst", "--x", files["x.json"],
                                   "--c", files["c.json"], "--y",
                                   files["y.json"])
        assert code == 0 and report["pass"]
        assert len(report["tensor_x"]) == 6

    def test_catalyst_head_must_be_one(self, capsys, files, tmp_path):
        bad = tmp_path / "badc.json"
        bad.write_text("[2, 1]")
        code, _, err = run(capsys, "catalyst", "--x", files["x.json"],
                           "--c", str(bad))
        assert code == 2 and "error:" in err


class TestErrorsAndDeterminism:
    def test_malformed_json_diagnoses_position(self, capsys, files):
        code, _, err = run(capsys, "norms", "--x", files["bad.json"])
        assert code == 2
        assert "line 1" in err and "column" in err

    def test_negative_entry_rejected(self, capsys, files):
        code, _, err = run(capsys, "norms", "--x", files["negative.json"])
        assert code == 2 and "nonnegative" in err

    def test_unknown_command_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["no-such-command"])
        assert exc.value.code == 2

    def test_contract_violations_are_usage_errors(self, capsys, files):
        code, _, err = run(capsys, "theorem1", "--x", files["a.json"], "--y",
                           files["b.json"], "--r", "1", "--grid-points", "2")
        assert code == 2 and "error:" in err
        code, _, err = run(capsys, "fkr", "--x", files["a.json"], "--r", "0")
        assert code == 2 and "error:" in err

    def test_reports_are_byte_identical_and_round_trip(self, capsys, files):
        _, out1, _ = run(capsys, "theorem2", "--x", files["a.json"], "--y",
                         files["b.json"], "--k-max", "5")
        _, out2, _ = run(capsys, "theorem2", "--x", files["a.json"], "--y",
                         files["b.json"], "--k-max", "5")
        assert out1 == out2
        parsed = json.loads(out1)
        assert json.dumps(parsed, indent=2, sort_keys=True) + "\n" == out1
        assert parsed["seed"] == 12345

    def test_text_format(self, capsys, files):
        code, out, _ = run(capsys, "--format", "text", "majorize", "--x",
                           files["a.json"], "--y", files["b.json"])
        assert code == 0
        assert "holds: True" in out
