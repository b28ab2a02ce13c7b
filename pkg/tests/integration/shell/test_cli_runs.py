import csv
import json

import pytest

from src.app import main


def _json(path):
    return json.loads(path.read_text(encoding="utf-8"))


def test_validate_exact_clock(context, output_dir):
    assert main(["validate", "--model", "cyclic", "--D", "16", "--samples", "9"], context) == 0

    report = _json(output_dir / "identity_report.json")
    assert report["passed"] is True
    assert report["config"]["model"]["D"] == 16
    assert {p.name for p in output_dir.iterdir()} == {
        "identity_report.json", "c_table.csv", "c_heat_table.csv", "run_info.json",
    }


def test_validate_approximate_clock_reports_without_failing(context, output_dir):
    assert main(["validate", "--model", "two-component-cos", "--samples", "9"], context) == 0

    report = _json(output_dir / "identity_report.json")
    assert report["passed"] is False
    assert report["report"]["exact_model"] is False


def test_validate_rejects_grid_wider_than_cycle(context):
    args = ["validate", "--model", "cyclic", "--D", "4", "--index-min", "-8", "--index-max", "8"]

    assert main(args, context) == 2


def test_report_on_cyclic_clock(context, output_dir):
    assert main(["report", "--model", "cyclic", "--D", "16"], context) == 0

    report = _json(output_dir / "theorem_report.json")
    assert report["enforced_failures"] == []
    assert report["summary"]["exact_model"] is True
    names = {entry["check_name"] for entry in report["reports"]}
    assert "lemma2_seam_law:click_0" in names
    with open(output_dir / "reading_table.csv", encoding="utf-8") as file:
        rows = list(csv.reader(file))
    assert rows[0] == ["t", "reading", "error"]
    assert len(rows) == 14


def test_report_on_piecewise_clock(context, output_dir):
    assert main(["report", "--model", "piecewise-linear"], context) == 0

    summary = _json(output_dir / "theorem_report.json")["summary"]
    assert summary["sigma_T"] == pytest.approx(2 ** 0.5 / 12, rel=1e-9)


def test_report_on_cosine_clock(context, output_dir):
    assert main(["report", "--model", "two-component-cos"], context) == 0

    summary = _json(output_dir / "theorem_report.json")["summary"]
    assert summary["bound_check"].endswith("pass")
    assert summary["reading_span"] == 7.0
    assert abs(summary["reading_at_zero"]) <= 1e-10
    with open(output_dir / "reading_table.csv", encoding="utf-8") as file:
        rows = list(csv.reader(file))
    assert len(rows) == 14
    assert float(rows[1][0]) == -7.0


def test_report_refuses_narrow_grid(context):
    args = ["report", "--model", "piecewise-linear", "--index-min", "-2", "--index-max", "2"]

    assert main(args, context) == 2


def test_report_json_is_deterministic(context, output_dir):
    args = ["report", "--model", "cyclic", "--D", "16", "--format", "json"]

    assert main(args, context) == 0
    first = (output_dir / "theorem_report.json").read_bytes()
    assert main(args, context) == 0
    second = (output_dir / "theorem_report.json").read_bytes()

    assert first == second
    assert not (output_dir / "reading_table.csv").exists()


def test_sweep_writes_decreasing_errors(context, output_dir):
    assert main(["sweep", "--dimensions", "8", "16", "32"], context) == 0

    sweep = _json(output_dir / "sweep.json")
    assert sweep["commutator_error_decreasing"] is True
    assert [row["dimension"] for row in sweep["rows"]] == [8, 16, 32]
    assert sweep["config"]["model"]["name"] == "cyclic"


def test_sweep_rejects_unsorted_dimensions(context):
    assert main(["sweep", "--dimensions", "16", "8"], context) == 2


def test_export_tc(context, output_dir):
    assert main(["export", "--which", "tc", "--model", "piecewise-linear"], context) == 0

    envelope = _json(output_dir / "operator_TC.json")
    assert envelope["label"] == "T_C"
    assert envelope["grid"]["index_min"] == -8
    with open(output_dir / "operator_TC.csv", encoding="utf-8") as file:
        rows = list(csv.reader(file))
    assert rows[0] == ["row", "col", "re", "im"]
    origin_row = {int(col): (float(re), float(im)) for row, col, re, im in rows[1:] if row == "0"}
    assert set(origin_row) == {-1, 1}
    assert origin_row[1] == pytest.approx((1 / 12, 0.0), abs=1e-12)
    assert origin_row[-1] == pytest.approx((-1 / 12, 0.0), abs=1e-12)


def test_export_pc_lists_the_whole_diagonal(context, output_dir):
    assert main(["export", "--which", "pc", "--model", "piecewise-linear"], context) == 0

    with open(output_dir / "operator_PC.csv", encoding="utf-8") as file:
        rows = list(csv.reader(file))[1:]
    assert [(int(r), int(c), float(re)) for r, c, re, _ in rows] == [(n, n, float(n)) for n in range(-8, 9)]


def test_read_prints_json(context, capsys):
    assert main(["read", "--model", "cyclic", "--D", "16", "--t", "0"], context) == 0

    payload = json.loads(capsys.readouterr().out)
    assert payload["model"] == "cyclic"
    assert payload["t"] == 0.0
    assert abs(payload["error"]) <= 1e-8


def test_explicit_config_file(context, output_dir, tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text("model:\n  name: cyclic\n  D: 8\nseed: 11\n", encoding="utf-8")

    assert main(["validate", "--config", str(config), "--samples", "5"], context) == 0

    assert _json(output_dir / "identity_report.json")["config"]["seed"] == 11


def test_unknown_config_key_is_a_config_error(context, tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text("model:\n  colour: blue\n", encoding="utf-8")

    assert main(["validate", "--config", str(config)], context) == 2


def test_missing_subcommand_exits_through_argparse(context):
    with pytest.raises(SystemExit) as excinfo:
        main([], context)

    assert excinfo.value.code == 2


@pytest.mark.slow
def test_acceptance_cyclic_clock_at_64(context, output_dir):
    assert main(["report", "--model", "cyclic", "--D", "64"], context) == 0

    summary = _json(output_dir / "theorem_report.json")["summary"]
    assert summary["commutator_error"] < 0.02
    assert abs(summary["reading_at_zero"]) <= 1e-8


@pytest.mark.slow
def test_acceptance_default_sweep(context, output_dir):
    assert main(["sweep"], context) == 0

    rows = _json(output_dir / "sweep.json")["rows"]
    assert [row["dimension"] for row in rows] == [32, 64, 128, 256]
    for earlier, later in zip(rows, rows[1:]):
        assert later["commutator_error"] == pytest.approx(earlier["commutator_error"] / 2, rel=0.05)
