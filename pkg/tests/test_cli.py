# tests/test_cli.py
import json
from dataclasses import replace

import pytest

from cli.checks import TREND_STAGE_EVALUATIONS
from cli.config import RunConfig, build_config, parse_complex, parse_range, parse_vector
from cli.parser import EXIT_FAILURE, EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, main
from cli.report import CheckRecord, PaperReport, ReportWriter, parse_csv, parse_json, report_csv, to_csv, to_json
from common import settings
from common.errors import UsageError
from metrics.closed_forms import punctured_order_k
from metrics.search import SearchConfig


def _run(tmp_path, *argv, name="out.json"):
    path = tmp_path / name
    code = main(list(argv) + ["--output", str(path)])
    return code, path.read_text(encoding="utf-8") if path.exists() else ""


# --- Config ---

def test_parsers():
    assert parse_complex("0.5-2i") == 0.5 - 2j
    assert parse_vector("0,0,-1") == (0j, 0j, -1 + 0j)
    assert parse_vector([[0.0, 1.0], [2.0, 0.0]]) == (1j, 2 + 0j)
    assert parse_range("0.1,0.9,5") == (0.1, 0.9, 5)
    with pytest.raises(UsageError):
        parse_complex("one")
    with pytest.raises(UsageError):
        parse_range("0.1,0.9")


def test_file_then_flags(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"lemma": "pick", "samples": 5, "seed": 2, "center": "0.1+0.2j"}), encoding="utf-8")
    config = build_config("schwarz", {"samples": 3, "k": None, "config_path": str(path)}, str(path))
    assert config.lemma == "pick"
    assert config.samples == 3
    assert config.center == 0.1 + 0.2j


@pytest.mark.parametrize("values", [
    {"colour": "red"},
    {"format": "xml"},
    {"k": 0},
    {"center": 1.5},
    {"grid": 1000},
])
def test_invalid_config_values(tmp_path, values):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(dict(values, seed=1)), encoding="utf-8")
    with pytest.raises(UsageError):
        build_config("schwarz", {}, str(path))


def test_seed_required_for_randomized_commands():
    with pytest.raises(UsageError):
        build_config("schwarz", {})
    assert build_config("catalog", {}).seed is None
    assert RunConfig(command="estimate", seed=4).validate().search_config().seed == 4


def test_unreadable_config_file(tmp_path):
    with pytest.raises(UsageError):
        build_config("catalog", {}, str(tmp_path / "missing.json"))
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(UsageError):
        build_config("catalog", {}, str(broken))


# --- Reports ---

def test_report_round_trips():
    report = PaperReport()
    report.add(CheckRecord("a", "anchor a", 1.0, 1.0, 0.0, True, {"n": 3}))
    report.add(CheckRecord("b", "anchor b", float("inf"), 0.0, 1e-8, False))
    assert report.verdict == "fail" and report.failed == ["b"]
    restored = PaperReport.from_record(parse_json(to_json(report.to_record())))
    assert restored.records[0] == report.records[0]
    assert restored.records[1].measured == "inf"
    rows = parse_csv(report_csv(report))
    assert [row["check_id"] for row in rows] == ["a", "b"]
    assert rows[1]["passed"] == "False"


def test_csv_columns():
    text = to_csv([{"x": 0.5, "y": [1, 2], "z": "skip"}], ["x", "y"])
    assert text.splitlines() == ["x,y", '0.5,"[1, 2]"']


def test_report_writer(tmp_path, capsys):
    with ReportWriter(None) as writer:
        writer.write("hello")
    assert capsys.readouterr().out == "hello\n"
    with pytest.raises(UsageError):
        ReportWriter(str(tmp_path / "missing" / "out.json")).open()


# --- Commands ---

def test_catalog_list(tmp_path):
    code, text = _run(tmp_path, "catalog", "list")
    assert code == EXIT_OK
    record = json.loads(text)
    assert "yu-simple" in record["catalog"]
    assert "yu_domain" in record["domains"]


def test_catalog_show(tmp_path):
    code, text = _run(tmp_path, "catalog", "show", "yu-simple", "--grid", "512")
    assert code == EXIT_OK
    record = json.loads(text)
    assert record["value"] == pytest.approx(0.7937, abs=5e-5)
    assert record["containment"]["verdict"] == "contained"
    assert record["jet"]["valid"]
    assert record["target"]["k"] == 3


def test_catalog_show_unknown_name(tmp_path):
    code, _ = _run(tmp_path, "catalog", "show", "no-such-disc")
    assert code == EXIT_USAGE


def test_schwarz_command(tmp_path):
    code, text = _run(tmp_path, "schwarz", "--lemma", "basic", "--k", "2", "--samples", "10", "--seed", "1")
    assert code == EXIT_OK
    record = json.loads(text)
    assert record["summary"]["passed"]
    assert len(record["samples"]) == 10


def test_schwarz_is_byte_reproducible(tmp_path):
    argv = ["schwarz", "--lemma", "punctured", "--k", "2", "--samples", "6", "--seed", "3"]
    _, first = _run(tmp_path, *argv, name="a.json")
    _, second = _run(tmp_path, *argv, name="b.json")
    assert first and first == second


def test_schwarz_without_seed_is_a_usage_error(tmp_path):
    code, _ = _run(tmp_path, "schwarz", "--lemma", "basic")
    assert code == EXIT_USAGE


def test_config_file_on_command_line(tmp_path):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"lemma": "pick", "samples": 8, "seed": 4, "center": "0.2j"}), encoding="utf-8")
    code, text = _run(tmp_path, "schwarz", "--config", str(config), "--samples", "4")
    assert code == EXIT_OK
    summary = json.loads(text)["summary"]
    assert summary["lemma"] == "pick"
    assert summary["samples"] == 4
    assert summary["center"] == [0.0, 0.2]


def test_estimate_command(tmp_path):
    code, text = _run(tmp_path, "estimate", "--domain", "unit_disc", "--p", "0", "--v", "1", "--k", "1",
                      "--seed", "0", "--degree", "2", "--restarts", "1", "--stages", "1", "--grid", "256")
    assert code == EXIT_OK
    record = json.loads(text)
    assert record["kind"] == "upper"
    assert record["value"] == pytest.approx(1.0, abs=1e-3)
    assert record["seed"] == 0


def test_estimate_outside_domain_is_numerical(tmp_path):
    code, _ = _run(tmp_path, "estimate", "--domain", "unit_disc", "--p", "1.5", "--v", "1", "--seed", "0",
                   "--grid", "256")
    assert code == EXIT_NUMERICAL


def test_feasibility_sweep_csv(tmp_path):
    code, text = _run(tmp_path, "sweep", "--kind", "feasibility", "--t-range", "0.3,0.6,2",
                      "--ratio-range", "0.1,0.5,2", "--grid", "256", "--format", "csv", name="sweep.csv")
    assert code == EXIT_OK
    rows = parse_csv(text)
    assert len(rows) == 4
    assert all(row["feasible"] == "True" and row["certified"] == "True" for row in rows)


def test_empty_range_is_a_usage_error(tmp_path):
    code, _ = _run(tmp_path, "sweep", "--kind", "feasibility", "--t-range", "0.6,0.3,2")
    assert code == EXIT_USAGE


def test_stationarity_command(tmp_path):
    code, text = _run(tmp_path, "stationarity", "--map", "ellipsoid-k1:centered,m=0.5", "--k", "2",
                      "--grid", "1024")
    assert code == EXIT_OK
    record = json.loads(text)
    assert record["verdict"] == "stationary"
    assert record["map"] == "ellipsoid-k1:centered,m=0.5"
    assert len(record["weights"]) == 1024


def test_verify_single_check(tmp_path):
    code, text = _run(tmp_path, "verify-paper", "--check", "yu_optimal_bound", "--grid", "512")
    assert code == EXIT_OK
    record = json.loads(text)
    assert record["verdict"] == "pass"
    assert [r["check_id"] for r in record["records"]] == ["yu_optimal_bound"]


def test_injected_fault_fails_the_report(tmp_path):
    code, text = _run(tmp_path, "verify-paper", "--check", "yu_optimal_bound", "--inject", "yu_optimal_bound",
                      "--grid", "512")
    assert code == EXIT_FAILURE
    record = json.loads(text)
    assert record["verdict"] == "fail"
    assert not record["records"][0]["passed"]


def test_unknown_check_is_a_usage_error(tmp_path):
    code, _ = _run(tmp_path, "verify-paper", "--check", "no_such_check")
    assert code == EXIT_USAGE
    code, _ = _run(tmp_path, "verify-paper", "--check", "determinism", "--inject", "determinism")
    assert code == EXIT_USAGE


def test_argparse_errors_map_to_usage():
    assert main(["frobnicate"]) == EXIT_USAGE
    assert main(["schwarz", "--lemma", "cauchy"]) == EXIT_USAGE


@pytest.mark.slow
def test_full_verification_suite(tmp_path):
    code, text = _run(tmp_path, "verify-paper", "--seed", "0")
    assert code == EXIT_OK
    assert json.loads(text)["verdict"] == "pass"


def test_estimate_on_punctured_disc_matches_closed_form(tmp_path):
    code, text = _run(tmp_path, "estimate", "--domain", "punctured_disc", "--p", "0.3", "--v", "1", "--k", "3",
                      "--seed", "0", "--degree", "2", "--restarts", "1", "--stages", "1", "--grid", "1024")
    assert code == EXIT_OK
    record = json.loads(text)
    expected = punctured_order_k(0.3, 1.0)
    assert record["value"] == pytest.approx(expected, rel=0.02)
    assert record["value"] >= expected
    assert record["residuals"]["source"].startswith("closed-form:covering")


def test_catalog_show_covering_disc(tmp_path):
    code, text = _run(tmp_path, "catalog", "show", "covering:0.3", "--grid", "1024")
    assert code == EXIT_OK
    record = json.loads(text)
    assert record["containment"]["verdict"] == "contained"
    assert record["jet"]["valid"]
    assert record["value"] == pytest.approx(punctured_order_k(0.3, 1.0), rel=0.02)


@pytest.mark.parametrize("check_id", ["calibration_disc", "calibration_punctured"])
def test_calibration_checks_with_small_budget(tmp_path, check_id):
    config = tmp_path / "small.json"
    config.write_text(json.dumps({"degree": 2, "restarts": 1, "stages": 1, "seed": 0}), encoding="utf-8")
    code, text = _run(tmp_path, "verify-paper", "--check", check_id, "--config", str(config), "--grid", "1024")
    assert code == EXIT_OK
    record = json.loads(text)["records"][0]
    assert record["passed"]
    assert record["tolerance"] == 0.02
    assert all(row["source"].startswith("closed-form:") for row in record["details"]["targets"])


def test_even_order_trend_keeps_its_budget():
    config = RunConfig(seed=0, restarts=1, stages=1, grid=1024).validate()
    search = replace(config.search_config(), stage_evaluations=TREND_STAGE_EVALUATIONS)
    assert search.stage_evaluations > SearchConfig().stage_evaluations
    assert search.restarts == 1 and search.grid.size == 1024


# --- Environment ---

@pytest.mark.parametrize("text", ["abc", "0", "-2", "1.5"])
def test_bad_thread_count_is_a_usage_error(monkeypatch, tmp_path, text):
    monkeypatch.setenv("KOBLAB_THREADS", text)
    with pytest.raises(UsageError):
        settings.thread_count()
    code, _ = _run(tmp_path, "catalog", "list")
    assert code == EXIT_USAGE


def test_thread_count_from_environment(monkeypatch):
    monkeypatch.setenv("KOBLAB_THREADS", " 4 ")
    assert settings.thread_count() == 4
    assert settings.worker_count(2) == 2
    monkeypatch.delenv("KOBLAB_THREADS")
    assert settings.thread_count() == 1
