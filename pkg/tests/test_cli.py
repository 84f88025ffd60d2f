"""The verification CLI: grids, statuses, JSON shape, determinism, exit codes."""

import json

from cliffqp.cli import main, run
from cliffqp.rings import ring_by_name


def run_json(capsys, args):
    code = main(args + ["--json"])
    document = json.loads(capsys.readouterr().out)
    return code, document


def test_single_cell_pass(capsys):
    code, doc = run_json(capsys, ["relations", "--n", "2", "--ring", "gf3", "--trials", "5"])
    assert code == 0
    assert doc["passed"] == 1 and doc["failed"] == 0 and doc["skipped"] == 0
    report = doc["reports"][0]
    assert set(report) == {"check", "n", "ring", "status", "details", "elapsed_ms", "seed"}
    assert report["status"] == "pass"
    assert report["ring"] == "gf3" and report["n"] == 2 and report["seed"] == 0


def test_skip_gives_exit_zero(capsys):
    code, doc = run_json(capsys, ["canonical-semitrace", "--n", "2", "--ring", "gf3"])
    assert code == 0
    assert doc["skipped"] == 1
    assert "symplectic" in doc["reports"][0]["details"][0]


def test_degree4_skips_on_wrong_ring(capsys):
    code, doc = run_json(capsys, ["degree4-counterexample", "--ring", "gf3"])
    assert code == 0
    assert doc["reports"][0]["status"] == "skipped"
    code, doc = run_json(capsys, ["degree4-counterexample", "--ring", "gf2"])
    assert code == 0
    assert doc["reports"][0]["status"] == "skipped"  # gf2 lacks t with t^2 != t


def test_unknown_check_is_usage_error(capsys):
    assert main(["not-a-check"]) == 2
    capsys.readouterr()


def test_unknown_ring_is_usage_error(capsys):
    assert main(["relations", "--ring", "gf9"]) == 2
    capsys.readouterr()


def test_reports_sorted_and_deterministic(capsys):
    args = ["rho-xi", "--n", "2", "--trials", "5", "--seed", "7"]
    code1, doc1 = run_json(capsys, args)
    code2, doc2 = run_json(capsys, args)
    assert code1 == code2 == 0
    for doc in (doc1, doc2):
        for report in doc["reports"]:
            report["elapsed_ms"] = 0
    assert doc1 == doc2
    keys = [(r["check"], r["n"], r["ring"]) for r in doc1["reports"]]
    assert keys == sorted(keys)


def test_seed_recorded_and_changes_sampling(capsys):
    _, doc = run_json(capsys, ["rho-xi", "--n", "2", "--ring", "gf3", "--seed", "9", "--trials", "3"])
    assert doc["reports"][0]["seed"] == 9


def test_run_api_grid_override():
    reports = run("classify", 3, ring_by_name("gf2"), trials=5, seed=0)
    assert len(reports) == 1
    assert reports[0].status == "pass"
    assert "center-nontrivial" in reports[0].details[0]


def test_text_output_contains_summary(capsys):
    code = main(["polar", "--n", "2", "--ring", "gf3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "summary:" in out


def test_polar_negative_control_passes_as_predicted(capsys):
    code, doc = run_json(capsys, ["polar", "--n", "2", "--ring", "gf3"])
    assert code == 0
    assert doc["reports"][0]["status"] == "pass"
    assert "differs" in doc["reports"][0]["details"][0]


def test_degree4_counterexample_details(capsys):
    code, doc = run_json(capsys, ["degree4-counterexample", "--ring", "gf4"])
    assert code == 0
    assert doc["reports"][0]["status"] == "pass"
    assert any("4096 candidates, all moved" in d for d in doc["reports"][0]["details"])
