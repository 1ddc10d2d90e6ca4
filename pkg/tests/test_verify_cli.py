import csv
import json
import subprocess
import sys

import pytest

from gjms_hyperbolic.errors import ConfigError
from gjms_hyperbolic.verify import cli, runner
from gjms_hyperbolic.verify.grids import parse_grid, parse_int_list
from gjms_hyperbolic.verify.model import ToleranceConfig

REQUIRED = {
    "transform-of-K",
    "transform-of-H",
    "legendre-integral",
    "decomposition-identity",
    "bottom-constants",
    "equivalence-412",
    "lemma46-zeta",
    "lemma52-zeta",
    "prop63-margins",
    "section7-chain",
    "lemma61-differential",
    "conformal-green-ball",
    "conformal-green-halfspace",
    "image-charge",
    "constants-duality",
    "scattering-oracle",
    "gamma-closed-forms",
}


def test_list_suites():
    suites = runner.list_suites()
    names = [s["name"] for s in suites]
    assert REQUIRED <= set(names) and len(names) >= 17
    assert len(set(names)) == len(names)
    assert all(s["checks"] for s in suites)


def test_cli_list(capsys):
    assert cli.main(["--list"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "scattering-oracle" in out and "constants-duality" in out


def test_cli_success_writes_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert cli.main(["--suite", "constants-duality", "--out", str(out)]) == cli.EXIT_OK
    doc = json.loads(out.read_text())
    assert set(doc) == {"header", "body"}
    assert "wall_time_seconds" in doc["header"] and "generated_at" in doc["header"]
    body = doc["body"]
    assert body["all_passed"] is True
    (suite,) = body["suites"]
    s = suite["summary"]
    assert s["passed"] == s["total"] == len(suite["cases"]) and s["failed"] == 0
    assert "PASS  constants-duality" in capsys.readouterr().out


def test_cli_failures_exit_one(tmp_path):
    # an absurd tolerance makes every nonzero residual a failure
    code = cli.main(["--suite", "gamma-closed-forms", "--tol-rel", "1e-300", "--out", str(tmp_path / "r.json")])
    assert code == cli.EXIT_FAILURES
    body = json.loads((tmp_path / "r.json").read_text())["body"]
    assert body["all_passed"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ["--suite", "no-such-suite"],
        ["--suite", "decomposition-identity", "--gamma", "1:2"],
        ["--suite", "decomposition-identity", "--lambda", "1:2:3:cubic"],
        ["--suite", "decomposition-identity", "--lambda", "0:2:3:geometric"],
        ["--suite", "lemma46-zeta", "--n", "three"],
        ["--suite", "image-charge", "--jobs", "0"],
        ["--suite", "image-charge", "--tol-rel", "-1"],
    ],
)
def test_cli_config_errors_exit_two(argv, tmp_path, capsys):
    assert cli.main([*argv, "--out", str(tmp_path / "r.json")]) == cli.EXIT_CONFIG
    assert "configuration error" in capsys.readouterr().err


def test_cli_unwritable_output(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert cli.main(["--suite", "image-charge", "--out", str(blocker / "r.json")]) == cli.EXIT_CONFIG


def test_cli_grid_overrides(tmp_path):
    out = tmp_path / "r.json"
    argv = ["--suite", "decomposition-identity", "--gamma", "0.5,1.5", "--lambda", "1:10:3:geometric", "--out", str(out)]
    assert cli.main(argv) == cli.EXIT_OK
    suite = json.loads(out.read_text())["body"]["suites"][0]
    assert suite["config"]["grids"]["gamma"] == [0.5, 1.5]
    assert len(suite["cases"]) == 6


def test_overrides_ignored_for_suites_without_the_axis():
    cfg = runner.make_config("image-charge", n=[5], gamma=[0.3])
    assert cfg.grids == runner.make_config("image-charge").grids


def test_csv_single_and_directory(tmp_path):
    path = tmp_path / "one.csv"
    assert cli.main(["--suite", "bottom-constants", "--csv", str(path), "--out", str(tmp_path / "r.json")]) == 0
    rows = list(csv.reader(path.open()))
    assert rows[0][-3:] == ["lhs", "rhs", "residual"]
    assert len(rows) == 1 + len(runner._cases(runner.make_config("bottom-constants")))
    # with several suites the CLI treats --csv as a directory; same calls as the CLI makes
    d = tmp_path / "many"
    reports = runner.run_suites([runner.make_config(n) for n in ("image-charge", "constants-duality")])
    for r in reports:
        runner.write_csv(r, d / f"{r.suite_name}.csv")
    assert sorted(p.name for p in d.iterdir()) == ["constants-duality.csv", "image-charge.csv"]


def test_default_output_path_env(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(runner.OUTPUT_DIR_ENV, raising=False)
    assert runner.default_output_path().name == "verify-report.json"
    target = tmp_path / "reports"
    monkeypatch.setenv(runner.OUTPUT_DIR_ENV, str(target))
    assert cli.main(["--suite", "image-charge"]) == 0
    assert (target / "verify-report.json").exists()


def test_record_and_continue():
    tol = ToleranceConfig(rel=1e-12)
    (res,) = runner._evaluate(("constants-duality", {"check": "duality", "n": 3, "gamma": 0.2}, tol))
    assert res.kind == "error" and not res.passed and "Error" in res.error


def test_case_order_is_lexicographic():
    cases = runner._cases(runner.make_config("decomposition-identity", gamma=[2.0, 1.0], lam=[3.0, 0.0]))
    assert [(c["gamma"], c["lambda"]) for c in cases] == [(1.0, 0.0), (1.0, 3.0), (2.0, 0.0), (2.0, 3.0)]


def test_reports_are_deterministic_across_runs_and_jobs():
    configs = [runner.make_config(n) for n in ("image-charge", "constants-duality", "bottom-constants")]
    first = runner.body_text(runner.run_suites(configs, jobs=1))
    again = runner.body_text(runner.run_suites(configs, jobs=1))
    parallel = runner.body_text(runner.run_suites(configs, jobs=3))
    assert first == again == parallel
    assert "wall_time" not in first


def test_run_suite_writes_outputs(tmp_path):
    cfg = runner.make_config("image-charge", output_path=str(tmp_path / "a.json"), csv_path=str(tmp_path / "a.csv"))
    report = runner.run_suite(cfg)
    assert report.ok and (tmp_path / "a.json").exists() and (tmp_path / "a.csv").exists()


def test_grid_parsing():
    assert parse_grid("0,0.5,1") == [0.0, 0.5, 1.0]
    assert parse_grid("0:1:3") == [0.0, 0.5, 1.0]
    g = parse_grid("1:100:3:geometric")
    assert g[0] == 1.0 and abs(g[1] - 10.0) < 1e-12 and abs(g[2] - 100.0) < 1e-12
    assert parse_int_list("3, 5,7") == [3, 5, 7]
    for bad in ("", "1:2", "a,b", "1:2:0"):
        with pytest.raises(ConfigError):
            parse_grid(bad)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gjms_hyperbolic", "--list"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "transform-of-K" in proc.stdout
