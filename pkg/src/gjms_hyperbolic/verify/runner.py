"""Running suites, assembling reports and writing them to disk."""

from __future__ import annotations

import csv
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterable, Sequence

from ..errors import ConfigError
from .model import CaseResult, SuiteConfig, ToleranceConfig, VerificationReport, summarise
from .suites import SUITES, Suite

OUTPUT_DIR_ENV = "GJMS_VERIFY_OUT"
DEFAULT_REPORT_NAME = "verify-report.json"
REPORT_FORMAT = "gjms-verify/1"


def list_suites() -> list[dict[str, str]]:
    """Name and one-line description of every registered suite, in registry order."""
    return [{"name": s.name, "checks": s.checks} for s in SUITES.values()]


def _suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise ConfigError(f"unknown suite {name!r}; use --list to see the registered suites") from None


def make_config(
    suite_name: str,
    *,
    n: Sequence[int] | None = None,
    gamma: Sequence[float] | None = None,
    lam: Sequence[float] | None = None,
    tol_rel: float | None = None,
    tol_margin: float | None = None,
    output_path: str | None = None,
    csv_path: str | None = None,
) -> SuiteConfig:
    """Suite defaults with the given axes replaced.  Axes a suite does not use are ignored."""
    suite = _suite(suite_name)
    grids = {k: list(v) for k, v in suite.defaults.items()}
    for axis, values in (("n", n), ("gamma", gamma), ("lambda", lam)):
        if values is None or not suite.accepts(axis):
            continue
        if len(values) == 0:
            raise ConfigError(f"grid for {axis} is empty")
        grids[axis] = [int(v) for v in values] if axis == "n" else [float(v) for v in values]
    tolerances = ToleranceConfig(
        rel=suite.rel_tol if tol_rel is None else tol_rel,
        margin_floor=1e-9 if tol_margin is None else tol_margin,
    )
    return SuiteConfig(suite_name, grids, tolerances, output_path, csv_path)


def _sort_key(inputs: dict[str, Any]) -> tuple:
    def key(v):
        if isinstance(v, (list, tuple)):
            return (1, tuple(key(x) for x in v))
        if isinstance(v, str):
            return (2, v)
        return (0, float(v))

    return tuple(key(v) for v in inputs.values())


def _evaluate(task: tuple[str, dict[str, Any], ToleranceConfig]) -> list[CaseResult]:
    name, inputs, tol = task
    try:
        return SUITES[name].evaluate(inputs, tol)
    except Exception as exc:  # record-and-continue: a failing case never aborts the suite
        return [CaseResult(inputs, "error", passed=False, error=f"{type(exc).__name__}: {exc}")]


def _cases(config: SuiteConfig) -> list[dict[str, Any]]:
    suite = _suite(config.suite_name)
    cases = suite.build(config.grids)
    if not cases:
        raise ConfigError(f"suite {config.suite_name} produced no cases for the given grids")
    return sorted(cases, key=_sort_key)


def _run_many(configs: Sequence[SuiteConfig], jobs: int) -> list[VerificationReport]:
    """Evaluate every case of every config; one process pool is shared by all suites."""
    if jobs < 1:
        raise ConfigError("--jobs must be at least 1")
    batches = [(cfg, _cases(cfg)) for cfg in configs]
    reports = []
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for cfg, cases in batches:
            start = time.perf_counter()
            tasks = [(cfg.suite_name, c, cfg.tolerances) for c in cases]
            if pool is None:
                results = [_evaluate(t) for t in tasks]
            else:
                chunk = max(1, len(tasks) // (4 * jobs))
                results = list(pool.map(_evaluate, tasks, chunksize=chunk))
            flat = [r for group in results for r in group]
            elapsed = time.perf_counter() - start
            reports.append(
                VerificationReport(
                    suite_name=cfg.suite_name,
                    checks=SUITES[cfg.suite_name].checks,
                    config=cfg.echo(),
                    cases=flat,
                    summary=summarise(flat),
                    wall_time_seconds=elapsed,
                )
            )
    finally:
        if pool is not None:
            pool.shutdown()
    return reports


def run_suite(config: SuiteConfig, jobs: int = 1) -> VerificationReport:
    """Run one suite; write its report (and CSV) when the config names output paths."""
    report = _run_many([config], jobs)[0]
    if config.output_path:
        write_report([report], config.output_path, jobs)
    if config.csv_path:
        write_csv(report, config.csv_path)
    return report


def run_suites(configs: Sequence[SuiteConfig], jobs: int = 1) -> list[VerificationReport]:
    return _run_many(configs, jobs)


# --------------------------------------------------------------------------
# serialisation
# --------------------------------------------------------------------------


def report_body(reports: Iterable[VerificationReport]) -> dict[str, Any]:
    """Everything that depends only on the configuration, never on timing or host."""
    reports = list(reports)
    return {
        "format": REPORT_FORMAT,
        "all_passed": all(r.ok for r in reports),
        "suites": [r.body() for r in reports],
    }


def body_text(reports: Iterable[VerificationReport]) -> str:
    """Canonical serialisation of :func:`report_body`; identical configs give identical text."""
    return json.dumps(report_body(reports), indent=1, sort_keys=True, allow_nan=False)


def report_document(reports: Sequence[VerificationReport], jobs: int) -> dict[str, Any]:
    header = {
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "jobs": jobs,
        "wall_time_seconds": {r.suite_name: round(r.wall_time_seconds, 6) for r in reports},
    }
    return {"header": header, "body": report_body(reports)}


def write_report(reports: Sequence[VerificationReport], path: str | os.PathLike, jobs: int = 1) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        doc = report_document(reports, jobs)
        with path.open("w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True, allow_nan=False)
            fh.write("\n")
    except OSError as exc:
        raise ConfigError(f"cannot write report to {path}: {exc}") from None
    return path


def write_csv(report: VerificationReport, path: str | os.PathLike) -> Path:
    """One row per case: the input columns, then ``lhs, rhs, residual``."""
    path = Path(path)
    input_keys: list[str] = []
    for case in report.cases:
        for key in case.inputs:
            if key not in input_keys:
                input_keys.append(key)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow([*input_keys, "lhs", "rhs", "residual"])
            for case in report.cases:
                row = [_csv_cell(case.inputs.get(k, "")) for k in input_keys]
                row += [_csv_cell(case.lhs), _csv_cell(case.rhs), _csv_cell(case.residual)]
                writer.writerow(row)
    except OSError as exc:
        raise ConfigError(f"cannot write CSV to {path}: {exc}") from None
    return path


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return " ".join(repr(float(v)) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def default_output_path() -> Path:
    """``$GJMS_VERIFY_OUT/verify-report.json`` when the variable is set, else ``./verify-report.json``."""
    base = os.environ.get(OUTPUT_DIR_ENV)
    return Path(base) / DEFAULT_REPORT_NAME if base else Path(DEFAULT_REPORT_NAME)
