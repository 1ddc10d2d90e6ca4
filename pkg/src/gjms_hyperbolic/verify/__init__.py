"""Verification suites, reports and the command-line entry point."""

from .cli import main
from .grids import parse_grid, parse_int_list
from .model import CaseResult, SuiteConfig, SuiteSummary, ToleranceConfig, VerificationReport
from .runner import (
    OUTPUT_DIR_ENV,
    body_text,
    list_suites,
    make_config,
    report_body,
    run_suite,
    run_suites,
    write_csv,
    write_report,
)

__all__ = [
    "CaseResult",
    "OUTPUT_DIR_ENV",
    "SuiteConfig",
    "SuiteSummary",
    "ToleranceConfig",
    "VerificationReport",
    "body_text",
    "list_suites",
    "main",
    "make_config",
    "parse_grid",
    "parse_int_list",
    "report_body",
    "run_suite",
    "run_suites",
    "write_csv",
    "write_report",
]
