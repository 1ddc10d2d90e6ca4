"""Command-line front end: ``gjms-verify`` or ``python -m gjms_hyperbolic``.

Exit status: 0 when every case passes, 1 when some case fails, 2 on a
configuration error (unknown suite, malformed grid, unwritable path).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..errors import ConfigError
from .grids import parse_grid, parse_int_list
from .runner import OUTPUT_DIR_ENV, default_output_path, list_suites, make_config, run_suites, write_csv, write_report

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_CONFIG = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gjms-verify",
        description="Run numerical verification suites for the hyperbolic-space symbols, kernels and constants.",
        epilog=f"The report goes to --out, else to ${OUTPUT_DIR_ENV}/verify-report.json, else ./verify-report.json.",
    )
    parser.add_argument("--suite", default="all", help="suite name, or 'all' (default)")
    parser.add_argument("--list", action="store_true", help="list the registered suites and exit")
    parser.add_argument("--n", help="comma-separated dimensions, e.g. 3,5,7")
    parser.add_argument("--gamma", help="gamma grid: list 0.5,1 or range start:stop:count[:linear|geometric]")
    parser.add_argument("--lambda", dest="lam", help="lambda grid, same syntax as --gamma")
    parser.add_argument("--tol-rel", type=float, help="relative tolerance for identities (default: per suite)")
    parser.add_argument("--tol-margin", type=float, help="inequality margin floor (default 1e-9)")
    parser.add_argument("--out", help="path of the JSON report")
    parser.add_argument("--csv", help="CSV output: a file for one suite, a directory for several")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    return parser


def _print_summary(reports, out_path: Path, stream) -> None:
    width = max(len(r.suite_name) for r in reports)
    for r in reports:
        s = r.summary
        status = "PASS" if r.ok else "FAIL"
        extra = []
        if s.max_rel_residual is not None:
            extra.append(f"max rel residual {s.max_rel_residual:.2e}")
        if s.min_margin is not None:
            extra.append(f"min rel margin {s.min_margin:.2e}")
        print(
            f"{status}  {r.suite_name:<{width}}  {s.passed}/{s.total}  {'; '.join(extra)}  ({r.wall_time_seconds:.2f} s)",
            file=stream,
        )
    print(f"report: {out_path}", file=stream)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list:
        for entry in list_suites():
            print(f"{entry['name']:<28} {entry['checks']}")
        return EXIT_OK
    try:
        names = [s["name"] for s in list_suites()] if args.suite == "all" else [args.suite]
        n = parse_int_list(args.n) if args.n else None
        gamma = parse_grid(args.gamma) if args.gamma else None
        lam = parse_grid(args.lam) if args.lam else None
        configs = [
            make_config(name, n=n, gamma=gamma, lam=lam, tol_rel=args.tol_rel, tol_margin=args.tol_margin)
            for name in names
        ]
        out_path = Path(args.out) if args.out else default_output_path()
        reports = run_suites(configs, jobs=args.jobs)
        write_report(reports, out_path, args.jobs)
        if args.csv:
            if len(reports) == 1:
                write_csv(reports[0], args.csv)
            else:
                for r in reports:
                    write_csv(r, Path(args.csv) / f"{r.suite_name}.csv")
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    _print_summary(reports, out_path, sys.stdout)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILURES


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
