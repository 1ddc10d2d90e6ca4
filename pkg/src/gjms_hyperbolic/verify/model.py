"""Configuration and report records for verification runs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from ..errors import ConfigError


@dataclass(frozen=True)
class ToleranceConfig:
    """Relative tolerance for identities and the floor for inequality margins.

    An identity passes when ``|lhs - rhs| <= rel * max(|rhs|, tiny)``; an
    inequality ``lhs >= rhs`` passes when ``lhs - rhs >= -margin_floor * max(|lhs|, |rhs|, 1)``.
    """

    rel: float
    margin_floor: float = 1e-9

    def __post_init__(self):
        if not (self.rel > 0 and self.margin_floor >= 0):
            raise ConfigError("tolerances must be positive")


@dataclass(frozen=True)
class SuiteConfig:
    suite_name: str
    grids: dict[str, list]
    tolerances: ToleranceConfig
    output_path: str | None = None
    csv_path: str | None = None

    def echo(self) -> dict[str, Any]:
        return {
            "suite": self.suite_name,
            "grids": {k: list(v) for k, v in sorted(self.grids.items())},
            "tolerances": {"rel": self.tolerances.rel, "margin_floor": self.tolerances.margin_floor},
        }


@dataclass
class CaseResult:
    """One checked relation.  ``kind`` is ``identity`` or ``inequality``.

    For identities ``residual = lhs - rhs`` and ``relative`` divides it by
    ``|rhs|``; for inequalities ``residual`` is the margin and ``relative`` the
    margin over ``max(|lhs|, |rhs|)``.
    """

    inputs: dict[str, Any]
    kind: str
    lhs: float | None = None
    rhs: float | None = None
    residual: float | None = None
    relative: float | None = None
    passed: bool = False
    error: str | None = None

    def to_dict(self) -> dict[str, Any]:
        out = {
            "inputs": _clean(self.inputs),
            "kind": self.kind,
            "lhs": _num(self.lhs),
            "rhs": _num(self.rhs),
            "residual": _num(self.residual),
            "relative": _num(self.relative),
            "passed": self.passed,
        }
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass
class SuiteSummary:
    total: int
    passed: int
    max_abs_residual: float | None
    max_rel_residual: float | None
    min_margin: float | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "total": self.total,
            "passed": self.passed,
            "failed": self.total - self.passed,
            "max_abs_residual": _num(self.max_abs_residual),
            "max_rel_residual": _num(self.max_rel_residual),
            "min_margin": _num(self.min_margin),
        }


@dataclass
class VerificationReport:
    """Result of one suite.  ``wall_time_seconds`` is kept out of :meth:`body`."""

    suite_name: str
    checks: str
    config: dict[str, Any]
    cases: list[CaseResult]
    summary: SuiteSummary
    wall_time_seconds: float = 0.0
    extras: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.summary.passed == self.summary.total

    def body(self) -> dict[str, Any]:
        return {
            "suite": self.suite_name,
            "checks": self.checks,
            "config": self.config,
            "summary": self.summary.to_dict(),
            "cases": [c.to_dict() for c in self.cases],
        }


def summarise(cases: list[CaseResult]) -> SuiteSummary:
    abs_res = [abs(c.residual) for c in cases if c.kind == "identity" and c.residual is not None]
    rel_res = [abs(c.relative) for c in cases if c.kind == "identity" and c.relative is not None]
    margins = [c.relative for c in cases if c.kind == "inequality" and c.relative is not None]
    return SuiteSummary(
        total=len(cases),
        passed=sum(c.passed for c in cases),
        max_abs_residual=max(abs_res) if abs_res else None,
        max_rel_residual=max(rel_res) if rel_res else None,
        min_margin=min(margins) if margins else None,
    )


def _num(x):
    """JSON-safe float: non-finite values become strings."""
    if x is None:
        return None
    if isinstance(x, bool):
        return x
    x = float(x)
    if math.isfinite(x):
        return x
    return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")


def _clean(value):
    if isinstance(value, dict):
        return {k: _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    if isinstance(value, float):
        return _num(value)
    return value
