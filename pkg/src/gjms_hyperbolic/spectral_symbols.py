"""Spectral multipliers of P_gamma and its Euclidean-conjugated companion.

On hyperbolic space both operators act on Helgason-Fourier modes of
frequency ``lam`` by gamma-ratio multipliers:

* ``symbol_P``:      ``4^g |G((3+2g)/4 + i lam/2)|^2 / |G((3-2g)/4 + i lam/2)|^2``
* ``symbol_Ptilde``: ``|G(g + 1/2 + i lam)|^2 / |G(1/2 + i lam)|^2``

(``G`` = Gamma, ``g`` = gamma).  All evaluation happens in log space so that
the frequencies up to 1e3 used in sweeps neither underflow nor overflow.

The ``margin_*`` helpers return :class:`InequalityMargin` records for the
gamma-ratio inequalities that relate these multipliers to polynomial
majorants and to each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DomainError, NumericalError
from .special_functions import log_abs_gamma_sq, log_abs_gamma_sq_increment

__all__ = [
    "InequalityMargin",
    "MARGIN_FLOOR",
    "symbol_P",
    "symbol_Ptilde",
    "bottom_constant_P",
    "bottom_constant_Ptilde",
    "decomposition_terms",
    "decomposition_residual",
    "decomposition_relative_residual",
    "equivalence_ratio",
    "margin_P_halfdim",
    "margin_Ptilde_halfdim",
    "margin_increment_vs_gamma_ratio",
    "chain_margins",
    "find_max_zeta",
    "default_lambda_grid",
    "SearchError",
]

MARGIN_FLOOR = 1e-9
_LOG2 = math.log(2.0)
_LOGPI = math.log(math.pi)


class SearchError(NumericalError):
    """The zeta search found no admissible value at all."""


@dataclass(frozen=True)
class InequalityMargin:
    """lhs >= rhs, recorded with its raw and relative slack."""

    lhs: float
    rhs: float
    label: str = ""

    @property
    def margin(self) -> float:
        return self.lhs - self.rhs

    @property
    def relative_margin(self) -> float:
        return self.margin / max(abs(self.lhs), abs(self.rhs), np.finfo(float).tiny)

    def holds(self, floor: float = MARGIN_FLOOR) -> bool:
        """True when margin >= -floor * max(|lhs|, |rhs|, 1)."""
        return self.margin >= -floor * max(abs(self.lhs), abs(self.rhs), 1.0)


def default_lambda_grid() -> np.ndarray:
    """lam = 0 followed by 200 geometrically spaced points on [1e-3, 1e3]."""
    return np.concatenate([[0.0], np.geomspace(1e-3, 1e3, 200)])


def _sinpi(x):
    x = np.asarray(x, dtype=float)
    k = np.round(x)
    return np.where(np.mod(k, 2) == 0, 1.0, -1.0) * np.sin(np.pi * (x - k))


def _log_symbol_P(gamma, lam):
    gamma = np.asarray(gamma, dtype=float)
    half = np.asarray(lam, dtype=float) / 2.0
    top = (3.0 + 2.0 * gamma) / 4.0
    bottom = (3.0 - 2.0 * gamma) / 4.0
    return 2.0 * gamma * _LOG2 + log_abs_gamma_sq(top, half) - log_abs_gamma_sq(bottom, half)


def _at_denominator_pole(gamma, lam):
    bottom = (3.0 - 2.0 * np.asarray(gamma, dtype=float)) / 4.0
    return (np.asarray(lam) == 0) & (bottom <= 0) & (bottom == np.round(bottom))


def symbol_P(gamma, lam):
    """Multiplier of P_gamma at frequency ``lam`` (broadcasts over arrays).

    Where ``(3 - 2 gamma)/4`` is a pole of Gamma and ``lam = 0`` the
    reciprocal gamma vanishes, and so does the symbol.
    """
    if np.any(np.asarray(gamma) <= 0):
        raise DomainError("symbol_P needs gamma > 0")
    g, l = np.broadcast_arrays(np.asarray(gamma, dtype=float), np.asarray(lam, dtype=float))
    pole = _at_denominator_pole(g, l)
    if not np.any(pole):
        return np.exp(_log_symbol_P(g, l))
    out = np.zeros(g.shape)
    ok = ~pole
    if np.any(ok):
        out[ok] = np.exp(_log_symbol_P(g[ok], l[ok]))
    return out[()] if out.ndim == 0 else out


def symbol_Ptilde(gamma, lam):
    """Multiplier |Gamma(gamma + 1/2 + i lam)|^2 / |Gamma(1/2 + i lam)|^2."""
    if np.any(np.asarray(gamma) <= 0):
        raise DomainError("symbol_Ptilde needs gamma > 0")
    gamma = np.asarray(gamma, dtype=float)
    return np.exp(log_abs_gamma_sq(gamma + 0.5, lam) - log_abs_gamma_sq(0.5, lam))


def bottom_constant_P(gamma):
    """Infimum over lam of ``symbol_P``, attained at lam = 0."""
    return symbol_P(gamma, 0.0)


def bottom_constant_Ptilde(gamma):
    """Gamma(gamma + 1/2)^2 / pi."""
    if np.any(np.asarray(gamma) <= 0):
        raise DomainError("bottom_constant_Ptilde needs gamma > 0")
    return np.exp(log_abs_gamma_sq(np.asarray(gamma, dtype=float) + 0.5, 0.0) - _LOGPI)


def decomposition_terms(gamma, lam):
    """The three pieces of P = Ptilde + (sin(gamma pi)/pi) |Gamma(gamma+1/2+i lam)|^2."""
    p = symbol_P(gamma, lam)
    pt = symbol_Ptilde(gamma, lam)
    extra = _sinpi(gamma) / np.pi * np.exp(log_abs_gamma_sq(np.asarray(gamma, dtype=float) + 0.5, lam))
    return p, pt, extra


def decomposition_residual(gamma, lam):
    """symbol_P - symbol_Ptilde - (sin(gamma pi)/pi) |Gamma(gamma+1/2+i lam)|^2."""
    p, pt, extra = decomposition_terms(gamma, lam)
    return p - pt - extra


def decomposition_relative_residual(gamma, lam):
    """Residual divided by the largest of the three terms.

    ``symbol_P`` itself passes through zero (gamma = 3/2, 7/2, ... at lam = 0),
    so the largest term is the honest scale for a relative error.
    """
    p, pt, extra = decomposition_terms(gamma, lam)
    scale = np.maximum(np.maximum(np.abs(p), np.abs(pt)), np.abs(extra))
    return (p - pt - extra) / scale


def _symbol_P_increment(gamma, lam):
    """symbol_P(gamma, lam) - symbol_P(gamma, 0), computed without cancellation when possible."""
    g, l = np.broadcast_arrays(np.asarray(gamma, dtype=float), np.asarray(lam, dtype=float))
    base = np.atleast_1d(symbol_P(g, 0.0 * l))
    full = np.atleast_1d(symbol_P(g, l))
    out = full - base
    ok = (base > 0) & (np.atleast_1d(l) != 0)
    if np.any(ok):
        g1 = np.atleast_1d(g)[ok]
        l1 = np.atleast_1d(l)[ok]
        half = l1 / 2.0
        log_ratio = log_abs_gamma_sq_increment((3.0 + 2.0 * g1) / 4.0, half) - log_abs_gamma_sq_increment(
            (3.0 - 2.0 * g1) / 4.0, half
        )
        out[ok] = base[ok] * np.expm1(log_ratio)
    return out[0] if np.ndim(g) == 0 else out


def equivalence_ratio(gamma, lam):
    """(symbol_P(gamma, lam) - symbol_P(gamma, 0)) / (lam^2 (lam^2 + 1)^(gamma - 1))."""
    lam = np.asarray(lam, dtype=float)
    if np.any(lam == 0):
        raise ZeroDivisionError("equivalence_ratio is undefined at lam = 0")
    gamma = np.asarray(gamma, dtype=float)
    l2 = lam * lam
    return _symbol_P_increment(gamma, lam) / (l2 * np.power(l2 + 1.0, gamma - 1.0))


def _check_odd(n: int) -> None:
    if int(n) != n or n < 3 or n % 2 == 0:
        raise DomainError("half-dimension margins need an odd dimension n >= 3")


def _halfdim_rhs(n: int, lam: float, zeta: float) -> float:
    l2 = lam * lam
    return l2 * (l2 + zeta) ** (n / 2.0 - 1.0)


def margin_P_halfdim(n: int, lam: float, zeta: float) -> InequalityMargin:
    """symbol_P(n/2, lam) - symbol_P(n/2, 0) against lam^2 (lam^2 + zeta)^(n/2 - 1)."""
    _check_odd(n)
    lhs = float(_symbol_P_increment(n / 2.0, lam))
    return InequalityMargin(lhs, _halfdim_rhs(n, lam, zeta), f"P_halfdim(n={n})")


def margin_Ptilde_halfdim(n: int, lam: float, zeta: float) -> InequalityMargin:
    """symbol_Ptilde(n/2, lam) - symbol_Ptilde(n/2, 0) against lam^2 (lam^2 + zeta)^(n/2 - 1)."""
    _check_odd(n)
    g = n / 2.0
    base = float(bottom_constant_Ptilde(g))
    log_ratio = float(log_abs_gamma_sq_increment(g + 0.5, lam) - log_abs_gamma_sq_increment(0.5, lam))
    lhs = base * math.expm1(log_ratio)
    return InequalityMargin(lhs, _halfdim_rhs(n, lam, zeta), f"Ptilde_halfdim(n={n})")


def _gamma_over_gamma_i(gamma: float, lam: float) -> float:
    """|Gamma(gamma + i lam)|^2 / |Gamma(i lam)|^2 = (lam sinh(pi lam)/pi) |Gamma(gamma + i lam)|^2."""
    if lam == 0:
        return 0.0
    x = math.pi * abs(lam)
    log_sinh = x + math.log1p(-math.exp(-2.0 * x)) - _LOG2
    return math.exp(math.log(abs(lam)) + log_sinh - _LOGPI + float(log_abs_gamma_sq(gamma, lam)))


def margin_increment_vs_gamma_ratio(gamma: float, lam: float) -> InequalityMargin:
    """Increment of symbol_P against |Gamma(gamma+i lam)|^2/|Gamma(i lam)|^2 for 2k <= gamma <= 2k+1."""
    k = math.floor(gamma / 2.0)
    if k < 1 or gamma > 2 * k + 1:
        raise DomainError("margin_increment_vs_gamma_ratio needs 2k <= gamma <= 2k+1 for an integer k >= 1")
    lhs = float(_symbol_P_increment(gamma, lam))
    return InequalityMargin(lhs, _gamma_over_gamma_i(gamma, lam), "increment_vs_gamma_ratio")


def _rational_weight(gamma: float, l2: float) -> float:
    a1 = (gamma - 1.5) ** 2
    a2 = (gamma - 3.5) ** 2
    return (l2 + a1 + a2) / ((l2 + a1) * (l2 + a2))


def chain_margins(gamma: float, lam: float) -> list[InequalityMargin]:
    """Each link of the inequality chain used for 2 <= gamma <= 3.

    Links, in order: the rational lower bound for the increment of
    ``symbol_P``; the comparison of the rational weight with its gamma = 2
    value; their combination; and, depending on lam^2 <= 5 or >= 5, either the
    gamma-ratio comparison or the algebraic bound that closes the argument.
    """
    if not 2.0 <= gamma <= 3.0:
        raise DomainError("chain_margins needs 2 <= gamma <= 3")
    l2 = lam * lam
    weight = _rational_weight(gamma, l2)
    increment = float(_symbol_P_increment(gamma, lam))
    out = [
        InequalityMargin(increment, l2 * weight * float(symbol_Ptilde(gamma, lam)), "increment_vs_rational_weight"),
        InequalityMargin(weight, (l2 + 1.0) / ((l2 + 0.25) * (l2 + 2.25)), "rational_weight_vs_endpoint"),
    ]
    shifted = math.exp(float(log_abs_gamma_sq(gamma + 0.5, lam) - log_abs_gamma_sq(2.5, lam)))
    out.append(InequalityMargin(increment, l2 * (l2 + 1.0) * shifted, "increment_vs_shifted_ratio"))
    if l2 <= 5.0:
        plain = math.exp(float(log_abs_gamma_sq(gamma, lam) - log_abs_gamma_sq(2.0, lam)))
        out.append(InequalityMargin(shifted, plain, "shifted_ratio_vs_plain_ratio"))
    if l2 >= 5.0:
        lhs = l2 * weight * math.sqrt(1.0 + (gamma - 1.0) ** 2 / l2)
        out.append(InequalityMargin(lhs, 1.0, "large_frequency_closure"))
    return out


def find_max_zeta(
    n: int,
    symbol_kind: str,
    lambda_grid: Iterable[float] | None = None,
    *,
    rel_width: float = 1e-6,
    zeta_cap: float = 1e6,
) -> float:
    """Largest zeta keeping the half-dimension margin nonnegative on a grid.

    Admissible means ``margin >= -1e-12 * |lhs|`` at every grid point, so the
    small-frequency end of the grid constrains zeta as much as the large end.
    The bracket is located by doubling from 1 (or halving, if 1 already fails)
    and refined by geometric bisection to relative width ``rel_width``.
    """
    _check_odd(n)
    kinds = {"P": margin_P_halfdim, "Ptilde": margin_Ptilde_halfdim}
    if symbol_kind not in kinds:
        raise DomainError("symbol_kind must be 'P' or 'Ptilde'")
    margin_fn = kinds[symbol_kind]
    grid = default_lambda_grid() if lambda_grid is None else np.asarray(list(lambda_grid), dtype=float)
    lhs = np.array([margin_fn(n, float(l), 1.0).lhs for l in grid])
    l2 = grid * grid
    slack = 1e-12 * np.abs(lhs)

    def admissible(zeta: float) -> bool:
        rhs = l2 * np.power(l2 + zeta, n / 2.0 - 1.0)
        return bool(np.all(lhs - rhs >= -slack))

    if not admissible(1e-9):
        raise SearchError(f"no admissible zeta for n={n}, kind={symbol_kind}")
    lo, hi = 1e-9, 1.0
    if admissible(hi):
        lo = hi
        hi = 2.0
        while admissible(hi):
            lo = hi
            hi *= 2.0
            if hi > zeta_cap:
                return lo
    while hi / lo - 1.0 > rel_width:
        mid = math.sqrt(lo * hi)
        if admissible(mid):
            lo = mid
        else:
            hi = mid
    return lo
