"""Sharp Sobolev, Hardy-Littlewood-Sobolev and Adams constants on R^n.

Every constant is assembled from log-gamma differences, so dimensions up to
a few dozen stay comfortably inside double-precision range.
"""

from __future__ import annotations

import math

from .errors import DomainError, RangeError
from .special_functions import log_gamma

__all__ = [
    "sobolev_constant",
    "hls_constant",
    "duality_residual",
    "duality_relative_residual",
    "sphere_area",
    "adams_constant",
    "gjms_bottom_integer_check",
]

_LOG_PI = math.log(math.pi)
_LOG_2 = math.log(2.0)


def _lg(x: float) -> float:
    return float(log_gamma(x).real)


def _exp(log_value: float, what: str) -> float:
    try:
        return math.exp(log_value)
    except OverflowError:
        raise RangeError(f"{what} is about 10^{log_value / math.log(10):.0f}, beyond double range") from None


def _log_sobolev(n: int, gamma: float) -> float:
    return (
        2 * gamma * _LOG_2
        + gamma * _LOG_PI
        + _lg((n + 2 * gamma) / 2)
        - _lg((n - 2 * gamma) / 2)
        + (2 * gamma / n) * (_lg(n / 2) - _lg(n))
    )


def sobolev_constant(n: int, gamma: float) -> float:
    """S_{n,gamma}, the best constant in the order-gamma Sobolev inequality on R^n.

    ``4^g pi^g Gamma((n+2g)/2)/Gamma((n-2g)/2) (Gamma(n/2)/Gamma(n))^(2g/n)``, 0 < g < n/2.
    """
    if n < 1 or not 0 < gamma < n / 2:
        raise DomainError("sobolev_constant needs 0 < gamma < n/2")
    return _exp(_log_sobolev(n, gamma), "sobolev_constant")


def _log_hls(n: int, lam: float) -> float:
    return (
        (lam / 2) * _LOG_PI
        + _lg(n / 2 - lam / 2)
        - _lg(n - lam / 2)
        + (-1 + lam / n) * (_lg(n / 2) - _lg(n))
    )


def hls_constant(n: int, lambda_exp: float) -> float:
    """Best constant of the Hardy-Littlewood-Sobolev inequality with kernel |x-y|^(-lambda_exp)."""
    if n < 1 or not 0 < lambda_exp < n:
        raise DomainError("hls_constant needs 0 < lambda_exp < n")
    return _exp(_log_hls(n, lambda_exp), "hls_constant")


def _check_duality_range(n: int, gamma: float) -> None:
    if not (n - 1) / 2 <= gamma < n / 2:
        raise DomainError("duality check needs (n-1)/2 <= gamma < n/2")


def _log_duality_lhs(n: int, gamma: float) -> float:
    # Gamma(n/2-g)/(2^n pi^(n/2) Gamma(g)) * 2^(n-2g) * C_{n, n-2g}
    return (
        _lg(n / 2 - gamma)
        - n * _LOG_2
        - (n / 2) * _LOG_PI
        - _lg(gamma)
        + (n - 2 * gamma) * _LOG_2
        + _log_hls(n, n - 2 * gamma)
    )


def duality_residual(n: int, gamma: float) -> float:
    """Riesz-kernel constant times C_{n, n-2gamma}, minus 1/S_{n,gamma}; zero in exact arithmetic."""
    _check_duality_range(n, gamma)
    return math.exp(_log_duality_lhs(n, gamma)) - math.exp(-_log_sobolev(n, gamma))


def duality_relative_residual(n: int, gamma: float) -> float:
    """``duality_residual`` in units of 1/S_{n,gamma}."""
    _check_duality_range(n, gamma)
    return math.expm1(_log_duality_lhs(n, gamma) + _log_sobolev(n, gamma))


def sphere_area(n: int) -> float:
    """Surface measure of the unit sphere S^{n-1} in R^n: 2 pi^(n/2)/Gamma(n/2)."""
    return math.exp(_LOG_2 + (n / 2) * _LOG_PI - _lg(n / 2))


def adams_constant(n: int, m: float) -> float:
    """Sharp exponent beta_0(n, m) of the fractional Adams inequality.

    ``(n/|S^{n-1}|) [pi^(n/2) 2^m Gamma(m/2)/Gamma((n-m)/2)]^(n/(n-m))`` for 0 < m < n.
    The exponent n/(n-m) blows up as m -> n; :class:`RangeError` is raised
    once the value leaves double range.
    """
    if n < 1 or not 0 < m < n:
        raise DomainError("adams_constant needs 0 < m < n")
    log_bracket = (n / 2) * _LOG_PI + m * _LOG_2 + _lg(m / 2) - _lg((n - m) / 2)
    log_area = _LOG_2 + (n / 2) * _LOG_PI - _lg(n / 2)
    return _exp(math.log(n) - log_area + (n / (n - m)) * log_bracket, "adams_constant")


def gjms_bottom_integer_check(k: int) -> float:
    """prod_{i=1}^k (2i-1)^2/4 minus Gamma(k+1/2)^2/pi."""
    if int(k) != k or k < 1:
        raise DomainError("gjms_bottom_integer_check needs an integer k >= 1")
    product = 1.0
    for i in range(1, int(k) + 1):
        product *= (2 * i - 1) ** 2 / 4
    return product - math.exp(2 * _lg(k + 0.5) - _LOG_PI)
