"""Radial Helgason-Fourier analysis on n-dimensional hyperbolic space.

For a radial function ``f`` of the geodesic distance the transform is

``f^(lam) = (2 pi)^(n/2) int_0^inf f(rho) (sinh rho)^(n/2) P^{(2-n)/2}_{i lam - 1/2}(cosh rho) d rho``

(P the associated Legendre function), which is the same as integrating
``f`` against the spherical function with the Riemannian volume weight.
It is evaluated by adaptive Gauss-Kronrod quadrature on a truncated
interval whose length is set by the decay rate the caller declares.  The
closed forms and series that the transform is compared against live in the
same module but share no code path with the quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import DomainError, NonConvergenceError
from .green_kernels import KernelParams, kernel_H, kernel_K
from .quadrature import integrate
from .special_functions import (
    digamma,
    hyp2f1,
    hyp2f1_with_condition,
    log_abs_gamma_sq,
    log_gamma,
    log_gamma_ratio,
)

__all__ = [
    "QuadratureSpec",
    "RadialFunction",
    "TransformResult",
    "SeriesResult",
    "c_function_inv_sq",
    "c_function_inv_sq_over_lambda_sq",
    "plancherel_density",
    "SphericalFunction",
    "spherical_fn",
    "spherical_fn_complex",
    "radial_hf_transform",
    "kernel_K_radial",
    "kernel_H_radial",
    "legendre_integral",
    "legendre_integral_closed",
    "hf_K_closed",
    "hf_H_series",
    "hf_H_transform",
    "hf_H_upper_bound",
    "kernel_series",
]

_LOG_2PI = math.log(2.0 * math.pi)


def _lg(x: float) -> float:
    return float(log_gamma(x).real)


@dataclass(frozen=True)
class QuadratureSpec:
    """Truncation radius and quadrature budget for integrals over (0, infinity).

    ``rho_max`` is a floor: :func:`radial_hf_transform` extends it when the
    declared decay rate says the tail beyond it still exceeds ``abs_tol``.
    """

    rho_max: float = 40.0
    max_nodes: int = 200_000
    abs_tol: float = 1e-13
    rel_tol: float = 1e-10

    def __post_init__(self):
        if not (self.rho_max > 0 and self.max_nodes > 0 and self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("QuadratureSpec needs positive rho_max, max_nodes and tolerances")

    @classmethod
    def for_kernel(cls, nu: float, n: int, **kwargs) -> "QuadratureSpec":
        """Default cutoff max(40, (20 + n) max(1, 1/nu)) for kernels decaying like exp(-(n-1+2nu) rho/2)."""
        rho_max = max(40.0, (20.0 + n) * max(1.0, 1.0 / nu))
        return cls(rho_max=rho_max, **kwargs)


@dataclass(frozen=True)
class RadialFunction:
    """A radial function of rho together with a rate mu such that |f| <~ exp(-mu rho)."""

    evaluator: Callable[[np.ndarray], np.ndarray]
    decay_exponent: float


@dataclass(frozen=True)
class TransformResult:
    value: float
    error: float
    rho_max: float
    nodes: int


@dataclass(frozen=True)
class SeriesResult:
    """A summed series: ``value`` includes the tail estimate, ``error`` bounds what is left."""

    value: float
    error: float
    terms: int
    tail: float


# --------------------------------------------------------------------------
# c-function and spherical functions
# --------------------------------------------------------------------------


def _log_sinhc(x: np.ndarray) -> np.ndarray:
    """log(sinh(x)/x) for x >= 0, accurate at both ends."""
    x = np.asarray(x, dtype=float)
    small = x < 1.0
    out = np.empty_like(x)
    xs = x[small]
    out[small] = np.log(np.where(xs == 0, 1.0, np.sinh(xs) / np.where(xs == 0, 1.0, xs)))
    xl = x[~small]
    out[~small] = xl + np.log1p(-np.exp(-2.0 * xl)) - math.log(2.0) - np.log(xl)
    return out


def c_function_inv_sq_over_lambda_sq(lam, n: int):
    """|c(lam)|^-2 / lam^2, finite at lam = 0 where it equals Gamma((n-1)/2)^2 / (2 (2 pi)^n)."""
    lam_arr = np.abs(np.atleast_1d(np.asarray(lam, dtype=float)))
    # 1/|Gamma(i lam)|^2 = lam sinh(pi lam) / pi = lam^2 * sinh(pi lam)/(pi lam)
    log_val = (
        np.atleast_1d(log_abs_gamma_sq((n - 1) / 2.0, lam_arr))
        + _log_sinhc(math.pi * lam_arr)
        - math.log(2.0)
        - n * _LOG_2PI
    )
    out = np.exp(log_val)
    return out[0] if np.ndim(lam) == 0 else out


def c_function_inv_sq(lam, n: int):
    """Plancherel density |c(lam)|^-2 = |Gamma(i lam + (n-1)/2)|^2 / (2 (2 pi)^n |Gamma(i lam)|^2).

    At lam = 0 the density vanishes to second order; the value 0 is returned
    and :func:`c_function_inv_sq_over_lambda_sq` gives the regularised limit.
    """
    lam_arr = np.asarray(lam, dtype=float)
    return c_function_inv_sq_over_lambda_sq(lam_arr, n) * lam_arr * lam_arr


plancherel_density = c_function_inv_sq


# Above this cancellation factor a series value of phi is replaced by the ODE continuation.
_SERIES_CONDITION_LIMIT = 1e3
_ODE_RTOL = 1e-12


class SphericalFunction:
    """The spherical function phi_lam of n-dimensional hyperbolic space as a reusable evaluator.

    ``phi(rho) = F(a, conj(a); n/2; -sinh(rho)^2)`` with ``a = ((n-1)/2 + i lam)/2``.
    The hypergeometric value is used wherever its series is well conditioned.
    For large ``lam`` there is a band of moderate ``rho`` where every
    expansion cancels badly; there ``u = sinh(rho)^p phi`` (``p = (n-1)/2``)
    is integrated from a small radius through
    ``u'' + (lam^2 + p(1-p)/sinh(rho)^2) u = 0``, whose solutions oscillate
    with constant amplitude, so relative step control stays meaningful.
    """

    def __init__(self, lam: float, n: int):
        if n < 2:
            raise DomainError("spherical functions need n >= 2")
        self.lam = abs(float(lam))
        self.n = int(n)
        self._p = (n - 1) / 2.0
        self._a = complex(self._p / 2.0, self.lam / 2.0)
        self._c = n / 2.0
        self._segments: list = []

    def _series(self, rho: np.ndarray):
        s = np.sinh(rho)
        return hyp2f1_with_condition(self._a, self._a.conjugate(), self._c, -s * s, one_minus_z=np.cosh(rho) ** 2)

    def _seed_radius(self) -> float:
        # -sinh^2 stays small enough for the direct series to lose only a few bits
        return math.asinh(min(0.5, 1.0 / max(self.lam, 1e-300)))

    def _start_state(self, rho: float) -> tuple[float, float]:
        s, ch = math.sinh(rho), math.cosh(rho)
        a, c = self._a, self._c
        phi = float(hyp2f1(a, a.conjugate(), c, -s * s).real)
        dphi = -(abs(a) ** 2 / c) * math.sinh(2.0 * rho) * float(hyp2f1(a + 1, a.conjugate() + 1, c + 1, -s * s).real)
        p = self._p
        u = s**p * phi
        du = p * s ** (p - 1) * ch * phi + s**p * dphi
        return u, du

    def _extend(self, upper: float) -> None:
        """Integrate the u-equation up to ``upper``, continuing from the last segment."""
        from scipy.integrate import solve_ivp

        lam2, p = self.lam**2, self._p
        omega = max(self.lam, 1.0)
        if self._segments:
            lo, hi, sol, _ = self._segments[-1]
            start = hi
            y0 = sol(hi)
            scale = self._segments[-1][3]
        else:
            start = self._seed_radius()
            u, du = self._start_state(start)
            y0 = np.array([u, du / omega])
            scale = max(float(np.hypot(*y0)), 1e-300)
        if upper <= start:
            return

        def rhs(r, y):
            q = lam2 + p * (1.0 - p) / math.sinh(r) ** 2
            return [omega * y[1], -q * y[0] / omega]

        span = upper - start
        sol = solve_ivp(
            rhs,
            (start, upper),
            y0,
            method="DOP853",
            rtol=_ODE_RTOL,
            atol=1e-15 * scale,
            dense_output=True,
            max_step=max(span / 8.0, 1e-3),
        )
        if not sol.success:
            raise NonConvergenceError(f"spherical function ODE failed: {sol.message}")
        self._segments.append((start, upper, sol.sol, scale))

    def _from_ode(self, rho: np.ndarray) -> np.ndarray:
        top = float(np.max(rho))
        if not self._segments or self._segments[-1][1] < top:
            # overshoot a little so neighbouring quadrature panels reuse the solution
            self._extend(top * 1.25 + 0.5)
        out = np.empty_like(rho)
        for lo, hi, sol, _ in self._segments:
            first = self._segments[0][0]
            sel = (rho >= (lo if lo > first else -np.inf)) & (rho <= hi)
            if np.any(sel):
                out[sel] = sol(rho[sel])[0]
        return out / np.sinh(rho) ** self._p

    def complex_values(self, rho) -> np.ndarray:
        r = np.asarray(rho, dtype=float)
        if np.any(r <= 0) or np.any(~np.isfinite(r)):
            raise DomainError("spherical_fn needs finite rho > 0")
        flat = np.atleast_1d(r).ravel()
        val, cond = self._series(flat)
        val = np.atleast_1d(val).astype(complex)
        bad = np.atleast_1d(cond) > _SERIES_CONDITION_LIMIT
        if np.any(bad):
            val[bad] = self._from_ode(flat[bad])
        out = val.reshape(np.shape(r))
        return out[()] if out.ndim == 0 else out

    def __call__(self, rho):
        return np.real(self.complex_values(rho))


@lru_cache(maxsize=64)
def _spherical(lam: float, n: int) -> SphericalFunction:
    return SphericalFunction(lam, n)


def spherical_fn_complex(lam: float, n: int, rho):
    """The spherical function before discarding the (round-off sized) imaginary part."""
    return _spherical(abs(float(lam)), int(n)).complex_values(rho)


def spherical_fn(lam: float, n: int, rho):
    """Radial eigenfunction of the Laplace-Beltrami operator with eigenvalue -((n-1)^2/4 + lam^2), equal to 1 at rho = 0."""
    return _spherical(abs(float(lam)), int(n))(rho)


# --------------------------------------------------------------------------
# quadrature transform
# --------------------------------------------------------------------------


def _tail_radius(excess: float, abs_tol: float) -> float:
    """Smallest R with exp(-excess R) / excess <= abs_tol."""
    return max(0.0, math.log(1.0 / (abs_tol * excess)) / excess)


def radial_hf_transform(
    f: RadialFunction,
    lam: float,
    n: int,
    quad: QuadratureSpec | None = None,
) -> TransformResult:
    """Quadrature evaluation of the radial Helgason-Fourier transform of ``f`` at ``lam``.

    The integrand grows like exp((n-1) rho / 2) times ``f``, so ``f`` must
    declare a decay exponent strictly above (n-1)/2.  The integration range is
    the larger of ``quad.rho_max`` and the radius beyond which the tail bound
    drops below ``quad.abs_tol``.
    """
    quad = quad or QuadratureSpec()
    excess = f.decay_exponent - (n - 1) / 2.0
    if not excess > 0:
        raise DomainError("the transform integral converges only for decay_exponent > (n-1)/2")
    rho_max = max(quad.rho_max, _tail_radius(excess, quad.abs_tol))
    phi = SphericalFunction(lam, n)
    # (2 pi)^(n/2) sinh^(n/2) P^{(2-n)/2}_{i lam-1/2} = (2 pi)^(n/2) sinh^(n-1) phi / (2^((n-2)/2) Gamma(n/2))
    scale = math.exp(n / 2.0 * _LOG_2PI - (n - 2) / 2.0 * math.log(2.0) - _lg(n / 2.0))

    def integrand(rho):
        return scale * np.asarray(f.evaluator(rho), dtype=float) * np.power(np.sinh(rho), n - 1.0) * phi(rho)

    cuts = [c for c in (1e-6, 1e-4, 1e-2, 1.0, 10.0) if c < rho_max]
    res = integrate(
        integrand,
        0.0,
        rho_max,
        abs_tol=quad.abs_tol,
        rel_tol=quad.rel_tol,
        max_nodes=quad.max_nodes,
        breakpoints=cuts,
    )
    return TransformResult(res.value, res.error, rho_max, res.nodes)


def kernel_K_radial(params: KernelParams) -> RadialFunction:
    """K_{nu,gamma} packaged with its decay rate (n - 1 + 2 nu)/2."""
    return RadialFunction(lambda r: kernel_K(params, r), (params.n - 1 + 2 * params.nu) / 2.0)


def kernel_H_radial(params: KernelParams) -> RadialFunction:
    """H_{nu,gamma} packaged with its decay rate (n - 1 + 2 nu)/2."""
    return RadialFunction(lambda r: kernel_H(params, r), (params.n - 1 + 2 * params.nu) / 2.0)


def legendre_integral(g: float, lam: float, n: int, quad: QuadratureSpec | None = None) -> TransformResult:
    """int_0^inf (cosh rho/2)^(-g) (sinh rho)^(n/2) P^{(2-n)/2}_{i lam-1/2}(cosh rho) d rho, for g > n - 1."""
    if not g > n - 1:
        raise DomainError("legendre_integral converges only for g > n - 1")
    f = RadialFunction(lambda r: np.power(np.cosh(r / 2.0), -g), g / 2.0)
    res = radial_hf_transform(f, lam, n, quad)
    scale = math.exp(-n / 2.0 * _LOG_2PI)
    return replace(res, value=res.value * scale, error=res.error * scale)


def legendre_integral_closed(g: float, lam: float, n: int) -> float:
    """2^(n/2) |Gamma((g+1-n)/2 + i lam)|^2 / (Gamma(g/2) Gamma((g+2-n)/2))."""
    if not g > n - 1:
        raise DomainError("closed form requires g > n - 1")
    log_val = (
        n / 2.0 * math.log(2.0)
        + float(log_abs_gamma_sq((g + 1 - n) / 2.0, lam))
        - _lg(g / 2.0)
        - _lg((g + 2 - n) / 2.0)
    )
    return math.exp(log_val)


# --------------------------------------------------------------------------
# closed forms and series
# --------------------------------------------------------------------------


def hf_K_closed(nu: float, gamma: float, lam):
    """|Gamma(nu + i lam)|^2 / |Gamma(nu + gamma + i lam)|^2."""
    if not nu > 0:
        raise DomainError("hf_K_closed needs nu > 0")
    return np.exp(log_abs_gamma_sq(nu, lam) - log_abs_gamma_sq(nu + gamma, lam))


def _sum_with_tail(
    log_t0: float,
    log_ratio: Callable[[np.ndarray], np.ndarray],
    log_term: Callable[[np.ndarray], np.ndarray],
    dlog_term: Callable[[float], float],
    decay_power: float,
    max_terms: int,
    rtol: float = 1e-15,
) -> SeriesResult:
    """Sum t_0 + t_1 + ... for positive terms decaying like k^(-decay_power).

    The first ``max_terms`` terms are built from ``t_0`` and the term ratios
    ``t_{k+1}/t_k``.  If they have not dropped below ``rtol`` times the
    partial sum by then, the remainder is estimated by Euler-Maclaurin: the
    integral of t over [N, inf) plus t(N)/2 - t'(N)/12, where ``log_term``
    and ``dlog_term`` extend log t and its derivative to real k >= N.
    """
    if max_terms < 1:
        raise DomainError("max_terms must be positive")
    k = np.arange(max_terms - 1, dtype=float)
    log_t = log_t0 + np.concatenate([[0.0], np.cumsum(log_ratio(k))])
    terms = np.exp(log_t)
    partial = np.cumsum(terms)
    small = np.nonzero(terms < rtol * partial)[0]
    if small.size:
        stop = int(small[0]) + 1
        return SeriesResult(float(partial[stop - 1]), float(terms[stop - 1]), stop, 0.0)
    if decay_power <= 1:
        raise NonConvergenceError("series terms decay too slowly for a tail estimate")
    big_n = float(max_terms)
    t_n = math.exp(float(log_term(np.array([big_n]))[0]))
    deriv = t_n * dlog_term(big_n)
    # x = N e^s turns the algebraic tail into an exponentially decaying one
    s_max = 40.0 / (decay_power - 1.0)
    integral = integrate(
        lambda s: np.exp(log_term(big_n * np.exp(s)) + s) * big_n,
        0.0,
        s_max,
        abs_tol=0.0,
        rel_tol=1e-12,
    )
    tail = integral.value + 0.5 * t_n - deriv / 12.0
    # size of the first omitted correction, the third derivative of t at N over 720
    p = decay_power
    next_corr = t_n * p * (p + 1) * (p + 2) / big_n**3 / 720.0
    total = float(partial[-1]) + tail
    error = next_corr + integral.error + 1e-16 * max_terms * total
    return SeriesResult(total, error, max_terms, tail)


def _abs_sq_ratio(x, nu: float, lam: float, b1: float, b2: float):
    """log of |Gamma(x+nu+i lam)|^2 / (Gamma(x+b1) Gamma(x+b2)) for large x."""
    return (log_gamma_ratio(x, nu + 1j * lam, b1) + log_gamma_ratio(x, nu - 1j * lam, b2)).real


def kernel_series(nu: float, gamma: float, lam: float, max_terms: int = 4000) -> SeriesResult:
    """sum_k |Gamma(nu+k+i lam)|^2 / (Gamma(2nu+gamma+k) k!), which equals Gamma(gamma) hf_K_closed."""
    if not (nu > 0 and gamma > 0):
        raise DomainError("kernel_series needs nu > 0 and gamma > 0")
    c = 2 * nu + gamma
    log_t0 = float(log_abs_gamma_sq(nu, lam)) - _lg(c)

    def log_ratio(k):
        return np.log(((nu + k) ** 2 + lam * lam) / ((c + k) * (k + 1.0)))

    def log_term(x):
        return _abs_sq_ratio(x, nu, lam, c, 1.0)

    def dlog_term(x):
        return float(2 * digamma(nu + x + 1j * lam).real - digamma(c + x).real - digamma(x + 1.0).real)

    return _sum_with_tail(log_t0, log_ratio, log_term, dlog_term, gamma + 1.0, max_terms)


def hf_H_series(nu: float, gamma: float, n: int, lam: float, max_terms: int = 4000) -> SeriesResult:
    """Transform of H_{nu,gamma} as the series

    sum_k |Gamma(nu+k+i lam)|^2 (n/2-gamma)_k / (Gamma((n-1)/2+nu+k) Gamma(1/2+nu+k) k!).

    The terms decay like k^(-gamma-1).  Valid for (n-1)/2 <= gamma <= n/2;
    at gamma = n/2 only the k = 0 term is nonzero.
    """
    if not nu > 0:
        raise DomainError("hf_H_series needs nu > 0")
    if not (n - 1) / 2.0 <= gamma <= n / 2.0:
        raise DomainError("hf_H_series needs (n-1)/2 <= gamma <= n/2")
    a = n / 2.0 - gamma
    b1 = (n - 1) / 2.0 + nu
    b2 = 0.5 + nu
    log_t0 = float(log_abs_gamma_sq(nu, lam)) - _lg(b1) - _lg(b2)
    if a == 0:
        return SeriesResult(math.exp(log_t0), 0.0, 1, 0.0)
    lg_a = _lg(a)

    def log_ratio(k):
        return np.log(((nu + k) ** 2 + lam * lam) * (a + k) / ((b1 + k) * (b2 + k) * (k + 1.0)))

    def log_term(x):
        return _abs_sq_ratio(x, nu, lam, b1, b2) + log_gamma_ratio(x, a, 1.0).real - lg_a

    def dlog_term(x):
        return float(
            2 * digamma(nu + x + 1j * lam).real
            + digamma(a + x).real
            - digamma(b1 + x).real
            - digamma(b2 + x).real
            - digamma(x + 1.0).real
        )

    return _sum_with_tail(log_t0, log_ratio, log_term, dlog_term, gamma + 1.0, max_terms)


def hf_H_transform(nu: float, gamma: float, n: int, lam: float, max_terms: int = 4000) -> SeriesResult:
    """Helgason-Fourier transform of H_{nu,gamma} from its series: (4 pi)^(n/2) * hf_H_series.

    Expanding H in powers of 1/cosh^2(rho/2) and transforming term by term
    with the closed Legendre integral brings (2 pi)^(n/2) 2^(n/2) per term.
    The bare series lacks that factor.
    """
    res = hf_H_series(nu, gamma, n, lam, max_terms)
    scale = (4.0 * math.pi) ** (n / 2.0)
    return SeriesResult(res.value * scale, res.error * scale, res.terms, res.tail * scale)


def hf_H_upper_bound(nu: float, gamma: float, n: int, lam: float) -> float:
    """Gamma(gamma+2nu) Gamma(gamma) / (Gamma(nu+(n-1)/2) Gamma(nu+1/2)) * hf_K_closed(nu, gamma, lam)."""
    log_c = _lg(gamma + 2 * nu) + _lg(gamma) - _lg(nu + (n - 1) / 2.0) - _lg(nu + 0.5)
    return math.exp(log_c) * float(hf_K_closed(nu, gamma, lam))
