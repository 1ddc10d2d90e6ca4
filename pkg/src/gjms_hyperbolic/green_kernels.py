"""Radial Green's kernels on hyperbolic space and fractional Green's functions on the ball and half-space.

Kernels are written as functions of the geodesic distance ``rho``:

``K(rho) = C (cosh rho/2)^(1-n-2nu) F(nu+(n-1)/2, nu+1/2; 2nu+gamma; cosh^-2(rho/2))``

``H(rho) = (cosh rho/2)^(1-2gamma-2nu) (sinh rho/2)^(2gamma-n)``

The Euclidean Green's functions of (-Laplacian)^gamma are evaluated from
their incomplete-beta integral by adaptive quadrature, which keeps them an
independent route from the hypergeometric kernel they are compared with.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError
from .quadrature import integrate
from .special_functions import hyp2f1, log_gamma

__all__ = [
    "KernelParams",
    "kernel_coeff",
    "kernel_K",
    "kernel_H",
    "kernel_K_small_rho_constant",
    "kernel_K_log_constant",
    "kernel_K0_majorant",
    "sinh_half_distance_ball",
    "cosh_half_distance_ball",
    "sinh_half_distance_halfspace",
    "cosh_half_distance_halfspace",
    "cayley_ball_to_halfspace",
    "green_ball",
    "green_halfspace",
    "green_halfspace_image_charge",
    "ball_conformal_residual",
    "halfspace_conformal_residual",
    "default_fd_step",
    "radial_laplace_beltrami",
    "laplacian_identity_terms",
    "laplacian_identity_residual",
]


def _lg(x: float) -> float:
    return float(log_gamma(x).real)


@dataclass(frozen=True)
class KernelParams:
    """Parameters (nu, gamma, n) of the kernel families K and H."""

    nu: float
    gamma: float
    n: int

    def __post_init__(self):
        if self.nu < 0 or self.gamma <= 0 or int(self.n) != self.n or self.n < 2:
            raise DomainError("KernelParams needs nu >= 0, gamma > 0 and an integer n >= 2")


def kernel_coeff(params: KernelParams) -> float:
    """Normalising constant C of K: Gamma((n-1)/2+nu) Gamma(nu+1/2) / (2^n pi^(n/2) Gamma(gamma) Gamma(2nu+gamma))."""
    nu, g, n = params.nu, params.gamma, params.n
    log_c = (
        _lg((n - 1) / 2 + nu)
        + _lg(nu + 0.5)
        - n * math.log(2.0)
        - (n / 2) * math.log(math.pi)
        - _lg(g)
        - _lg(2 * nu + g)
    )
    return math.exp(log_c)


def _check_rho(rho: np.ndarray, allow_zero: bool) -> None:
    bad = rho < 0 if allow_zero else rho <= 0
    if np.any(bad) or np.any(~np.isfinite(rho)):
        raise DomainError("kernel evaluation needs rho > 0")


def kernel_K(params: KernelParams, rho):
    """Green's kernel K_{nu,gamma} at geodesic distance ``rho`` (vectorised).

    ``rho = 0`` is accepted only when gamma > n/2, where the kernel is finite.
    """
    r = np.asarray(rho, dtype=float)
    scalar = r.ndim == 0
    r = np.atleast_1d(r)
    nu, g, n = params.nu, params.gamma, params.n
    _check_rho(r, allow_zero=g > n / 2)
    ch = np.cosh(r / 2)
    z = 1.0 / (ch * ch)
    one_minus_z = np.tanh(r / 2) ** 2
    f = hyp2f1(nu + (n - 1) / 2, nu + 0.5, 2 * nu + g, z, one_minus_z=one_minus_z).real
    out = kernel_coeff(params) * np.power(ch, 1.0 - n - 2 * nu) * f
    return out[0] if scalar else out


def kernel_H(params: KernelParams, rho):
    """Comparison kernel (cosh rho/2)^(1-2gamma-2nu) (sinh rho/2)^(2gamma-n)."""
    r = np.asarray(rho, dtype=float)
    _check_rho(np.atleast_1d(r), allow_zero=False)
    nu, g, n = params.nu, params.gamma, params.n
    return np.power(np.cosh(r / 2), 1.0 - 2 * g - 2 * nu) * np.power(np.sinh(r / 2), 2 * g - n)


def kernel_K_small_rho_constant(params: KernelParams) -> float:
    """lim K(rho) / rho^(2gamma-n) as rho -> 0, valid for gamma < n/2.

    From F(a,b;c;z) ~ Gamma(c)Gamma(a+b-c)/(Gamma(a)Gamma(b)) (1-z)^(c-a-b) and
    1 - z = tanh^2(rho/2) ~ rho^2/4, which contributes the factor 2^(n-2gamma).
    """
    nu, g, n = params.nu, params.gamma, params.n
    if not g < n / 2:
        raise DomainError("power-law singularity only for gamma < n/2")
    log_ratio = _lg(2 * nu + g) + _lg(n / 2 - g) - _lg(nu + (n - 1) / 2) - _lg(nu + 0.5)
    return kernel_coeff(params) * 2.0 ** (n - 2 * g) * math.exp(log_ratio)


def kernel_K_log_constant(params: KernelParams) -> float:
    """lim K(rho) / (-ln rho) as rho -> 0 when gamma = n/2.

    Here c = a + b and F(a,b;a+b;z) ~ -Gamma(a+b)/(Gamma(a)Gamma(b)) ln(1-z), with
    ln(1-z) ~ 2 ln rho.
    """
    nu, g, n = params.nu, params.gamma, params.n
    if g != n / 2:
        raise DomainError("logarithmic singularity only for gamma = n/2")
    log_ratio = _lg(2 * nu + n / 2) - _lg(nu + (n - 1) / 2) - _lg(nu + 0.5)
    return 2.0 * kernel_coeff(params) * math.exp(log_ratio)


def kernel_K0_majorant(gamma: float, n: int, rho):
    """Gamma(n/2-gamma)/(2^n pi^(n/2) Gamma(gamma)) * H_{0,gamma}(rho), an upper bound for K_{0,gamma}."""
    coef = math.exp(_lg(n / 2 - gamma) - n * math.log(2.0) - (n / 2) * math.log(math.pi) - _lg(gamma))
    return coef * kernel_H(KernelParams(0.0, gamma, n), rho)


# --------------------------------------------------------------------------
# distances
# --------------------------------------------------------------------------


def _points(x, y, name: str):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape[-1:] != y.shape[-1:]:
        raise DomainError(f"{name}: points must share their dimension")
    return x, y


def sinh_half_distance_ball(x, y):
    """sinh(rho/2) for points of the unit ball: |x-y| / sqrt((1-|x|^2)(1-|y|^2))."""
    x, y = _points(x, y, "ball distance")
    ax = 1.0 - np.sum(x * x, axis=-1)
    ay = 1.0 - np.sum(y * y, axis=-1)
    if np.any(ax <= 0) or np.any(ay <= 0):
        raise DomainError("ball points need |x| < 1")
    return np.sqrt(np.sum((x - y) ** 2, axis=-1) / (ax * ay))


def cosh_half_distance_ball(x, y):
    """cosh(rho/2) = sqrt(1 - 2x.y + |x|^2|y|^2) / sqrt((1-|x|^2)(1-|y|^2))."""
    s = sinh_half_distance_ball(x, y)
    return np.sqrt(1.0 + s * s)


def sinh_half_distance_halfspace(x, y):
    """sinh(rho/2) = |x-y| / (2 sqrt(x_1 y_1)) in the upper half-space {x_1 > 0}."""
    x, y = _points(x, y, "half-space distance")
    if np.any(x[..., 0] <= 0) or np.any(y[..., 0] <= 0):
        raise DomainError("half-space points need x_1 > 0")
    return np.sqrt(np.sum((x - y) ** 2, axis=-1)) / (2.0 * np.sqrt(x[..., 0] * y[..., 0]))


def cosh_half_distance_halfspace(x, y):
    """cosh(rho/2) = sqrt(|x-y|^2 + 4 x_1 y_1) / (2 sqrt(x_1 y_1))."""
    s = sinh_half_distance_halfspace(x, y)
    return np.sqrt(1.0 + s * s)


def cayley_ball_to_halfspace(x):
    """Isometry from the unit ball onto {x_1 > 0}: x -> (1-|x|^2, 2x') / |x + e_1|^2 (x' = x_2..x_n)."""
    x = np.asarray(x, dtype=float)
    shifted = x.copy()
    shifted[..., 0] += 1.0
    denom = np.sum(shifted * shifted, axis=-1)
    out = np.empty_like(x)
    out[..., 0] = (1.0 - np.sum(x * x, axis=-1)) / denom
    out[..., 1:] = 2.0 * x[..., 1:] / denom[..., None]
    return out


def _rho_from_sinh_half(s):
    return 2.0 * np.arcsinh(s)


# --------------------------------------------------------------------------
# Euclidean Green's functions of (-Laplacian)^gamma
# --------------------------------------------------------------------------


def _incomplete_beta_integral(gamma: float, n: int, upper: float) -> float:
    """int_0^upper t^(gamma-1) (1+t)^(-n/2) dt by adaptive quadrature."""
    tol = dict(abs_tol=0.0, rel_tol=1e-13, max_nodes=100_000)
    head_end = min(upper, 1.0)
    # t = u^(1/gamma) removes the algebraic endpoint behaviour at 0
    head = integrate(
        lambda u: np.power(1.0 + np.power(u, 1.0 / gamma), -n / 2.0),
        0.0,
        head_end**gamma,
        **tol,
    ).value / gamma
    if upper <= 1.0:
        return head
    # t = e^s on [1, upper]
    tail = integrate(
        lambda s: np.exp(gamma * s) * np.power(1.0 + np.exp(s), -n / 2.0),
        0.0,
        math.log(upper),
        **tol,
    ).value
    return head + tail


def _green_coefficient(gamma: float, n: int) -> float:
    return math.exp(_lg(n / 2) - (n / 2) * math.log(math.pi) - gamma * math.log(4.0) - 2 * _lg(gamma))


def green_ball(gamma: float, n: int, x, y) -> float:
    """Green's function of (-Laplacian)^gamma on the unit ball with exterior Dirichlet data."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if gamma <= 0:
        raise DomainError("green_ball needs gamma > 0")
    if np.any(np.sum(x * x) >= 1) or np.any(np.sum(y * y) >= 1):
        raise DomainError("green_ball needs points inside the unit ball")
    d2 = float(np.sum((x - y) ** 2))
    if d2 == 0:
        raise DomainError("green_ball is singular at coincident points")
    upper = (1.0 - float(np.sum(x * x))) * (1.0 - float(np.sum(y * y))) / d2
    return _green_coefficient(gamma, n) * d2 ** (gamma - n / 2) * _incomplete_beta_integral(gamma, n, upper)


def green_halfspace(gamma: float, n: int, x, y) -> float:
    """Green's function of (-Laplacian)^gamma on {x_1 > 0} with exterior Dirichlet data."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if gamma <= 0:
        raise DomainError("green_halfspace needs gamma > 0")
    if x[0] <= 0 or y[0] <= 0:
        raise DomainError("green_halfspace needs x_1, y_1 > 0")
    d2 = float(np.sum((x - y) ** 2))
    if d2 == 0:
        raise DomainError("green_halfspace is singular at coincident points")
    upper = 4.0 * x[0] * y[0] / d2
    return _green_coefficient(gamma, n) * d2 ** (gamma - n / 2) * _incomplete_beta_integral(gamma, n, upper)


def green_halfspace_image_charge(x, y) -> float:
    """Dirichlet Green's function of -Laplacian on the 3-dimensional half-space by reflection."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    mirrored = y.copy()
    mirrored[0] = -mirrored[0]
    return (1.0 / np.linalg.norm(x - y) - 1.0 / np.linalg.norm(x - mirrored)) / (4.0 * math.pi)


def ball_conformal_residual(gamma: float, n: int, x, y) -> tuple[float, float]:
    """(green_ball, 2^(n-2gamma) ((1-|x|^2)(1-|y|^2))^(gamma-n/2) K_{1/2,gamma}(rho(x,y)))."""
    lhs = green_ball(gamma, n, x, y)
    rho = float(_rho_from_sinh_half(sinh_half_distance_ball(x, y)))
    weight = ((1.0 - float(np.sum(np.square(x)))) * (1.0 - float(np.sum(np.square(y))))) ** (gamma - n / 2)
    rhs = 2.0 ** (n - 2 * gamma) * weight * float(kernel_K(KernelParams(0.5, gamma, n), rho))
    return lhs, rhs


def halfspace_conformal_residual(gamma: float, n: int, x, y) -> tuple[float, float]:
    """(green_halfspace, (x_1 y_1)^(gamma-n/2) K_{1/2,gamma}(rho(x,y)))."""
    lhs = green_halfspace(gamma, n, x, y)
    rho = float(_rho_from_sinh_half(sinh_half_distance_halfspace(x, y)))
    rhs = (float(x[0]) * float(y[0])) ** (gamma - n / 2) * float(kernel_K(KernelParams(0.5, gamma, n), rho))
    return lhs, rhs


# --------------------------------------------------------------------------
# radial Laplace-Beltrami operator and the identity for H_{0,gamma}
# --------------------------------------------------------------------------


def default_fd_step(rho):
    """max(1e-4, 1e-3 rho)."""
    return np.maximum(1e-4, 1e-3 * np.asarray(rho, dtype=float))


def radial_laplace_beltrami(f: Callable, rho, step=None, n: int = 3):
    """f'' + (n-1) coth(rho) f' by five-point central differences.

    ``f`` must accept numpy arrays.  The stencil reaches ``rho - 2 step``, so
    ``step`` has to stay below ``rho / 4``.
    """
    r = np.asarray(rho, dtype=float)
    h = default_fd_step(r) if step is None else np.asarray(step, dtype=float) * np.ones_like(r)
    if np.any(r <= 0):
        raise DomainError("radial_laplace_beltrami needs rho > 0")
    if np.any(h <= 0) or np.any(h >= r / 4):
        raise DomainError("finite-difference step must satisfy 0 < step < rho/4")
    fm2, fm1, f0, fp1, fp2 = (np.asarray(f(r + k * h), dtype=float) for k in (-2, -1, 0, 1, 2))
    d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)
    d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)
    return d2 + (n - 1) / np.tanh(r) * d1


def laplacian_identity_terms(gamma: float, n: int, rho, step=None):
    """Both sides of the closed form for (-Laplacian - (n-1)^2/4) H_{0,gamma}.

    Returns ``(lhs, first, second)``: ``lhs`` is the finite-difference
    evaluation; ``first`` and ``second`` are the two closed-form terms
    ``(n-2g)(2g-2)/4 (sinh rho/2)^(2g-2-n) (cosh rho/2)^(1-2g)`` and
    ``(2g-1)(2g+1-n)/(4 cosh^2(rho/2)) H_{0,g}``.
    """
    if not (n - 1) / 2 <= gamma < n / 2:
        raise DomainError("identity checked for (n-1)/2 <= gamma < n/2")
    params = KernelParams(0.0, gamma, n)
    r = np.asarray(rho, dtype=float)
    h_val = kernel_H(params, r)
    lap = radial_laplace_beltrami(lambda t: kernel_H(params, t), r, step, n)
    lhs = -lap - (n - 1) ** 2 / 4 * h_val
    sh = np.sinh(r / 2)
    ch = np.cosh(r / 2)
    first = (n - 2 * gamma) * (2 * gamma - 2) / 4 * np.power(sh, 2 * gamma - 2 - n) * np.power(ch, 1 - 2 * gamma)
    second = (2 * gamma - 1) * (2 * gamma + 1 - n) / (4 * ch * ch) * h_val
    return lhs, first, second


def laplacian_identity_residual(gamma: float, n: int, rho, step=None):
    """Finite-difference left side minus the closed-form right side."""
    lhs, first, second = laplacian_identity_terms(gamma, n, rho, step)
    return lhs - first - second
