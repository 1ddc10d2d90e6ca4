"""Recover the P_gamma multiplier from the scattering ODE, without gamma functions.

After a Helgason-Fourier transform in the boundary variables, the Poisson
equation on the conformally compact extension of hyperbolic space reduces to

    (1 - tau^2) phi'' + (n - 2) tau phi' + [K / (1 - tau^2) - E] phi = 0,

with ``K = n^2/4 - gamma^2`` and ``E = (n-1)^2/4 + lam^2``.  The solution
regular at tau = 0 is integrated numerically out to the boundary tau -> 1,
where ``r`` with ``tau = (4 - r^2)/(4 + r^2)`` is a defining function.  Near
the boundary the solution splits as ``F r^(n/2-gamma)(1+...) + H r^(n/2+gamma)(1+...)``
and the ratio H/F, up to a lam-independent factor, is the multiplier.

The two boundary branches are the Frobenius solutions of the ODE at
tau = 1.  Writing ``s = 1 - tau^2`` they are

    u_-(s) = tau s^((n-2gamma)/4) sum_k c_k s^k,   c_0 = 1,
    u_+(s) = tau s^((n+2gamma)/4) sum_k d_k s^k,   d_0 = 1,

whose coefficients follow a two-term recursion with real coefficients.
Fitting the numerical solution against these exact branches (rather than
against bare powers of r) keeps the O(r^2) corrections of the dominant branch
out of the estimate of H.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .errors import DomainError, FitError, NonConvergenceError, ResonanceError

__all__ = [
    "ScatteringProblem",
    "BoundaryCoefficients",
    "RESONANCE_TOL",
    "FIT_TOL",
    "boundary_branches",
    "solve_scattering_ode",
    "scattering_ratio",
    "scattering_symbol_normalized",
    "ode_residual",
]

RESONANCE_TOL = 1e-6
FIT_TOL = 1e-8
_SERIES_RTOL = 1e-17
_SERIES_MAX_TERMS = 10_000


@dataclass(frozen=True)
class ScatteringProblem:
    """Dimension ``n``, order ``gamma`` in (0, n/2) and frequency ``lam``."""

    n: int
    gamma: float
    lam: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise DomainError("ScatteringProblem needs an integer n >= 2")
        if not 0 < self.gamma < self.n / 2:
            raise DomainError("ScatteringProblem needs 0 < gamma < n/2")
        if abs(self.gamma - round(self.gamma)) < RESONANCE_TOL:
            raise ResonanceError(
                "boundary exponents n/2 - gamma and n/2 + gamma differ by an even integer; "
                "the expansion acquires logarithms"
            )

    @property
    def eigen_shift(self) -> float:
        return (self.n - 1) ** 2 / 4.0 + self.lam**2

    @property
    def mass(self) -> float:
        return self.n**2 / 4.0 - self.gamma**2


@dataclass(frozen=True)
class BoundaryCoefficients:
    """Coefficients of r^(n/2-gamma) (``F``) and r^(n/2+gamma) (``H``) at the boundary."""

    F: float
    H: float
    fit_residual: float
    min_phi: float

    @property
    def ratio(self) -> float:
        return self.H / self.F


def _branch_series(gamma_sign: float, gamma: float, lam: float, s: np.ndarray) -> np.ndarray:
    """sum_k c_k s^k for the branch tau s^((n + gamma_sign*2gamma)/4).

    Substituting ``phi = tau s^e w(s)`` into the ODE leaves a Gauss equation for
    ``w`` with parameters ``alpha +- i lam/2`` and ``1 + gamma_sign*gamma``,
    where ``alpha = (3 + gamma_sign*2gamma)/4``.  Since the two upper
    parameters are conjugate, the recursion is real.
    """
    alpha = (3.0 + gamma_sign * 2.0 * gamma) / 4.0
    c = 1.0 + gamma_sign * gamma
    q = lam * lam / 4.0
    total = np.ones_like(s)
    term = np.ones_like(s)
    quiet = 0
    for k in range(_SERIES_MAX_TERMS):
        term = term * (((alpha + k) ** 2 + q) / ((c + k) * (k + 1.0))) * s
        total = total + term
        if np.all(np.abs(term) <= _SERIES_RTOL * np.abs(total)):
            quiet += 1
            if quiet == 3:
                return total
        else:
            quiet = 0
    raise NonConvergenceError("boundary Frobenius series did not converge")


def boundary_branches(problem: ScatteringProblem, r) -> tuple[np.ndarray, np.ndarray]:
    """The two Frobenius solutions at the boundary, as functions of r in (0, 2).

    Both are normalised so that u_-(r) ~ r^(n/2-gamma) and u_+(r) ~ r^(n/2+gamma)
    as r -> 0.
    """
    r = np.asarray(r, dtype=float)
    n, g, lam = problem.n, problem.gamma, problem.lam
    q = 4.0 + r * r
    tau = (4.0 - r * r) / q
    s = 16.0 * r * r / (q * q)
    # s^(1/2) = 4r/(4+r^2) = r * (4/q); so s^(e) = r^(2e) (4/q)^(2e)
    log_base = np.log(r) + np.log(4.0 / q)
    e_minus = (n - 2 * g) / 4.0
    e_plus = (n + 2 * g) / 4.0
    w_minus = _branch_series(-1.0, g, lam, s)
    w_plus = _branch_series(+1.0, g, lam, s)
    u_minus = tau * np.exp(2 * e_minus * log_base) * w_minus
    u_plus = tau * np.exp(2 * e_plus * log_base) * w_plus
    return u_minus, u_plus


def _rhs(problem: ScatteringProblem):
    n = problem.n
    k_mass = problem.mass
    e_shift = problem.eigen_shift

    def f(tau, y):
        phi, dphi = y
        one_m = 1.0 - tau * tau
        d2 = -((n - 2) * tau * dphi + (k_mass / one_m - e_shift) * phi) / one_m
        return [dphi, d2]

    return f


def ode_residual(problem: ScatteringProblem, phi, tau, h: float = 1e-4):
    """Left side of the ODE applied to a callable ``phi`` by central differences (for checking branches)."""
    tau = np.asarray(tau, dtype=float)
    p0 = phi(tau)
    pp = phi(tau + h)
    pm = phi(tau - h)
    d1 = (pp - pm) / (2 * h)
    d2 = (pp - 2 * p0 + pm) / (h * h)
    one_m = 1.0 - tau * tau
    return one_m * d2 + (problem.n - 2) * tau * d1 + (problem.mass / one_m - problem.eigen_shift) * p0


def solve_scattering_ode(
    problem: ScatteringProblem,
    tau_start: float = 1e-4,
    tau_end: float = 1.0 - 1e-4,
    steps: int = 4096,
    *,
    rtol: float = 1e-12,
    fit_samples: int = 30,
    fit_window: tuple[float, float] = (0.05, 0.2),
    fit_tol: float = FIT_TOL,
) -> BoundaryCoefficients:
    """Integrate the regular solution and read off its boundary coefficients F and H.

    The integration starts from the odd Taylor expansion ``tau + c3 tau^3`` at
    ``tau_start`` and uses an 8th-order Runge-Kutta pair with dense output,
    the step capped at ``(tau_end - tau_start)/steps``.  The numerical
    solution is sampled at ``fit_samples`` values of r spread over
    ``fit_window`` and fitted, with weights r^-(n/2-gamma), against the two
    boundary branches.
    """
    if not 0 < tau_start <= 1e-4:
        raise DomainError("tau_start must lie in (0, 1e-4]")
    if not 0 < tau_end <= 1.0 - 1e-4 or tau_end <= tau_start:
        raise DomainError("tau_end must lie in (tau_start, 1 - 1e-4]")
    r_lo, r_hi = fit_window
    if not 0 < r_lo < r_hi < 2:
        raise DomainError("fit window must satisfy 0 < r_lo < r_hi < 2")
    r_fit = np.linspace(r_lo, r_hi, fit_samples)
    tau_fit = (4.0 - r_fit**2) / (4.0 + r_fit**2)
    if tau_fit.max() > tau_end:
        raise DomainError("fit window reaches beyond tau_end")

    n, g = problem.n, problem.gamma
    c3 = (problem.eigen_shift - problem.mass - (n - 2)) / 6.0
    y0 = [tau_start + c3 * tau_start**3, 1.0 + 3.0 * c3 * tau_start**2]
    sol = solve_ivp(
        _rhs(problem),
        (tau_start, tau_end),
        y0,
        method="DOP853",
        rtol=rtol,
        atol=1e-300,
        max_step=(tau_end - tau_start) / steps,
        dense_output=True,
    )
    if not sol.success:
        raise NonConvergenceError(f"scattering ODE integration failed: {sol.message}")

    phi = sol.sol(tau_fit)[0]
    u_minus, u_plus = boundary_branches(problem, r_fit)
    w = r_fit ** (-(n / 2.0 - g))
    design = np.column_stack([u_minus * w, u_plus * w])
    (F, H), *_ = np.linalg.lstsq(design, phi * w, rcond=None)
    model = F * u_minus + H * u_plus
    residual = float(np.max(np.abs(model - phi) / np.abs(phi)))
    if not residual <= fit_tol:
        raise FitError(f"boundary fit residual {residual:.2e} exceeds {fit_tol:.0e}")
    if F == 0:
        raise FitError("leading boundary coefficient vanished")
    min_phi = float(np.min(sol.y[0]))
    return BoundaryCoefficients(float(F), float(H), residual, min_phi)


def scattering_ratio(n: int, gamma: float, lam: float, **kwargs) -> float:
    """H/F for a single frequency."""
    return solve_scattering_ode(ScatteringProblem(n, gamma, lam), **kwargs).ratio


def scattering_symbol_normalized(n: int, gamma: float, lambdas, **kwargs) -> list[tuple[float, float]]:
    """(lam, (H/F)(lam) / (H/F)(0)) for each lam; the reference run at lam = 0 is always made."""
    if abs((3.0 - 2.0 * gamma) / 4.0 - round((3.0 - 2.0 * gamma) / 4.0)) < RESONANCE_TOL and (3.0 - 2.0 * gamma) <= 0:
        raise DomainError("the multiplier vanishes at lam = 0 for this gamma; no normalisation possible")
    ref = scattering_ratio(n, gamma, 0.0, **kwargs)
    if ref == 0 or not math.isfinite(ref):
        raise DomainError("(H/F)(0) vanished; normalisation impossible")
    out = []
    for lam in lambdas:
        lam = float(lam)
        value = 1.0 if lam == 0 else scattering_ratio(n, gamma, lam, **kwargs) / ref
        out.append((lam, value))
    return out
