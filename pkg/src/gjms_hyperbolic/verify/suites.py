"""Registry of verification suites.

Each suite turns a set of grids into a list of case inputs and evaluates one
case at a time.  Case evaluators are module-level functions of plain data so
that they can run in worker processes.  Evaluators return lists because some
cases (the inequality chain, for instance) check several relations at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable

import numpy as np

from .. import green_kernels as gk
from .. import helgason_fourier as hf
from .. import scattering_ode as so
from .. import sharp_constants as sc
from .. import spectral_symbols as ss
from ..special_functions import abs_gamma_sq
from .model import CaseResult, ToleranceConfig

Inputs = dict[str, Any]
Grids = dict[str, list]

# Seed for the random point pairs of the Green's function suites.
POINT_SEED = 20_240_611
POINT_PAIRS = 100


@dataclass(frozen=True)
class Suite:
    name: str
    checks: str
    rel_tol: float
    defaults: Grids
    build: Callable[[Grids], list[Inputs]]
    evaluate: Callable[[Inputs, ToleranceConfig], list[CaseResult]]
    # axes the command line may set although they have no default grid
    extra_axes: tuple[str, ...] = ()

    def accepts(self, axis: str) -> bool:
        return axis in self.defaults or axis in self.extra_axes


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------


def identity(inputs: Inputs, lhs: float, rhs: float, tol: float, scale: float | None = None) -> CaseResult:
    """lhs == rhs to relative tolerance ``tol``, measured against ``scale`` (default |rhs|)."""
    lhs = float(lhs)
    rhs = float(rhs)
    denom = abs(rhs) if scale is None else abs(float(scale))
    denom = max(denom, np.finfo(float).tiny)
    residual = lhs - rhs
    relative = residual / denom
    passed = math.isfinite(relative) and abs(relative) <= tol
    return CaseResult(inputs, "identity", lhs, rhs, residual, relative, passed)


def inequality(inputs: Inputs, lhs: float, rhs: float, floor: float) -> CaseResult:
    """lhs >= rhs up to ``floor * max(|lhs|, |rhs|, 1)``."""
    m = ss.InequalityMargin(float(lhs), float(rhs))
    passed = math.isfinite(m.margin) and m.holds(floor)
    return CaseResult(inputs, "inequality", m.lhs, m.rhs, m.margin, m.relative_margin, passed)


def _product(values) -> list[Inputs]:
    """Cartesian product of named axes, in the order given."""
    keys = list(values)
    out: list[Inputs] = [{}]
    for key in keys:
        out = [{**base, key: v} for base in out for v in values[key]]
    return out


def _lambda_default() -> list[float]:
    return [float(v) for v in ss.default_lambda_grid()]


# --------------------------------------------------------------------------
# gamma-closed-forms
# --------------------------------------------------------------------------

_CLOSED_FORMS = ("imaginary_axis", "half_line", "integer_shift", "half_integer_shift")


def _closed_form_value(form: str, m: int, lam: float) -> tuple[float, float]:
    x = math.pi * lam
    if form == "imaginary_axis":
        return abs_gamma_sq(0.0, lam), math.pi / (lam * math.sinh(x))
    if form == "half_line":
        return abs_gamma_sq(0.5, lam), math.pi / math.cosh(x)
    if form == "integer_shift":
        prod = math.prod(k * k + lam * lam for k in range(1, m + 1))
        return abs_gamma_sq(m + 1.0, lam), x / math.sinh(x) * prod
    prod = math.prod((k - 0.5) ** 2 + lam * lam for k in range(1, m + 1))
    return abs_gamma_sq(m + 0.5, lam), math.pi / math.cosh(x) * prod


def _build_gamma(grids: Grids) -> list[Inputs]:
    cases = []
    for form in _CLOSED_FORMS:
        shifts = grids["m"] if form in ("integer_shift", "half_integer_shift") else [0]
        for m in shifts:
            for lam in grids["lambda"]:
                cases.append({"check": "closed_form", "form": form, "m": int(m), "a": 0.0, "lambda": lam})
    for a in grids["a_asymptotic"]:
        cases.append({"check": "asymptotic", "form": "stirling", "m": 0, "a": a, "lambda": grids["lambda_asymptotic"][0]})
    return cases


# The large-|lambda| limit is a statement about a limit, so its tolerance is
# fixed at 0.1% and not tied to the suite's relative tolerance.
ASYMPTOTIC_TOL = 1e-3


def _eval_gamma(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    lam = inp["lambda"]
    if inp["check"] == "asymptotic":
        a = inp["a"]
        log_mod = 0.5 * math.log(abs_gamma_sq(a, lam))
        lhs = math.exp(log_mod + math.pi * lam / 2 + (0.5 - a) * math.log(lam) - 0.5 * math.log(2 * math.pi))
        return [identity(inp, lhs, 1.0, ASYMPTOTIC_TOL)]
    lhs, rhs = _closed_form_value(inp["form"], inp["m"], lam)
    return [identity(inp, lhs, rhs, tol.rel)]


# --------------------------------------------------------------------------
# transforms
# --------------------------------------------------------------------------


def _build_transform_K(grids: Grids) -> list[Inputs]:
    return _product({"n": grids["n"], "nu": grids["nu"], "gamma": grids["gamma"], "lambda": grids["lambda"]})


def _eval_transform_K(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    params = gk.KernelParams(inp["nu"], inp["gamma"], inp["n"])
    quad = hf.QuadratureSpec.for_kernel(inp["nu"], inp["n"])
    res = hf.radial_hf_transform(hf.kernel_K_radial(params), inp["lambda"], inp["n"], quad)
    return [identity(inp, res.value, hf.hf_K_closed(inp["nu"], inp["gamma"], inp["lambda"]), tol.rel)]


def _build_transform_H(grids: Grids) -> list[Inputs]:
    cases = []
    for n in grids["n"]:
        for nu in grids["nu"]:
            for offset in grids["gamma_offset"]:
                for lam in grids["lambda"]:
                    cases.append({"n": n, "nu": nu, "gamma": (n - 1) / 2 + offset, "lambda": lam})
    return cases


def _eval_transform_H(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    n, nu, g, lam = inp["n"], inp["nu"], inp["gamma"], inp["lambda"]
    params = gk.KernelParams(nu, g, n)
    quad = hf.QuadratureSpec.for_kernel(nu, n)
    res = hf.radial_hf_transform(hf.kernel_H_radial(params), lam, n, quad)
    series = hf.hf_H_transform(nu, g, n, lam)
    out = [identity({**inp, "check": "quadrature_vs_series"}, res.value, series.value, tol.rel)]
    bare = hf.hf_H_series(nu, g, n, lam).value
    out.append(inequality({**inp, "check": "series_upper_bound"}, hf.hf_H_upper_bound(nu, g, n, lam), bare, tol.margin_floor))
    return out


def _build_legendre(grids: Grids) -> list[Inputs]:
    cases = []
    for n in grids["n"]:
        for excess in grids["g_excess"]:
            for lam in grids["lambda"]:
                cases.append({"n": n, "g": n - 1 + excess, "lambda": lam})
    return cases


def _eval_legendre(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    res = hf.legendre_integral(inp["g"], inp["lambda"], inp["n"])
    return [identity(inp, res.value, hf.legendre_integral_closed(inp["g"], inp["lambda"], inp["n"]), tol.rel)]


# --------------------------------------------------------------------------
# spectral symbols
# --------------------------------------------------------------------------


def _build_gamma_lambda(grids: Grids) -> list[Inputs]:
    return _product({"gamma": grids["gamma"], "lambda": grids["lambda"]})


def _eval_decomposition(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    g, lam = inp["gamma"], inp["lambda"]
    p, pt, extra = (float(v) for v in ss.decomposition_terms(g, lam))
    scale = max(abs(p), abs(pt), abs(extra))
    return [identity(inp, p, pt + extra, tol.rel, scale=scale)]


def _build_bottom(grids: Grids) -> list[Inputs]:
    cases = []
    for k in grids["k"]:
        for what in ("P", "Ptilde", "integer_check"):
            cases.append({"check": "bottom_constant", "k": int(k), "symbol": what, "lambda": 0.0})
    for k in grids["k_symbol"]:
        for what in ("P", "Ptilde"):
            for lam in grids["lambda"]:
                cases.append({"check": "integer_order_symbol", "k": int(k), "symbol": what, "lambda": lam})
    return cases


def _eval_bottom(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    k, lam = inp["k"], inp["lambda"]
    if inp["check"] == "bottom_constant":
        product = math.prod((2 * i - 1) ** 2 / 4 for i in range(1, k + 1))
        if inp["symbol"] == "P":
            return [identity(inp, ss.bottom_constant_P(k), product, tol.rel)]
        if inp["symbol"] == "Ptilde":
            return [identity(inp, ss.bottom_constant_Ptilde(k), product, tol.rel)]
        resid = sc.gjms_bottom_integer_check(k)
        return [identity(inp, product, product - resid, tol.rel)]
    product = math.prod((j - 0.5) ** 2 + lam * lam for j in range(1, k + 1))
    value = ss.symbol_P(k, lam) if inp["symbol"] == "P" else ss.symbol_Ptilde(k, lam)
    return [identity(inp, value, product, tol.rel)]


def _build_equivalence(grids: Grids) -> list[Inputs]:
    cases = [{"check": "positive", **c} for c in _product({"gamma": grids["gamma"], "lambda": grids["lambda"]})]
    cases += [{"check": "large_frequency_stable", "gamma": g, "lambda": 100.0} for g in grids["gamma"]]
    return cases


def _eval_equivalence(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    g, lam = inp["gamma"], inp["lambda"]
    if inp["check"] == "positive":
        ratio = float(ss.equivalence_ratio(g, lam))
        res = inequality(inp, ratio, 0.0, 0.0)
        res.passed = res.passed and ratio > 0 and math.isfinite(ratio)
        return [res]
    quotient = float(ss.equivalence_ratio(g, 100.0)) / float(ss.equivalence_ratio(g, 10.0))
    return [inequality({**inp, "bound": "lower"}, quotient, 0.5, 0.0), inequality({**inp, "bound": "upper"}, 2.0, quotient, 0.0)]


@lru_cache(maxsize=None)
def _zeta_for(n: int, kind: str) -> float:
    """zeta = 1 where the argument gives it explicitly (n = 3 mod 4), otherwise the searched maximum."""
    if n % 4 == 3:
        return 1.0
    return ss.find_max_zeta(n, kind)


def _build_halfdim(grids: Grids) -> list[Inputs]:
    return _product({"n": grids["n"], "lambda": grids["lambda"]})


def _eval_halfdim(kind: str):
    fn = ss.margin_P_halfdim if kind == "P" else ss.margin_Ptilde_halfdim

    def evaluate(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
        zeta = _zeta_for(inp["n"], kind)
        m = fn(inp["n"], inp["lambda"], zeta)
        res = inequality({**inp, "zeta": zeta}, m.lhs, m.rhs, tol.margin_floor)
        res.passed = res.passed and zeta > 0
        return [res]

    return evaluate


_eval_halfdim_P = _eval_halfdim("P")
_eval_halfdim_Ptilde = _eval_halfdim("Ptilde")


def _eval_increment(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    m = ss.margin_increment_vs_gamma_ratio(inp["gamma"], inp["lambda"])
    return [inequality(inp, m.lhs, m.rhs, tol.margin_floor)]


def _eval_chain(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    return [
        inequality({**inp, "link": m.label}, m.lhs, m.rhs, tol.margin_floor)
        for m in ss.chain_margins(inp["gamma"], inp["lambda"])
    ]


# --------------------------------------------------------------------------
# kernels and Green's functions
# --------------------------------------------------------------------------


def _build_laplacian(grids: Grids) -> list[Inputs]:
    cases = []
    for n in grids["n"]:
        lo, hi = (n - 1) / 2, n / 2
        count = int(grids["gamma_points"][0])
        for g in np.linspace(lo, hi, count + 1)[:-1]:
            for rho in grids["rho"]:
                cases.append({"n": n, "gamma": float(g), "rho": rho})
    return cases


def _eval_laplacian(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    n, g, rho = inp["n"], inp["gamma"], inp["rho"]
    lhs, first, second = (float(v) for v in gk.laplacian_identity_terms(g, n, rho))
    h_val = float(gk.kernel_H(gk.KernelParams(0.0, g, n), rho))
    # the closed form can vanish identically (n = 3, gamma = 1), so measure
    # against the largest individual contribution
    scale = max(abs(first), abs(second), (n - 1) ** 2 / 4 * h_val)
    out = [identity({**inp, "check": "identity"}, lhs, first + second, tol.rel, scale=scale)]
    # lhs >= first term: lhs is a finite-difference value, so the margin floor is the suite tolerance
    sign = inequality({**inp, "check": "lower_bound_by_first_term"}, lhs, first, 0.0)
    sign.relative = sign.residual / scale
    sign.passed = sign.relative >= -tol.rel
    out.append(sign)
    return out


def _random_pairs(model: str, n: int, count: int, seed: int) -> list[tuple[list[float], list[float]]]:
    rng = np.random.default_rng([seed, n, 0 if model == "ball" else 1])
    pairs = []
    for _ in range(count):
        if model == "ball":
            pts = []
            for _ in range(2):
                v = rng.normal(size=n)
                v *= rng.uniform(0.0, 0.95) / np.linalg.norm(v)
                pts.append(v)
        else:
            pts = []
            for _ in range(2):
                v = rng.normal(size=n)
                v[0] = rng.uniform(0.05, 3.0)
                pts.append(v)
        pairs.append(([float(c) for c in pts[0]], [float(c) for c in pts[1]]))
    return pairs


def _build_conformal(model: str):
    def build(grids: Grids) -> list[Inputs]:
        cases = []
        for n in grids["n"]:
            pairs = _random_pairs(model, n, int(grids["pairs"][0]), POINT_SEED)
            for g in grids["gamma"]:
                for idx, (x, y) in enumerate(pairs):
                    cases.append({"n": n, "gamma": g, "pair": idx, "x": x, "y": y})
        return cases

    return build


def _eval_conformal_ball(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    lhs, rhs = gk.ball_conformal_residual(inp["gamma"], inp["n"], np.array(inp["x"]), np.array(inp["y"]))
    return [identity(inp, lhs, rhs, tol.rel)]


def _eval_conformal_halfspace(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    lhs, rhs = gk.halfspace_conformal_residual(inp["gamma"], inp["n"], np.array(inp["x"]), np.array(inp["y"]))
    return [identity(inp, lhs, rhs, tol.rel)]


def _build_image(grids: Grids) -> list[Inputs]:
    pairs = _random_pairs("halfspace", 3, int(grids["pairs"][0]), POINT_SEED + 1)
    return [{"n": 3, "gamma": 1.0, "pair": i, "x": x, "y": y} for i, (x, y) in enumerate(pairs)]


def _eval_image(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    x, y = np.array(inp["x"]), np.array(inp["y"])
    return [identity(inp, gk.green_halfspace(1.0, 3, x, y), gk.green_halfspace_image_charge(x, y), tol.rel)]


# --------------------------------------------------------------------------
# constants
# --------------------------------------------------------------------------


def _build_duality(grids: Grids) -> list[Inputs]:
    cases = []
    count = int(grids["gamma_points"][0])
    for n in grids["n"]:
        for g in np.linspace((n - 1) / 2, n / 2, count + 1)[:-1]:
            cases.append({"check": "duality", "n": n, "gamma": float(g)})
    cases += [
        {"check": "sobolev_3_1", "n": 3, "gamma": 1.0},
        {"check": "sobolev_4_1", "n": 4, "gamma": 1.0},
        {"check": "adams_3_1.5", "n": 3, "gamma": 1.5},
        {"check": "hls_3_1", "n": 3, "gamma": 1.0},
    ]
    cases += [{"check": "sobolev_vanishing", "n": n, "gamma": n / 2} for n in grids["n"]]
    return cases


def _eval_duality(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    n, g, check = inp["n"], inp["gamma"], inp["check"]
    if check == "duality":
        inv_s = 1.0 / sc.sobolev_constant(n, g)
        return [identity(inp, inv_s + sc.duality_residual(n, g), inv_s, tol.rel)]
    if check == "sobolev_3_1":
        return [identity(inp, sc.sobolev_constant(3, 1.0), 3 * (math.pi / 2) ** (4 / 3), tol.rel)]
    if check == "sobolev_4_1":
        return [identity(inp, sc.sobolev_constant(4, 1.0), 8 * math.pi / math.sqrt(6), tol.rel)]
    if check == "adams_3_1.5":
        return [identity(inp, sc.adams_constant(3, 1.5), 6 * math.pi**2, tol.rel)]
    if check == "hls_3_1":
        rhs = math.sqrt(math.pi) / math.gamma(2.5) * (math.gamma(1.5) / math.gamma(3.0)) ** (-2.0 / 3.0)
        return [identity(inp, sc.hls_constant(3, 1.0), rhs, tol.rel)]
    # Gamma((n-2g)/2) sits in the denominator, so S_{n,g} ~ const*(n/2-g) near n/2
    near = sc.sobolev_constant(n, n / 2 - 1e-3)
    far = sc.sobolev_constant(n, n / 2 - 1e-2)
    return [inequality(inp, far, 5.0 * near, 0.0)]


# --------------------------------------------------------------------------
# scattering
# --------------------------------------------------------------------------

_SCATTERING_PAIRS = ((3, 0.5), (3, 1.3), (4, 0.7), (5, 2.2))


def _build_scattering(grids: Grids) -> list[Inputs]:
    pairs = [tuple(p) for p in grids["pairs"]]
    if "n" in grids or "gamma" in grids:
        # an explicit n or gamma grid replaces the default pairs by a product
        ns = grids.get("n", sorted({p[0] for p in pairs}))
        gs = grids.get("gamma", sorted({p[1] for p in pairs}))
        pairs = [(n, g) for n in ns for g in gs]
    return [{"n": int(n), "gamma": float(g), "lambda": lam} for n, g in pairs for lam in grids["lambda"]]


@lru_cache(maxsize=None)
def _scattering_reference(n: int, gamma: float) -> float:
    return so.scattering_ratio(n, gamma, 0.0)


def _eval_scattering(inp: Inputs, tol: ToleranceConfig) -> list[CaseResult]:
    n, g, lam = inp["n"], inp["gamma"], inp["lambda"]
    ref = _scattering_reference(n, g)
    value = so.scattering_ratio(n, g, lam) / ref
    expected = float(ss.symbol_P(g, lam)) / float(ss.bottom_constant_P(g))
    return [identity(inp, value, expected, tol.rel)]


# --------------------------------------------------------------------------
# registry
# --------------------------------------------------------------------------


def _suites() -> dict[str, Suite]:
    lam_grid = _lambda_default()
    gamma_p63 = [float(v) for v in np.concatenate([np.linspace(2, 3, 50), np.linspace(4, 5, 50)])]
    suites = [
        Suite(
            "transform-of-K",
            "quadrature Helgason-Fourier transform of the Green kernel K equals the gamma ratio |G(nu+i lam)|^2/|G(nu+gamma+i lam)|^2",
            1e-6,
            {"n": [3, 4], "nu": [0.5, 1.0, 2.0], "gamma": [0.6, 1.0, 1.7], "lambda": [0.0, 0.5, 1.0, 2.0, 5.0]},
            _build_transform_K,
            _eval_transform_K,
        ),
        Suite(
            "transform-of-H",
            "quadrature transform of H agrees with its series, and the bare series respects its upper bound by the K transform",
            1e-5,
            {"n": [3, 4, 5], "nu": [0.5, 1.0, 2.0], "gamma_offset": [0.0, 0.25], "lambda": [0.0, 1.0, 2.0]},
            _build_transform_H,
            _eval_transform_H,
        ),
        Suite(
            "legendre-integral",
            "quadrature of (cosh rho/2)^-g against the Legendre function equals its gamma closed form (g > n-1)",
            1e-6,
            {"n": [3, 4, 5], "g_excess": [0.5, 2.0, 4.5], "lambda": [0.0, 0.5, 2.0]},
            _build_legendre,
            _eval_legendre,
        ),
        Suite(
            "decomposition-identity",
            "symbol_P = symbol_Ptilde + sin(gamma pi)/pi |G(gamma+1/2+i lam)|^2",
            1e-10,
            {"gamma": [float(v) for v in np.linspace(0.05, 5.0, 100)], "lambda": [float(v) for v in np.linspace(0, 50, 100)]},
            _build_gamma_lambda,
            _eval_decomposition,
        ),
        Suite(
            "bottom-constants",
            "bottom-of-spectrum constants and integer-order symbols equal their finite products",
            1e-12,
            {"k": list(range(1, 8)), "k_symbol": [1, 2, 3, 4], "lambda": [0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 100.0, 1000.0]},
            _build_bottom,
            _eval_bottom,
        ),
        Suite(
            "equivalence-412",
            "the increment of symbol_P over lam^2 (lam^2+1)^(gamma-1) stays positive and stabilises at large lam",
            1e-10,
            {"gamma": [0.3, 0.7, 1.0, 1.3], "lambda": [float(v) for v in np.geomspace(1e-3, 1e3, 61)]},
            _build_equivalence,
            _eval_equivalence,
        ),
        Suite(
            "lemma46-zeta",
            "symbol_P(n/2, lam) - symbol_P(n/2, 0) >= lam^2 (lam^2+zeta)^(n/2-1) for odd n",
            1e-10,
            {"n": [3, 5, 7], "lambda": lam_grid},
            _build_halfdim,
            _eval_halfdim_P,
        ),
        Suite(
            "lemma52-zeta",
            "symbol_Ptilde(n/2, lam) - symbol_Ptilde(n/2, 0) >= lam^2 (lam^2+zeta)^(n/2-1) for odd n",
            1e-10,
            {"n": [3, 5, 7], "lambda": lam_grid},
            _build_halfdim,
            _eval_halfdim_Ptilde,
        ),
        Suite(
            "prop63-margins",
            "symbol_P increment >= |G(gamma+i lam)|^2/|G(i lam)|^2 for 2k <= gamma <= 2k+1",
            1e-10,
            {"gamma": gamma_p63, "lambda": lam_grid},
            _build_gamma_lambda,
            _eval_increment,
        ),
        Suite(
            "section7-chain",
            "every link of the gamma-ratio inequality chain for 2 <= gamma <= 3",
            1e-10,
            {"gamma": [float(v) for v in np.linspace(2, 3, 25)], "lambda": lam_grid},
            _build_gamma_lambda,
            _eval_chain,
        ),
        Suite(
            "lemma61-differential",
            "finite-difference (-Laplacian - (n-1)^2/4) H_{0,gamma} equals its two-term closed form and dominates the first term",
            1e-5,
            {"n": [3, 5, 7], "gamma_points": [5], "rho": [float(v) for v in np.geomspace(0.1, 10, 20)]},
            _build_laplacian,
            _eval_laplacian,
        ),
        Suite(
            "conformal-green-ball",
            "Green's function of (-Laplacian)^gamma on the ball equals the conformally weighted hyperbolic kernel K_{1/2,gamma}",
            1e-9,
            {"n": [3, 5], "gamma": [0.5, 1.0, 1.5], "pairs": [POINT_PAIRS]},
            _build_conformal("ball"),
            _eval_conformal_ball,
        ),
        Suite(
            "conformal-green-halfspace",
            "Green's function of (-Laplacian)^gamma on the half-space equals (x1 y1)^(gamma-n/2) K_{1/2,gamma}",
            1e-9,
            {"n": [3, 5], "gamma": [0.5, 1.0, 1.5], "pairs": [POINT_PAIRS]},
            _build_conformal("halfspace"),
            _eval_conformal_halfspace,
        ),
        Suite(
            "image-charge",
            "half-space Green's function for n = 3, gamma = 1 equals the image-charge formula",
            1e-10,
            {"pairs": [POINT_PAIRS]},
            _build_image,
            _eval_image,
        ),
        Suite(
            "constants-duality",
            "HLS constant times the kernel prefactor equals 1/S_{n,gamma}; closed values of S, C and beta_0; S_{n,gamma} vanishes as gamma -> n/2",
            1e-12,
            {"n": list(range(3, 10)), "gamma_points": [20]},
            _build_duality,
            _eval_duality,
        ),
        Suite(
            "scattering-oracle",
            "H/F of the scattering ODE, normalised at lam = 0, equals symbol_P(gamma, lam)/symbol_P(gamma, 0)",
            1e-4,
            {"pairs": [list(p) for p in _SCATTERING_PAIRS], "lambda": [0.25, 0.5, 1.0, 2.0, 4.0]},
            _build_scattering,
            _eval_scattering,
            extra_axes=("n", "gamma"),
        ),
        Suite(
            "gamma-closed-forms",
            "|G(a+i lam)|^2 equals its elementary closed forms; the large-lam asymptotic holds to 0.1%",
            1e-12,
            {
                "m": [1, 2, 3],
                "lambda": [0.1, 0.5, 1.0, 2.0, 5.0, 10.0],
                "a_asymptotic": [0.25, 0.5, 1.0, 1.5],
                "lambda_asymptotic": [50.0],
            },
            _build_gamma,
            _eval_gamma,
        ),
    ]
    return {s.name: s for s in suites}


SUITES: dict[str, Suite] = _suites()
