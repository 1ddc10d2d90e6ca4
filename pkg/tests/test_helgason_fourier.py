import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gjms_hyperbolic import helgason_fourier as hf
from gjms_hyperbolic.errors import DomainError
from gjms_hyperbolic.green_kernels import KernelParams, radial_laplace_beltrami

mp.mp.dps = 40


def oracle_phi(lam, n, rho, dps=50):
    with mp.workdps(dps):
        a = (mp.mpf(n - 1) / 2 + 1j * mp.mpf(lam)) / 2
        return float(mp.re(mp.hyp2f1(a, mp.conj(a), mp.mpf(n) / 2, -mp.sinh(mp.mpf(rho)) ** 2)))



# --- c-function ---------------------------------------------------------------


def test_c_function_n3_closed_form():
    lam = np.array([0.0, 0.5, 2.0, 30.0])
    np.testing.assert_allclose(hf.c_function_inv_sq(lam, 3), lam**2 / (2 * (2 * math.pi) ** 3), rtol=1e-13)
    assert math.isclose(hf.c_function_inv_sq_over_lambda_sq(0.0, 3), 1 / (2 * (2 * math.pi) ** 3), rel_tol=1e-14)


@pytest.mark.parametrize("n", [2, 4, 5, 8])
def test_c_function_matches_mpmath(n):
    for lam in (1e-3, 0.7, 5.0, 60.0):
        want = abs(mp.gamma(1j * lam + mp.mpf(n - 1) / 2)) ** 2 / (2 * (2 * mp.pi) ** n * abs(mp.gamma(1j * lam)) ** 2)
        assert math.isclose(hf.c_function_inv_sq(lam, n), float(want), rel_tol=1e-12)
    limit = mp.gamma(mp.mpf(n - 1) / 2) ** 2 / (2 * (2 * mp.pi) ** n)
    assert math.isclose(hf.c_function_inv_sq_over_lambda_sq(0.0, n), float(limit), rel_tol=1e-13)


# --- spherical functions ----------------------------------------------------------


@given(st.floats(min_value=0.01, max_value=200.0), st.floats(min_value=1e-3, max_value=25.0))
@settings(max_examples=150, deadline=None)
def test_spherical_n3_closed_form(lam, rho):
    want = math.sin(lam * rho) / (lam * math.sinh(rho))
    env = 1.0 / (1.0 + lam * math.sinh(rho))
    assert abs(hf.spherical_fn(lam, 3, rho) - want) <= 1e-10 * env


@pytest.mark.parametrize("n", [2, 4, 5, 7])
@pytest.mark.parametrize("lam", [0.0, 0.3, 4.0, 16.0, 60.0])
def test_spherical_matches_hypergeometric_oracle(n, lam):
    rho = np.array([1e-3, 0.2, 1.0, 2.5, 6.0, 15.0])
    got = hf.spherical_fn(lam, n, rho)
    for r, g in zip(rho, got):
        want = oracle_phi(lam, n, r)
        env = (1.0 + lam * math.sinh(r)) ** (-(n - 1) / 2) * math.exp(-(n - 1) / 2 * max(r - 1.0, 0.0)) * (1 + r)
        assert abs(g - want) <= 1e-10 * max(env, abs(want)), (r, g, want)


def test_spherical_large_lambda_band():
    # the band where the hypergeometric expansions all cancel is covered by the ODE continuation
    lam, n = 300.0, 4
    rho = np.array([0.05, 0.4, 1.3, 3.0])
    got = hf.spherical_fn(lam, n, rho)
    for r, g in zip(rho, got):
        want = oracle_phi(lam, n, r, dps=80)
        env = (1.0 + lam * math.sinh(r)) ** (-(n - 1) / 2) * math.exp(-(n - 1) / 2 * max(r - 1.0, 0.0)) * (1 + r)
        assert abs(g - want) <= 1e-8 * env


def test_spherical_near_origin_and_imaginary_part():
    for n in (2, 3, 6):
        assert math.isclose(hf.spherical_fn(2.5, n, 1e-8), 1.0, rel_tol=1e-12)
    z = hf.spherical_fn_complex(3.0, 5, np.array([0.5, 2.0]))
    assert np.all(np.abs(z.imag) <= 1e-12 * np.maximum(np.abs(z.real), 1e-3))


@pytest.mark.parametrize("n, lam", [(3, 1.5), (4, 0.0), (6, 2.2)])
def test_spherical_is_an_eigenfunction(n, lam):
    rho = np.array([0.4, 1.0, 2.0])
    lap = radial_laplace_beltrami(lambda r: hf.spherical_fn(lam, n, r), rho, n=n)
    want = -((n - 1) ** 2 / 4 + lam**2) * hf.spherical_fn(lam, n, rho)
    np.testing.assert_allclose(lap, want, rtol=1e-5, atol=1e-7)


def test_spherical_domain():
    with pytest.raises(DomainError):
        hf.spherical_fn(1.0, 3, 0.0)
    with pytest.raises(DomainError):
        hf.SphericalFunction(1.0, 1)


# --- transforms: quadrature against closed forms and series ---------------------


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("excess", [0.3, 1.0, 4.0])
def test_legendre_integral(n, excess):
    g = n - 1 + excess
    for lam in (0.0, 1.3, 9.0):
        res = hf.legendre_integral(g, lam, n)
        want = hf.legendre_integral_closed(g, lam, n)
        # quadrature tolerances are absolute, so tiny values are held to the reported error
        assert abs(res.value - want) <= max(1e-9 * want, 2 * res.error)


def test_legendre_integral_closed_against_mpmath_quadrature():
    # n = 3: sinh^(3/2) P^{-1/2}_{i lam - 1/2}(cosh) = sqrt(2/pi) sinh(rho) sin(lam rho)/lam
    g, lam = 3.0, 0.8
    with mp.workdps(30):
        f = lambda r: mp.cosh(r / 2) ** (-g) * mp.sqrt(2 / mp.pi) * mp.sinh(r) * mp.sin(lam * r) / lam
        want = mp.quad(f, [0, 5, 20, mp.inf])
    assert math.isclose(hf.legendre_integral_closed(g, lam, 3), float(want), rel_tol=1e-12)


@pytest.mark.parametrize("nu, g, n", [(0.5, 1.0, 3), (1.0, 0.6, 4), (0.3, 1.7, 3), (2.0, 2.4, 5)])
def test_transform_of_K_matches_closed_form(nu, g, n):
    params = KernelParams(nu, g, n)
    quad = hf.QuadratureSpec.for_kernel(nu, n)
    for lam in (0.0, 0.5, 3.0, 12.0):
        res = hf.radial_hf_transform(hf.kernel_K_radial(params), lam, n, quad)
        assert math.isclose(res.value, float(hf.hf_K_closed(nu, g, lam)), rel_tol=1e-9)


def test_kernel_series_sums_to_closed_form():
    for nu, g, lam in [(0.5, 1.0, 0.0), (1.2, 0.4, 3.0), (0.3, 2.5, 10.0)]:
        res = hf.kernel_series(nu, g, lam)
        want = math.gamma(g) * float(hf.hf_K_closed(nu, g, lam))
        assert abs(res.value - want) <= max(1e-12 * want, 5 * res.error)
        assert math.isclose(res.value, want, rel_tol=1e-9)


def test_kernel_series_slow_decay_uses_tail():
    # gamma = 0.4 makes the terms decay like k^-1.4, far too slowly for plain summation
    res = hf.kernel_series(1.2, 0.4, 3.0, max_terms=500)
    assert res.tail > 0 and res.terms == 500
    assert math.isclose(res.value, math.gamma(0.4) * float(hf.hf_K_closed(1.2, 0.4, 3.0)), rel_tol=1e-8)


def oracle_H_series(nu, g, n, lam):
    with mp.workdps(30):
        a = mp.mpf(n) / 2 - g
        b1, b2 = mp.mpf(n - 1) / 2 + nu, mp.mpf(0.5) + nu

        def term(k):
            return abs(mp.gamma(nu + k + 1j * lam)) ** 2 * mp.rf(a, k) / (mp.gamma(b1 + k) * mp.gamma(b2 + k) * mp.factorial(k))

        # the default extrapolation misjudges these algebraically decaying tails at the 1e-7 level
        return float(mp.nsum(term, [0, mp.inf], method="euler-maclaurin"))


@pytest.mark.parametrize("nu, g, n", [(0.5, 1.2, 3), (1.0, 1.9, 4), (0.7, 2.5, 5)])
def test_H_series_against_mpmath(nu, g, n):
    for lam in (0.0, 2.0):
        assert math.isclose(hf.hf_H_series(nu, g, n, lam).value, oracle_H_series(nu, g, n, lam), rel_tol=1e-9)


@pytest.mark.parametrize("nu, g, n", [(0.5, 1.2, 3), (1.0, 1.9, 4), (0.7, 2.5, 5), (0.5, 1.5, 3)])
def test_transform_of_H(nu, g, n):
    params = KernelParams(nu, g, n)
    quad = hf.QuadratureSpec.for_kernel(nu, n)
    # at lam = 0 the integrand is positive, so that value sets the scale of round-off in the oscillatory cases
    l1 = hf.hf_H_transform(nu, g, n, 0.0).value
    for lam in (0.0, 1.0, 6.0):
        res = hf.radial_hf_transform(hf.kernel_H_radial(params), lam, n, quad)
        series = hf.hf_H_transform(nu, g, n, lam)
        assert abs(res.value - series.value) <= 1e-9 * max(abs(series.value), 1e-3 * l1)
        bare = hf.hf_H_series(nu, g, n, lam).value
        assert bare <= hf.hf_H_upper_bound(nu, g, n, lam) * (1 + 1e-12)


def test_H_series_half_dimension_single_term():
    res = hf.hf_H_series(0.5, 1.5, 3, 2.0)
    assert res.terms == 1


def test_transform_errors():
    with pytest.raises(DomainError):
        hf.radial_hf_transform(hf.RadialFunction(np.exp, 0.5), 1.0, 3)
    with pytest.raises(DomainError):
        hf.legendre_integral(1.5, 1.0, 3)
    with pytest.raises(DomainError):
        hf.hf_K_closed(0.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        hf.hf_H_series(0.5, 0.9, 3, 1.0)
    with pytest.raises(DomainError):
        hf.QuadratureSpec(rho_max=-1)


def test_transform_of_K_simplest_case():
    params = KernelParams(1.0, 1.0, 3)
    quad = hf.QuadratureSpec.for_kernel(1.0, 3)
    for lam in (0.0, 1.0, 3.0):
        res = hf.radial_hf_transform(hf.kernel_K_radial(params), lam, 3, quad)
        assert math.isclose(res.value, 1.0 / (1.0 + lam * lam), rel_tol=1e-6)


def test_closed_transform_decreasing_in_lambda():
    lam = np.linspace(0, 40, 401)
    for nu, g in [(0.5, 1.0), (2.0, 0.3), (0.1, 3.0)]:
        assert np.all(np.diff(hf.hf_K_closed(nu, g, lam)) < 0)


def test_spherical_normalisation_at_small_radius():
    # 1 - phi ~ ((n-1)^2/4 + lam^2) rho^2 / (2n), so the 1e-4 window only holds for moderate lam
    for n in (2, 3, 5):
        for lam in (0.0, 1.0, 3.0):
            assert abs(hf.spherical_fn(lam, n, 1e-3) - 1.0) <= 1e-4
        curv = ((n - 1) ** 2 / 4 + 40.0**2) / (2 * n)
        assert math.isclose(1.0 - hf.spherical_fn(40.0, n, 1e-3), curv * 1e-6, rel_tol=1e-3)
