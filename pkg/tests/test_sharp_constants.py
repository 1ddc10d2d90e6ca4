import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gjms_hyperbolic import sharp_constants as sc
from gjms_hyperbolic.errors import DomainError, RangeError

mp.mp.dps = 40


def oracle_sobolev(n, g):
    g = mp.mpf(g)
    return 4**g * mp.pi**g * mp.gamma((n + 2 * g) / 2) / mp.gamma((n - 2 * g) / 2) * (mp.gamma(mp.mpf(n) / 2) / mp.gamma(n)) ** (2 * g / n)


def oracle_hls(n, lam):
    lam = mp.mpf(lam)
    return mp.pi ** (lam / 2) * mp.gamma(mp.mpf(n) / 2 - lam / 2) / mp.gamma(n - lam / 2) * (mp.gamma(mp.mpf(n) / 2) / mp.gamma(n)) ** (-1 + lam / n)


def test_sobolev_closed_values():
    assert math.isclose(sc.sobolev_constant(3, 1.0), 3 * (math.pi / 2) ** (4 / 3), rel_tol=1e-12)
    assert math.isclose(sc.sobolev_constant(4, 1.0), 8 * math.pi / math.sqrt(6), rel_tol=1e-12)


@given(st.integers(min_value=1, max_value=40), st.floats(min_value=1e-3, max_value=0.999))
@settings(max_examples=200, deadline=None)
def test_sobolev_matches_mpmath(n, frac):
    g = frac * n / 2
    assert math.isclose(sc.sobolev_constant(n, g), float(oracle_sobolev(n, g)), rel_tol=1e-12)


@pytest.mark.parametrize("n", [3, 4, 5, 7])
def test_sobolev_shape_in_gamma(n):
    g = np.linspace(0.01, n / 2 - 1e-4, 400)
    s = np.array([sc.sobolev_constant(n, x) for x in g])
    assert np.all(s > 0)
    # Gamma((n-2g)/2) is in the denominator, so S vanishes linearly as g -> n/2
    near = sc.sobolev_constant(n, n / 2 - 1e-6)
    assert math.isclose(near / 1e-6, float(oracle_sobolev(n, n / 2 - 1e-6)) / 1e-6, rel_tol=1e-9)
    assert near < 1e-4 * s.max()
    # it rises from 1 at g = 0 to an interior maximum
    peak = int(np.argmax(s))
    assert 0 < peak < len(g) - 1


def test_sobolev_peak_location_n3():
    g = np.linspace(0.9, 1.4, 5001)
    s = [sc.sobolev_constant(3, x) for x in g]
    assert abs(g[int(np.argmax(s))] - 1.12) < 0.02


def test_hls_values():
    want = math.sqrt(math.pi) / math.gamma(2.5) * (math.gamma(1.5) / math.gamma(3)) ** (-2 / 3)
    assert math.isclose(sc.hls_constant(3, 1.0), want, rel_tol=1e-13)


@given(st.integers(min_value=1, max_value=40), st.floats(min_value=1e-3, max_value=0.999))
@settings(max_examples=200, deadline=None)
def test_hls_matches_mpmath(n, frac):
    lam = frac * n
    got = sc.hls_constant(n, lam)
    assert got > 0
    assert math.isclose(got, float(oracle_hls(n, lam)), rel_tol=1e-12)


@pytest.mark.parametrize("n, g", [(3, 1.0), (5, 2.3), (7, 3.0), (3, 1.4999), (20, 9.7)])
def test_duality_examples(n, g):
    assert abs(sc.duality_relative_residual(n, g)) <= 1e-12
    assert abs(sc.duality_residual(n, g)) <= 1e-12 / sc.sobolev_constant(n, g)


def test_duality_holds_in_exact_arithmetic():
    # the two sides evaluated independently at 50 digits agree to the working precision
    with mp.workdps(50):
        for n, g in [(3, 1), (5, mp.mpf("2.3")), (7, 3)]:
            lhs = mp.gamma(mp.mpf(n) / 2 - g) / (2**n * mp.pi ** (mp.mpf(n) / 2) * mp.gamma(g)) * 2 ** (n - 2 * g) * oracle_hls(n, n - 2 * g)
            assert abs(lhs * oracle_sobolev(n, g) - 1) < mp.mpf(10) ** -45


@given(st.integers(min_value=2, max_value=30), st.floats(min_value=0.0, max_value=0.999))
@settings(max_examples=200, deadline=None)
def test_duality_grid(n, frac):
    g = (n - 1) / 2 + frac / 2
    assert abs(sc.duality_relative_residual(n, g)) <= 1e-12


def test_adams_constants():
    assert math.isclose(sc.adams_constant(3, 1.5), 6 * math.pi**2, rel_tol=1e-12)
    # Gamma(1)/Gamma(1) and the exponent 2 make this exact: (2/pi^2) (4 pi^2)^2
    assert math.isclose(sc.adams_constant(4, 2.0), 32 * math.pi**2, rel_tol=1e-12)
    # m = 2 in dimension 4 is the classical second-order case
    assert math.isclose(sc.sphere_area(3), 4 * math.pi, rel_tol=1e-15)
    assert math.isclose(sc.sphere_area(4), 2 * math.pi**2, rel_tol=1e-15)


@given(st.integers(min_value=1, max_value=20), st.floats(min_value=0.01, max_value=0.99))
@settings(max_examples=100, deadline=None)
def test_adams_matches_mpmath(n, frac):
    m = frac * n
    m_ = mp.mpf(m)
    area = 2 * mp.pi ** (mp.mpf(n) / 2) / mp.gamma(mp.mpf(n) / 2)
    want = n / area * (mp.pi ** (mp.mpf(n) / 2) * 2**m_ * mp.gamma(m_ / 2) / mp.gamma((n - m_) / 2)) ** (n / (n - m_))
    if want > mp.mpf(1.7e308):
        with pytest.raises(RangeError):
            sc.adams_constant(n, m)
        return
    got = sc.adams_constant(n, m)
    assert got > 0 and math.isclose(got, float(want), rel_tol=1e-11)


@pytest.mark.parametrize("k", range(1, 8))
def test_bottom_integer_check(k):
    product = math.prod((2 * i - 1) ** 2 / 4 for i in range(1, k + 1))
    assert abs(sc.gjms_bottom_integer_check(k)) <= 1e-12 * product


def test_errors():
    for call in (
        lambda: sc.sobolev_constant(3, 1.5),
        lambda: sc.sobolev_constant(3, 0.0),
        lambda: sc.hls_constant(3, 3.0),
        lambda: sc.duality_residual(3, 0.9),
        lambda: sc.adams_constant(3, 3.0),
        lambda: sc.gjms_bottom_integer_check(0),
        lambda: sc.gjms_bottom_integer_check(1.5),
    ):
        with pytest.raises(DomainError):
            call()
