import math

import numpy as np
import pytest

from gjms_hyperbolic import scattering_ode as so
from gjms_hyperbolic.errors import DomainError, ResonanceError
from gjms_hyperbolic.spectral_symbols import symbol_P


def test_regular_solution_at_zero_frequency():
    res = so.solve_scattering_ode(so.ScatteringProblem(3, 0.5, 0.0))
    assert math.isfinite(res.ratio) and res.ratio != 0
    assert res.fit_residual <= 1e-8
    # pinned: for n = 3, gamma = 1/2 the ODE is solvable in closed form, F = pi/2 and H = -1
    assert math.isclose(res.F, math.pi / 2, rel_tol=1e-9)
    assert math.isclose(res.ratio, -2 / math.pi, rel_tol=1e-9)


@pytest.mark.parametrize("n, g, lam", [(3, 0.5, 1.0), (4, 1.3, 2.0), (5, 0.8, 0.5)])
def test_refinement_convergence(n, g, lam):
    p = so.ScatteringProblem(n, g, lam)
    coarse = so.solve_scattering_ode(p, steps=2**12).ratio
    fine = so.solve_scattering_ode(p, steps=2**13).ratio
    assert abs(fine / coarse - 1) <= 1e-5


@pytest.mark.parametrize(
    "n, g, lams",
    [(3, 0.5, [0.5, 1.0, 3.0]), (3, 1.2, [1.0, 2.0]), (5, 1.7, [0.7, 2.5]), (4, 0.3, [1.0, 4.0])],
)
def test_normalized_symbol_matches_gamma_ratio(n, g, lams):
    base = symbol_P(g, 0.0)
    for lam, value in so.scattering_symbol_normalized(n, g, [0.0, *lams]):
        want = symbol_P(g, lam) / base
        assert abs(value / want - 1) <= 1e-4, (lam, value, want)


def test_symbol_is_even_in_lambda():
    pos = so.scattering_ratio(3, 0.7, 1.5)
    neg = so.scattering_ratio(3, 0.7, -1.5)
    assert pos == neg


@pytest.mark.parametrize("g", [0.4, 1.3, 2.2])
def test_boundary_branches_solve_the_ode(g):
    p = so.ScatteringProblem(5, g, 1.1)
    tau = np.array([0.3, 0.6, 0.9])

    def branch(which):
        def f(t):
            r = 2.0 * np.sqrt((1.0 - t) / (1.0 + t))
            return so.boundary_branches(p, r)[which]

        return f

    for which in (0, 1):
        u = branch(which)(tau)
        res = so.ode_residual(p, branch(which), tau, h=1e-4)
        assert np.all(np.abs(res) <= 1e-5 * (np.abs(u) + 1)), res


def test_branch_normalisation_near_boundary():
    p = so.ScatteringProblem(3, 0.6, 2.0)
    r = np.array([1e-4, 1e-3])
    um, up = so.boundary_branches(p, r)
    np.testing.assert_allclose(um / r ** (1.5 - 0.6), 1.0, rtol=1e-5)
    np.testing.assert_allclose(up / r ** (1.5 + 0.6), 1.0, rtol=1e-5)


def test_errors():
    with pytest.raises(ResonanceError):
        so.ScatteringProblem(3, 1.0, 0.5)
    with pytest.raises(DomainError):
        so.ScatteringProblem(3, 1.5, 0.5)
    with pytest.raises(DomainError):
        so.ScatteringProblem(1, 0.3, 0.5)
    p = so.ScatteringProblem(3, 0.5, 1.0)
    with pytest.raises(DomainError):
        so.solve_scattering_ode(p, tau_start=1e-2)
    with pytest.raises(DomainError):
        so.solve_scattering_ode(p, tau_end=1.0)
    with pytest.raises(DomainError):
        so.solve_scattering_ode(p, fit_window=(0.2, 0.1))
    with pytest.raises(DomainError):
        # (3 - 2 gamma)/4 = -1 puts a pole of the denominator gamma at lam = 0
        so.scattering_symbol_normalized(9, 3.5, [0.0, 1.0])
