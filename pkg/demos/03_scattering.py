"""The symbol P_gamma recovered from a scattering ODE, with no gamma functions.

The regular solution is integrated to the boundary and split into its two
Frobenius branches; the ratio of their coefficients, normalised at lam = 0,
is compared with symbol_P(gamma, lam) / symbol_P(gamma, 0).
"""

from gjms_hyperbolic import scattering_ode as so
from gjms_hyperbolic.spectral_symbols import symbol_P

for n, g in [(3, 0.5), (4, 1.3)]:
    print(f"n={n}, gamma={g}")
    base = symbol_P(g, 0.0)
    for lam, value in so.scattering_symbol_normalized(n, g, [0.0, 0.5, 1.0, 3.0]):
        want = symbol_P(g, lam) / base
        print(f"  lam={lam:3.1f}  ODE={value:.9f}  gamma ratio={want:.9f}  rel={value / want - 1:+.1e}")

res = so.solve_scattering_ode(so.ScatteringProblem(3, 0.5, 0.0))
print(f"\nn=3, gamma=1/2, lam=0: F={res.F:.10f}, H={res.H:.10f}, fit residual {res.fit_residual:.1e}")
