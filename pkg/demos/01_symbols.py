"""Spectral symbols of the fractional operators on hyperbolic space.

Both symbols are gamma ratios in the frequency lam.  At integer order they
collapse to the same polynomial, and in general they differ by an explicit
nonnegative term.
"""

import numpy as np

from gjms_hyperbolic import spectral_symbols as ss

lam = np.array([0.0, 0.5, 1.0, 2.0, 5.0])

print("order 2: both symbols equal (1/4 + lam^2)(9/4 + lam^2)")
for x, p, pt in zip(lam, ss.symbol_P(2, lam), ss.symbol_Ptilde(2, lam)):
    print(f"  lam={x:4.1f}  P={p:12.6f}  Ptilde={pt:12.6f}  product={(0.25 + x * x) * (2.25 + x * x):12.6f}")

g = 1.3
print(f"\norder {g}: P = Ptilde + sin(pi g)/pi |Gamma(g + 1/2 + i lam)|^2")
for x in lam:
    p, pt, extra = ss.decomposition_terms(g, x)
    print(f"  lam={x:4.1f}  P={p:10.6f}  Ptilde + extra={pt + extra:10.6f}  residual={ss.decomposition_relative_residual(g, x):+.1e}")

print("\nbottom of the spectrum (value at lam = 0)")
for g in (0.5, 1.0, 1.5, 2.0, 2.5):
    print(f"  gamma={g:3.1f}  P(0)={ss.bottom_constant_P(g):.6f}  Ptilde(0)={ss.bottom_constant_Ptilde(g):.6f}")

print("\nlargest zeta in P(n/2, lam) - P(n/2, 0) >= lam^2 (lam^2 + zeta)^(n/2 - 1), odd n")
for n in (3, 5, 7):
    print(f"  n={n}  P: {ss.find_max_zeta(n, 'P'):.5f}   Ptilde: {ss.find_max_zeta(n, 'Ptilde'):.5f}")
