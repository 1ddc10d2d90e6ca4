"""Sharp Euclidean constants and the duality that links them."""

import math

from gjms_hyperbolic import sharp_constants as sc

print(f"S_(3,1)       = {sc.sobolev_constant(3, 1.0):.15f}   3 (pi/2)^(4/3) = {3 * (math.pi / 2) ** (4 / 3):.15f}")
print(f"beta_0(3,3/2) = {sc.adams_constant(3, 1.5):.12f}   6 pi^2 = {6 * math.pi**2:.12f}")
print(f"beta_0(4,2)   = {sc.adams_constant(4, 2.0):.12f}   32 pi^2 = {32 * math.pi**2:.12f}")

print("\nduality between the Sobolev and HLS constants, relative residual")
for n, g in [(3, 1.0), (5, 2.3), (7, 3.0)]:
    print(f"  n={n} gamma={g}: {sc.duality_relative_residual(n, g):+.1e}")

print("\nS_(3,gamma) rises, peaks, then vanishes as gamma -> 3/2 (Gamma((n-2g)/2) is in the denominator)")
for g in (0.25, 0.75, 1.0, 1.12, 1.3, 1.45, 1.499):
    print(f"  gamma={g:5.3f}  S={sc.sobolev_constant(3, g):.6f}")
