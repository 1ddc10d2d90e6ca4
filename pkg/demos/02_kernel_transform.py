"""The Green kernel K_{nu,gamma} and its Helgason-Fourier transform.

The transform is computed by quadrature against the spherical function and
compared with the gamma ratio |Gamma(nu + i lam)|^2 / |Gamma(nu + gamma + i lam)|^2.
"""

import math

import numpy as np

from gjms_hyperbolic import green_kernels as gk
from gjms_hyperbolic import helgason_fourier as hf

params = gk.KernelParams(nu=0.5, gamma=1.0, n=3)
print(f"kernel coefficient for (nu, gamma, n) = (1/2, 1, 3): {gk.kernel_coeff(params):.12f}  (1/(16 pi) = {1 / (16 * math.pi):.12f})")

rho = np.array([1e-3, 0.1, 1.0, 5.0, 20.0])
print("\nK and its two regimes: rho^(2 gamma - n) near 0, exp(-(n - 1 + 2 nu) rho / 2) far out")
small = gk.kernel_K_small_rho_constant(params)
for r, k in zip(rho, gk.kernel_K(params, rho)):
    print(f"  rho={r:7.3f}  K={k:.6e}  K / (c rho^-1)={k / (small / r):.6f}  K e^(3 rho/2)={k * math.exp(1.5 * r):.6e}")

print("\nspherical function for n = 3 against sin(lam rho) / (lam sinh rho)")
for lam in (0.5, 10.0, 200.0):
    r = 1.7
    print(f"  lam={lam:6.1f}  phi={hf.spherical_fn(lam, 3, r):+.12e}  closed={math.sin(lam * r) / (lam * math.sinh(r)):+.12e}")

quad = hf.QuadratureSpec.for_kernel(params.nu, params.n)
print("\ntransform of K: quadrature vs gamma ratio")
for lam in (0.0, 1.0, 4.0, 16.0):
    res = hf.radial_hf_transform(hf.kernel_K_radial(params), lam, params.n, quad)
    closed = float(hf.hf_K_closed(params.nu, params.gamma, lam))
    print(f"  lam={lam:5.1f}  quadrature={res.value:.12e}  closed={closed:.12e}  rel={res.value / closed - 1:+.1e}")
