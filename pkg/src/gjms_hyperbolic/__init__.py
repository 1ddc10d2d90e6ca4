"""Spectral symbols, Green's kernels and sharp constants for fractional conformal operators on hyperbolic space.

Modules:

* :mod:`~gjms_hyperbolic.special_functions`: gamma, hypergeometric and Legendre functions.
* :mod:`~gjms_hyperbolic.spectral_symbols`: multipliers of P_gamma and its companion, and gamma-ratio inequality margins.
* :mod:`~gjms_hyperbolic.green_kernels`: hyperbolic Green's kernels and Euclidean fractional Green's functions.
* :mod:`~gjms_hyperbolic.helgason_fourier`: radial Helgason-Fourier transform, closed forms and series.
* :mod:`~gjms_hyperbolic.sharp_constants`: Sobolev, Hardy-Littlewood-Sobolev and Adams constants.
* :mod:`~gjms_hyperbolic.scattering_ode`: the multiplier recovered from the scattering ODE.
* :mod:`~gjms_hyperbolic.verify`: verification suites and the ``gjms-verify`` command.
"""

from . import errors, green_kernels, helgason_fourier, scattering_ode, sharp_constants, special_functions, spectral_symbols

__version__ = "0.1.0"

__all__ = [
    "errors",
    "green_kernels",
    "helgason_fourier",
    "scattering_ode",
    "sharp_constants",
    "special_functions",
    "spectral_symbols",
    "__version__",
]
