"""Double-precision gamma, digamma, Gauss hypergeometric and Legendre functions.

Everything here is vectorised over numpy arrays and self-contained: the
log-gamma core is a Lanczos approximation for small arguments and a Stirling
series for large ones, with the reflection formula covering Re z < 1/2.

The hypergeometric function F(a, b; c; z) accepts complex a, b, real c and
real z < 1.  Regions:

* ``|z| <= 1/2``: the defining power series.
* ``z < -1/2``: Pfaff transformation to ``w = z/(z-1)``, followed by the
  direct series (``w <= 1/2``) or the expansion around 1 (``w > 1/2``).
* ``1/2 < z < 1``: expansion around ``z = 1`` in powers of ``1 - z``.  When
  ``c - a - b`` is an integer the logarithmic form of that expansion is used.

Callers who know ``1 - z`` more accurately than ``z`` itself (kernels near
the origin, Legendre functions at large argument) pass it through the
keyword ``one_minus_z``.

Every branch also accumulates the moduli of the terms it sums.  Their ratio
to the result measures cancellation; :func:`hyp2f1` raises
:class:`~gjms_hyperbolic.errors.PrecisionLossError` rather than return a value
with fewer than about eight correct digits, and
:func:`hyp2f1_with_condition` hands the ratio to the caller.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError, NonConvergenceError, PoleError, PrecisionLossError

__all__ = [
    "log_gamma",
    "gamma",
    "rgamma",
    "log_abs_gamma_sq",
    "log_abs_gamma_sq_increment",
    "abs_gamma_sq",
    "inv_abs_gamma_sq",
    "digamma",
    "log_gamma_ratio",
    "pochhammer",
    "hyp2f1",
    "hyp2f1_with_condition",
    "CONDITION_LIMIT",
    "legendre_p",
    "legendre_p_rho",
]

# Lanczos coefficients for g = 671/128, 14 terms (relative error ~1e-15 on Re z > 0).
_LANCZOS_G = 671.0 / 128.0
_LANCZOS_C0 = 0.999999999999997092
_LANCZOS_COEF = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)
_SQRT_2PI = 2.5066282746310005024
_HALF_LOG_2PI = 0.91893853320467274178
_LOG_PI = 1.1447298858494001741
_EULER_GAMMA = float(np.euler_gamma)

# B_{2k} for k = 1..8.
_BERNOULLI = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6, -3617 / 510)

_STIRLING_MIN_ABS = 10.0

MAX_SERIES_TERMS = 10**6
_TERM_RTOL = 1e-16
_QUIET_TERMS = 3
# |c - a - b - m| below this is treated as the integer m.
_DEGENERATE_TOL = 1e-14
# Within this distance of an integer excess c - a - b the two terms of the
# expansion around z = 1 cancel like 1/distance; the value is interpolated in c.
_NEAR_DEGENERATE = 1e-2
_INTERP_NODES = 16
_DIRECT_MAX = 0.5
_DIRECT_FALLBACK_MAX = 0.97
_CANCELLATION_LIMIT = 1e3
# hyp2f1 refuses results whose cancellation factor exceeds this (about 8 digits left).
CONDITION_LIMIT = 1e8


def _to_array(x, dtype):
    arr = np.asarray(x, dtype=dtype)
    return arr, arr.ndim == 0


def _out(arr, scalar):
    return arr.reshape(())[()] if scalar else arr


def _is_nonpositive_integer(z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    re = z.real
    return (z.imag == 0) & (re <= 0) & (re == np.round(re))


# --------------------------------------------------------------------------
# log-gamma
# --------------------------------------------------------------------------


def _loggamma_right(z: np.ndarray) -> np.ndarray:
    """Principal log Gamma for complex ``z`` with Re z >= 1/2."""
    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    big = np.abs(z) >= _STIRLING_MIN_ABS

    if np.any(big):
        w = z[big]
        inv = 1.0 / w
        inv2 = inv * inv
        corr = np.zeros_like(w)
        power = inv
        for k, b2k in enumerate(_BERNOULLI, start=1):
            corr += b2k / (2 * k * (2 * k - 1)) * power
            power = power * inv2
        out[big] = (w - 0.5) * np.log(w) - w + _HALF_LOG_2PI + corr

    small = ~big
    if np.any(small):
        w = z[small]
        tmp = w + _LANCZOS_G
        ser = np.full_like(w, _LANCZOS_C0)
        for j, coef in enumerate(_LANCZOS_COEF, start=1):
            ser += coef / (w + j)
        out[small] = (w + 0.5) * np.log(tmp) - tmp + np.log(_SQRT_2PI * ser) - np.log(w)
    return out


def _log_sinpi(z: np.ndarray) -> np.ndarray:
    """Principal log of sin(pi z), stable for large |Im z|."""
    z = np.asarray(z, dtype=complex)
    flip = z.imag < 0
    w = np.where(flip, np.conj(z), z)
    m = np.round(w.real)
    r = w - m  # |Re r| <= 1/2, Im r >= 0
    # sin(pi r) = exp(-i pi r) * expm1(2 pi i r) / (2i)
    val = np.pi * r.imag + np.log(np.expm1(2j * np.pi * r) / 2j) - 1j * np.pi * r.real
    val = val + 1j * np.pi * (np.mod(m, 2) != 0)
    imag = np.angle(np.exp(1j * val.imag))
    val = val.real + 1j * imag
    return np.where(flip, np.conj(val), val)


def log_gamma(z):
    """Principal branch of log Gamma(z) for complex ``z``.

    Raises :class:`PoleError` at the nonpositive integers.
    """
    zz, scalar = _to_array(z, complex)
    if np.any(_is_nonpositive_integer(zz)):
        raise PoleError("log_gamma has a pole at nonpositive integers")
    out = np.empty_like(zz)
    right = zz.real >= 0.5
    if np.any(right):
        out[right] = _loggamma_right(zz[right])
    left = ~right
    if np.any(left):
        w = zz[left]
        # branch correction keeps the imaginary part continuous from the positive axis
        branch = np.copysign(2 * np.pi, w.imag) * np.floor(0.5 * w.real + 0.25)
        out[left] = _LOG_PI + 1j * branch - _log_sinpi(w) - _loggamma_right(1.0 - w)
    return _out(out, scalar)


def gamma(z):
    """Gamma(z) through ``exp(log_gamma(z))``; complex result."""
    return np.exp(log_gamma(z))


def rgamma(z):
    """Reciprocal gamma 1/Gamma(z), equal to 0 at the poles of Gamma."""
    zz, scalar = _to_array(z, complex)
    poles = _is_nonpositive_integer(zz)
    out = np.zeros_like(zz)
    ok = ~poles
    if np.any(ok):
        out[ok] = np.exp(-log_gamma(zz[ok]))
    return _out(out, scalar)


# --------------------------------------------------------------------------
# squared gamma moduli on vertical lines
# --------------------------------------------------------------------------


def _log_sin2_plus_sinh2(a: np.ndarray, lam: np.ndarray) -> np.ndarray:
    """log(sin^2(pi a) + sinh^2(pi lam)) without overflow; equals log|sin(pi(a+i lam))|^2."""
    big_l = np.pi * np.abs(lam)
    q = np.exp(-2.0 * big_l)
    one_minus_q = -np.expm1(-2.0 * big_l)
    s = np.sin(np.pi * (a - np.round(a)))
    with np.errstate(divide="ignore"):  # log 0 = -inf only when the true value is below 1e-308
        return 2.0 * big_l - math.log(4.0) + np.log(one_minus_q**2 + 4.0 * s * s * q)


def log_abs_gamma_sq(a, lam):
    """log |Gamma(a + i lam)|^2 for real ``a`` and ``lam`` (broadcast).

    For ``a < 1/2`` the reflection formula is used, which keeps the value
    finite when ``a`` sits on a pole of Gamma but ``lam != 0``.
    """
    a_arr = np.asarray(a, dtype=float)
    l_arr = np.asarray(lam, dtype=float)
    a_b, l_b = np.broadcast_arrays(a_arr, l_arr)
    scalar = a_b.ndim == 0
    a_b = np.atleast_1d(a_b)
    l_b = np.atleast_1d(l_b)
    pole = (l_b == 0) & (a_b <= 0) & (a_b == np.round(a_b))
    if np.any(pole):
        raise PoleError("|Gamma(a + i lam)|^2 has a pole: a is a nonpositive integer and lam = 0")
    out = np.empty(a_b.shape, dtype=float)
    right = a_b >= 0.5
    if np.any(right):
        out[right] = 2.0 * _loggamma_right(a_b[right] + 1j * l_b[right]).real
    left = ~right
    if np.any(left):
        al, ll = a_b[left], l_b[left]
        out[left] = (
            2.0 * _LOG_PI
            - _log_sin2_plus_sinh2(al, ll)
            - 2.0 * _loggamma_right(1.0 - al + 1j * ll).real
        )
    return _out(out, scalar)


# Even-power terms kept in the small-lam expansion, and the lam/distance-to-pole
# ratio below which that expansion replaces the difference of logarithms.
_INCREMENT_TERMS = 10
_INCREMENT_SWITCH = 0.1


def log_abs_gamma_sq_increment(a, lam):
    """log(|Gamma(a + i lam)|^2 / Gamma(a)^2) for real ``a`` off the poles.

    The plain difference of logarithms loses everything once lam^2 is below
    the rounding level of log Gamma(a).  When ``lam`` is small next to the
    distance from ``a`` to the nearest pole the even Taylor series

    ``sum_m (-1)^m 2 psi^(2m-1)(a) lam^(2m) / (2m)!``

    is summed instead (polygamma coefficients from scipy).
    """
    from scipy.special import polygamma

    a_b, l_b = np.broadcast_arrays(np.asarray(a, dtype=float), np.abs(np.asarray(lam, dtype=float)))
    scalar = a_b.ndim == 0
    a_b = np.atleast_1d(a_b).astype(float)
    l_b = np.atleast_1d(l_b).astype(float)
    if np.any(_is_nonpositive_integer(a_b)):
        raise PoleError("log_abs_gamma_sq_increment: Gamma(a) has a pole")
    dist = np.where(a_b > 0, a_b, np.abs(a_b - np.round(a_b)))
    small = l_b <= _INCREMENT_SWITCH * dist
    out = np.empty(a_b.shape)
    if np.any(small):
        aa, y2 = a_b[small], l_b[small] ** 2
        acc = np.zeros_like(aa)
        power = np.ones_like(aa)
        for m in range(1, _INCREMENT_TERMS + 1):
            power = power * y2
            acc += (-1) ** m * 2.0 * polygamma(2 * m - 1, aa) * power / math.factorial(2 * m)
        out[small] = acc
    big = ~small
    if np.any(big):
        out[big] = log_abs_gamma_sq(a_b[big], l_b[big]) - log_abs_gamma_sq(a_b[big], 0.0)
    return _out(out, scalar)


def abs_gamma_sq(a, lam):
    """|Gamma(a + i lam)|^2 for real ``a``, ``lam``; ``inf`` beyond the double range."""
    with np.errstate(over="ignore"):
        return np.exp(log_abs_gamma_sq(a, lam))


def inv_abs_gamma_sq(a, lam):
    """1/|Gamma(a + i lam)|^2, continuous through the poles (value 0 there)."""
    a_arr = np.asarray(a, dtype=float)
    l_arr = np.asarray(lam, dtype=float)
    a_b, l_b = np.broadcast_arrays(a_arr, l_arr)
    scalar = a_b.ndim == 0
    a_b = np.atleast_1d(a_b)
    l_b = np.atleast_1d(l_b)
    pole = (l_b == 0) & (a_b <= 0) & (a_b == np.round(a_b))
    out = np.zeros(a_b.shape, dtype=float)
    ok = ~pole
    if np.any(ok):
        out[ok] = np.exp(-np.atleast_1d(log_abs_gamma_sq(a_b[ok], l_b[ok])))
    return _out(out, scalar)


# --------------------------------------------------------------------------
# digamma and Pochhammer
# --------------------------------------------------------------------------


def _digamma_right(z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    w = z.copy()
    shift = np.maximum(0, np.ceil(_STIRLING_MIN_ABS - w.real)).astype(int)
    for k in range(int(shift.max(initial=0))):
        mask = shift > k
        acc[mask] -= 1.0 / w[mask]
        w[mask] += 1.0
    inv = 1.0 / w
    inv2 = inv * inv
    series = np.zeros_like(w)
    power = inv2
    for k, b2k in enumerate(_BERNOULLI, start=1):
        series += b2k / (2 * k) * power
        power = power * inv2
    return acc + np.log(w) - 0.5 * inv - series


def digamma(z):
    """Digamma function psi(z) = Gamma'(z)/Gamma(z) for complex ``z``."""
    zz, scalar = _to_array(z, complex)
    if np.any(_is_nonpositive_integer(zz)):
        raise PoleError("digamma has a pole at nonpositive integers")
    out = np.empty_like(zz)
    right = zz.real >= 0.5
    if np.any(right):
        out[right] = _digamma_right(zz[right])
    left = ~right
    if np.any(left):
        w = zz[left]
        r = w - np.round(w.real)
        out[left] = _digamma_right(1.0 - w) - np.pi * np.cos(np.pi * r) / np.sin(np.pi * r)
    return _out(out, scalar)


def _log1p_complex(z: np.ndarray) -> np.ndarray:
    """log(1 + z) for complex z, accurate when |z| is tiny."""
    re, im = z.real, z.imag
    return 0.5 * np.log1p(2.0 * re + re * re + im * im) + 1j * np.arctan2(im, 1.0 + re)


def log_gamma_ratio(x, a, b):
    """log Gamma(x + a) - log Gamma(x + b) for large real ``x`` and modest complex ``a``, ``b``.

    Subtracting two log-gamma values of size x log x loses all accuracy once x
    is large; here the leading terms are cancelled analytically, leaving
    ``(a - b) log x`` plus corrections of size O(|a| + |b|).  Requires
    ``x >= 10 + max(|a|, |b|)``.
    """
    xx = np.asarray(x, dtype=float)
    if np.any(xx < _STIRLING_MIN_ABS + max(abs(a), abs(b))):
        raise DomainError("log_gamma_ratio needs x >= 10 + max(|a|, |b|)")
    a = complex(a)
    b = complex(b)
    ua = _log1p_complex(a / xx + 0j)
    ub = _log1p_complex(b / xx + 0j)
    out = (a - b) * np.log(xx) + (xx + a - 0.5) * ua - (xx + b - 0.5) * ub - (a - b)
    wa = xx + a
    wb = xx + b
    inv_a2 = 1.0 / (wa * wa)
    inv_b2 = 1.0 / (wb * wb)
    pa = 1.0 / wa
    pb = 1.0 / wb
    for k, b2k in enumerate(_BERNOULLI, start=1):
        out = out + b2k / (2 * k * (2 * k - 1)) * (pa - pb)
        pa = pa * inv_a2
        pb = pb * inv_b2
    return out


def pochhammer(a, k: int):
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1."""
    if int(k) != k or k < 0:
        raise DomainError("pochhammer needs a nonnegative integer k")
    result = np.ones_like(np.asarray(a) * 1.0)
    for j in range(int(k)):
        result = result * (a + j)
    return result[()] if np.ndim(result) == 0 else result


# --------------------------------------------------------------------------
# Gauss hypergeometric function
# --------------------------------------------------------------------------


def _series(a, b, c, z, with_mass=False):
    """Direct Gauss series, vectorised over ``z``; assumes convergence.

    With ``with_mass`` the sum of term moduli is returned as well, which
    measures how much cancellation went into the result.
    """
    z = np.asarray(z, dtype=complex)
    total = np.ones_like(z)
    term = np.ones_like(z)
    mass = np.ones(z.shape, dtype=float)
    quiet = np.zeros(z.shape, dtype=int)
    for k in range(MAX_SERIES_TERMS):
        term = term * ((a + k) * (b + k) / ((c + k) * (k + 1.0))) * z
        total = total + term
        mag = np.abs(term)
        mass = mass + mag
        small = mag <= _TERM_RTOL * np.abs(total)
        # overflowing terms end the sum; the infinite mass marks the value as useless
        blown = ~np.isfinite(mag)
        quiet = np.where(small | blown, quiet + 1, 0)
        if np.all(quiet >= _QUIET_TERMS):
            total = np.where(np.isfinite(mass), total, np.nan)
            return (total, mass) if with_mass else total
    raise NonConvergenceError("hypergeometric series exceeded its term budget")


def _terminates(p) -> bool:
    return bool(_is_nonpositive_integer(p))


def _log_expansion(a, b, m: int, t: np.ndarray):
    """F(a, b; a+b+m; 1-t) for an integer m >= 0 (logarithmic case), 0 < t <= 1/2.

    Returns the value and the summed moduli of its contributions.
    """
    t = np.asarray(t, dtype=float)
    c = a + b + m
    gc = gamma(c)
    head = np.zeros(t.shape, dtype=complex)
    if m >= 1:
        coef = gamma(m) * gc * rgamma(a + m) * rgamma(b + m)
        term = np.ones(t.shape, dtype=complex)
        acc = np.ones(t.shape, dtype=complex)
        for j in range(m - 1):
            term = term * ((a + j) * (b + j) / ((j + 1.0) * (1.0 - m + j))) * t
            acc = acc + term
        head = coef * acc

    tail_coef = -((-t) ** m) * gc * rgamma(a) * rgamma(b)
    log_t = np.log(t)
    psi_a = digamma(a + m)
    psi_b = digamma(b + m)
    psi_1 = -_EULER_GAMMA
    psi_m1 = -_EULER_GAMMA + sum(1.0 / j for j in range(1, m + 1))
    coeff = np.full(t.shape, 1.0 / math.factorial(m), dtype=complex)
    total = coeff * (log_t - psi_1 - psi_m1 + psi_a + psi_b)
    mass = np.abs(total)
    quiet = np.zeros(t.shape, dtype=int)
    for n in range(MAX_SERIES_TERMS):
        coeff = coeff * ((a + m + n) * (b + m + n) / ((n + 1.0) * (n + m + 1.0))) * t
        psi_a = psi_a + 1.0 / (a + m + n)
        psi_b = psi_b + 1.0 / (b + m + n)
        psi_1 = psi_1 + 1.0 / (n + 1)
        psi_m1 = psi_m1 + 1.0 / (n + m + 1)
        term = coeff * (log_t - psi_1 - psi_m1 + psi_a + psi_b)
        total = total + term
        mag = np.abs(term)
        mass = mass + mag
        small = mag <= _TERM_RTOL * np.abs(total)
        quiet = np.where(small, quiet + 1, 0)
        if np.all(quiet >= _QUIET_TERMS):
            return head + tail_coef * total, np.abs(head) + np.abs(tail_coef) * mass
    raise NonConvergenceError("logarithmic hypergeometric expansion exceeded its term budget")


def _exp_log_ratio(log_num: complex, den: tuple) -> complex:
    """exp(log_num) / prod Gamma(d), zero when some d is a pole of Gamma."""
    if any(bool(_is_nonpositive_integer(d)) for d in den):
        return 0j
    return complex(np.exp(log_num - sum(log_gamma(d) for d in den)))


def _near_one(a, b, c, t: np.ndarray):
    """F(a, b; c; 1-t) for 0 < t <= 1/2 via the expansion around z = 1.

    Returns the value and the summed moduli of its contributions.
    """
    t = np.asarray(t, dtype=float)
    m = c - a - b
    m_int = round(m.real)
    delta = m - m_int
    if _DEGENERATE_TOL <= abs(delta) < _NEAR_DEGENERATE:
        return _near_one_interpolated(a, b, c, t, delta)
    return _near_one_direct(a, b, c, t)


def _near_one_interpolated(a, b, c, t: np.ndarray, delta):
    """Chebyshev interpolation in c across a near-integer excess.

    F is analytic in c away from the nonpositive integers, so values at nodes
    c + (h x_j - delta), which keep the excess at least ~0.1 h from the
    integer, interpolate the target with error ~ (h / dist)^N.  The factor
    t^excess oscillates on the scale 1/|ln t|, which also caps h.
    """
    dist = abs(c) if c.real > 0 else 1.0
    h = min(0.25, dist / 8.0, 1.0 / float(np.max(np.abs(np.log(t)))))
    k = np.arange(_INTERP_NODES)
    x = np.cos((2 * k + 1) * np.pi / (2 * _INTERP_NODES))
    weights = (-1.0) ** k * np.sin((2 * k + 1) * np.pi / (2 * _INTERP_NODES))
    target = delta / h
    coeff = weights / (target - x)
    lagrange = coeff / coeff.sum()
    out = np.zeros(t.shape, dtype=complex)
    mass = np.zeros(t.shape, dtype=float)
    for lj, xj in zip(lagrange, x):
        v, mj = _near_one_direct(a, b, c + (h * xj - delta), t)
        out = out + lj * v
        mass = np.maximum(mass, mj)
    return out, mass * float(np.sum(np.abs(lagrange)))


def _near_one_direct(a, b, c, t: np.ndarray):
    t = np.asarray(t, dtype=float)
    m = c - a - b
    m_int = round(m.real)
    if abs(m - m_int) < _DEGENERATE_TOL:
        if m_int >= 0:
            return _log_expansion(a, b, m_int, t)
        # Euler: F(a,b;c;z) = (1-z)^m F(c-a, c-b; c; z), new excess -m > 0
        val, mass = _log_expansion(c - a, c - b, -m_int, t)
        scale = t**m_int
        return scale * val, scale * mass
    # in log form: Gamma(m) alone under/overflows for |Im m| of a few hundred
    lgc = log_gamma(c)
    first = _exp_log_ratio(lgc + log_gamma(m), (c - a, c - b))
    second = _exp_log_ratio(lgc + log_gamma(-m), (a, b))
    s1, m1 = _series(a, b, 1.0 - m, t, with_mass=True)
    out = first * s1
    mass = np.abs(first) * m1
    if second != 0:
        pw = np.exp(m * np.log(t))
        s2, m2 = _series(c - a, c - b, m + 1.0, t, with_mass=True)
        out = out + second * pw * s2
        mass = mass + np.abs(second * pw) * m2
    return out, mass


def _unit_interval(a, b, c, u: np.ndarray, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """F(a, b; c; u) for 0 <= u < 1, where ``t`` is an accurate 1 - u; also returns the term mass."""
    out = np.empty(u.shape, dtype=complex)
    mass = np.empty(u.shape, dtype=float)
    direct = u <= _DIRECT_MAX
    if np.any(direct):
        out[direct], mass[direct] = _series(a, b, c, u[direct], with_mass=True)
    near = ~direct
    if np.any(near):
        val, m = _near_one(a, b, c, t[near])
        # Cancellation between the two branches of the expansion around 1 is
        # severe when a and b have large imaginary parts of opposite sign; the
        # direct series is still affordable there while u is not too close to 1.
        redo = (m > _CANCELLATION_LIMIT * np.abs(val)) & (u[near] <= _DIRECT_FALLBACK_MAX)
        if np.any(redo):
            v2, m2 = _series(a, b, c, u[near][redo], with_mass=True)
            better = m2 < m[redo]
            idx = np.flatnonzero(redo)[better]
            val[idx] = v2[better]
            m[idx] = m2[better]
        out[near] = val
        mass[near] = m
    return out, mass


def _hyp2f1_core(a: complex, b: complex, c: float, zz: np.ndarray, omz: np.ndarray):
    """Value and summed term moduli of F(a, b; c; z) on a 1-d array of real z <= 1."""
    out = np.empty(zz.shape, dtype=complex)
    mass = np.zeros(zz.shape, dtype=float)
    at_one = omz == 0
    if np.any(at_one):
        m = c - a - b
        if m.real <= 0:
            raise DomainError("F(a,b;c;1) diverges unless Re(c-a-b) > 0")
        out[at_one] = gamma(c) * gamma(m) * rgamma(c - a) * rgamma(c - b)
        mass[at_one] = np.abs(out[at_one])

    rest = ~at_one
    if _terminates(a) or _terminates(b):
        out[rest], mass[rest] = _series(a, b, c, zz[rest], with_mass=True)
        return out, mass

    middle = rest & (np.abs(zz) <= _DIRECT_MAX)
    if np.any(middle):
        out[middle], mass[middle] = _series(a, b, c, zz[middle], with_mass=True)

    upper = rest & (zz > _DIRECT_MAX)
    if np.any(upper):
        out[upper], mass[upper] = _unit_interval(a, b, c, zz[upper], omz[upper])

    lower = rest & (zz < -_DIRECT_MAX)
    if np.any(lower):
        # Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; w), w = z/(z-1), 1-w = 1/(1-z)
        om = omz[lower]
        w = -zz[lower] / om
        t = 1.0 / om
        pref = np.exp(-a * np.log(om))
        val, m = _unit_interval(a, c - b, c, w, t)
        out[lower] = pref * val
        mass[lower] = np.abs(pref) * m
    return out, mass


def _prepare(a, b, c, z, one_minus_z):
    a = complex(a)
    b = complex(b)
    c = float(c)
    if c <= 0 and c == round(c):
        raise PoleError("hyp2f1: c must not be zero or a negative integer")
    zz, scalar = _to_array(z, float)
    zz = np.atleast_1d(zz)
    if one_minus_z is None:
        omz = 1.0 - zz
    else:
        omz = np.atleast_1d(np.asarray(one_minus_z, dtype=float)) * np.ones_like(zz)
    if np.any(omz < 0) or np.any(~np.isfinite(zz)):
        raise DomainError("hyp2f1 is implemented for real z <= 1")
    return a, b, c, zz, omz, scalar


def _condition(out: np.ndarray, mass: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore"):
        cond = mass / np.abs(out)
    cond = np.where(mass == 0, 1.0, np.where(np.isfinite(cond), np.maximum(cond, 1.0), np.inf))
    return np.where(np.isfinite(out), cond, np.inf)


def hyp2f1_with_condition(a, b, c, z, *, one_minus_z=None):
    """F(a, b; c; z) together with a cancellation factor.

    The factor is the summed modulus of every term that went into the value,
    divided by the modulus of the value.  The relative error of the result is
    roughly ``factor * 1e-16``.  Arguments are as in :func:`hyp2f1`.
    """
    a, b, c, zz, omz, scalar = _prepare(a, b, c, z, one_minus_z)
    out, mass = _hyp2f1_core(a, b, c, zz, omz)
    return _out(out, scalar), _out(_condition(out, mass), scalar)


def hyp2f1(a, b, c, z, *, one_minus_z=None):
    """Gauss hypergeometric function F(a, b; c; z).

    Parameters
    ----------
    a, b : complex
    c : float
        Must not be zero or a negative integer.
    z : float or array
        Real, ``z < 1``; ``z == 1`` is accepted when ``Re(c - a - b) > 0``.
    one_minus_z : float or array, optional
        An accurate value of ``1 - z``.  Used in place of ``1 - z`` when the
        argument is close to 1 or large and negative.

    Returns
    -------
    complex or ndarray of complex

    Raises
    ------
    PrecisionLossError
        When cancellation among the series terms leaves fewer than about eight
        correct digits (large imaginary parts of ``a`` and ``b`` combined with
        a large ``|z|``).  :func:`hyp2f1_with_condition` returns the value and
        the cancellation factor instead of raising.
    """
    a, b, c, zz, omz, scalar = _prepare(a, b, c, z, one_minus_z)
    out, mass = _hyp2f1_core(a, b, c, zz, omz)
    cond = _condition(out, mass)
    bad = cond > CONDITION_LIMIT
    if np.any(bad):
        worst = float(np.max(cond[bad]))
        raise PrecisionLossError(f"hyp2f1: cancellation factor {worst:.1e} exceeds {CONDITION_LIMIT:.0e}")
    return _out(out, scalar)


# --------------------------------------------------------------------------
# associated Legendre functions of the first kind on (1, infinity)
# --------------------------------------------------------------------------


def _legendre_core(mu: float, nu: complex, xm1, xp1):
    """P^mu_nu(x) given x-1 and x+1 separately (both > 0)."""
    if (1.0 - mu) <= 0 and (1.0 - mu) == round(1.0 - mu):
        raise PoleError("legendre_p: Gamma(1 - mu) has a pole")
    pref = rgamma(1.0 - mu).real * np.power(xp1 / xm1, mu / 2.0)
    f = hyp2f1(-nu, nu + 1.0, 1.0 - mu, -xm1 / 2.0, one_minus_z=xp1 / 2.0)
    return pref * f


def legendre_p(mu, nu, x):
    """Associated Legendre function of the first kind P^mu_nu(x) for real x > 1.

    Defined as ``((x+1)/(x-1))^{mu/2} F(-nu, nu+1; 1-mu; (1-x)/2) / Gamma(1-mu)``.
    """
    xx, scalar = _to_array(x, float)
    if np.any(xx <= 1) or np.any(~np.isfinite(xx)):
        raise DomainError("legendre_p needs x > 1")
    return _out(np.asarray(_legendre_core(float(mu), complex(nu), xx - 1.0, xx + 1.0)), scalar)


def legendre_p_rho(mu, nu, rho):
    """P^mu_nu(cosh rho) with the half-angle forms of cosh rho -/+ 1 (accurate for small rho)."""
    rr, scalar = _to_array(rho, float)
    if np.any(rr <= 0) or np.any(~np.isfinite(rr)):
        raise DomainError("legendre_p_rho needs rho > 0")
    xm1 = 2.0 * np.sinh(rr / 2.0) ** 2
    xp1 = 2.0 * np.cosh(rr / 2.0) ** 2
    return _out(np.asarray(_legendre_core(float(mu), complex(nu), xm1, xp1)), scalar)
