"""
Complex special functions: gamma, classical Jacobi polynomials and their
exceptional (X_m) counterparts.

All functions accept scalars or numpy arrays for the argument ``z`` and
return numpy values of matching shape. Parameters (degrees, alpha, beta)
are scalars.
"""

import math

import numpy as np
from numpy.polynomial import Polynomial

from .errors import ConstructionFailed, DegenerateRecurrence, PoleAt

# Lanczos approximation, g = 7, n = 9
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

POLE_TOL = 1e-13
RECURRENCE_TOL = 1e-12


def _sinpi(z):
    """sin(pi z) with the integer part of Re z removed first."""
    z = np.asarray(z, dtype=complex)
    k = np.round(z.real)
    sign = np.where(np.mod(k, 2) == 0, 1.0, -1.0)
    return sign * np.sin(np.pi * (z - k))


def _lanczos(z):
    # valid for Re z >= 0.5
    z = z - 1.0
    acc = np.full_like(z, _LANCZOS_COEF[0])
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc = acc + c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return np.exp(_HALF_LOG_2PI + (z + 0.5) * np.log(t) - t) * acc


def _pole_mask(z):
    near = np.abs(z - np.round(z.real)) < POLE_TOL * np.maximum(1.0, np.abs(z))
    return near & (np.round(z.real) <= 0)


def gamma_complex(z):
    """Gamma function on the complex plane.

    Lanczos approximation for ``Re z >= 0.5`` and the reflection formula
    below. Relative accuracy is about 1e-14 for ``|z| <= 50``.

    Raises
    ------
    PoleAt
        If any element of ``z`` is a non-positive integer.
    """
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    poles = _pole_mask(z)
    if poles.any():
        raise PoleAt(int(np.round(z[poles][0].real)))
    out = np.empty_like(z)
    right = z.real >= 0.5
    out[right] = _lanczos(z[right])
    left = ~right
    if left.any():
        zl = z[left]
        out[left] = np.pi / (_sinpi(zl) * _lanczos(1.0 - zl))
    return out[0] if scalar else out


def rgamma(z):
    """Reciprocal gamma 1/Gamma(z); entire, exactly zero at the poles."""
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    out = np.empty_like(z)
    right = z.real >= 0.5
    out[right] = 1.0 / _lanczos(z[right])
    left = ~right
    if left.any():
        zl = z[left]
        out[left] = _sinpi(zl) * _lanczos(1.0 - zl) / np.pi
        out[left & _pole_mask(z)] = 0.0
    return out[0] if scalar else out


def _binom(a, k):
    """Generalized binomial coefficient C(a, k) for real a and integer k >= 0."""
    out = 1.0
    for j in range(k):
        out *= (a - j) / (j + 1)
    return out


def jacobi_sum(n, alpha, beta, z):
    """Jacobi polynomial from the explicit finite sum.

    P_n(z) = sum_s C(n+alpha, n-s) C(n+beta, s) ((z-1)/2)^s ((z+1)/2)^(n-s)

    Defined for every real alpha, beta; used as the fallback when the
    three-term recurrence degenerates.
    """
    z = np.asarray(z)
    zm = (z - 1.0) / 2.0
    zp = (z + 1.0) / 2.0
    out = np.zeros(np.shape(z), dtype=np.result_type(z, float))
    for s in range(n + 1):
        out = out + _binom(n + alpha, n - s) * _binom(n + beta, s) * zm**s * zp ** (n - s)
    return out


def jacobi_coefficients(n, alpha, beta):
    """Power-basis coefficients of P_n^(alpha, beta) as a numpy Polynomial."""
    zm = Polynomial([-0.5, 0.5])
    zp = Polynomial([0.5, 0.5])
    out = Polynomial([0.0])
    for s in range(n + 1):
        out = out + _binom(n + alpha, n - s) * _binom(n + beta, s) * zm**s * zp ** (n - s)
    return out


def _checked_sum(n, alpha, beta, z):
    out = jacobi_sum(n, alpha, beta, z)
    if not np.all(np.isfinite(out)):
        raise DegenerateRecurrence(f"n={n}, alpha={alpha}, beta={beta}")
    return out


def jacobi(n, alpha, beta, z):
    """Jacobi polynomial P_n^(alpha, beta)(z) by three-term recurrence.

    Works for arbitrary real alpha, beta and complex z. Outside the
    classical range (alpha or beta <= -1) forward recurrence loses up to
    1e-10 relative accuracy near negative-integer alpha + beta, so the value
    is taken from :func:`jacobi_sum` there, as it is whenever a recurrence
    denominator 2k (k+a+b) (2k+a+b-2) falls below ``RECURRENCE_TOL``.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    z = np.asarray(z)
    dtype = np.result_type(z, float)
    p0 = np.ones(np.shape(z), dtype=dtype)
    if n == 0:
        return p0
    if alpha <= -1.0 or beta <= -1.0:
        return _checked_sum(n, alpha, beta, z)
    ab = alpha + beta
    p1 = (alpha + 1.0) + (ab + 2.0) * (z - 1.0) / 2.0
    for k in range(2, n + 1):
        c = 2 * k + ab
        den = 2.0 * k * (k + ab) * (c - 2.0)
        if abs(den) < RECURRENCE_TOL:
            return _checked_sum(n, alpha, beta, z)
        a1 = (c - 1.0) * (c * (c - 2.0) * z + alpha**2 - beta**2)
        a2 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c
        p0, p1 = p1, (a1 * p1 - a2 * p0) / den
    return p1


def jacobi_derivative(n, alpha, beta, z, order=1):
    """Derivative d^order/dz^order of P_n^(alpha, beta)(z).

    Uses d/dz P_n^(a,b) = (n+a+b+1)/2 P_{n-1}^(a+1,b+1).
    """
    z = np.asarray(z)
    if order > n:
        return np.zeros(np.shape(z), dtype=np.result_type(z, float))
    factor = 1.0
    for j in range(order):
        factor *= (n + alpha + beta + 1.0 + j) / 2.0
    return factor * jacobi(n - order, alpha + order, beta + order, z)


def _leading(n, alpha, beta):
    if n < 0:
        return 0.0
    out = 1.0
    for j in range(n):
        out *= (n + alpha + beta + 1.0 + j) / (2.0 * (j + 1))
    return out


def xm_jacobi(n, m, alpha, beta, z):
    """Exceptional X_m Jacobi polynomial of degree n + m.

    Companion of the denominator polynomial P_m^(-alpha-1, beta-1):

        P^_{n+m} = (1+alpha+beta+n)/2 (z-1) P_m^(-alpha-1,beta-1) P_{n-1}^(alpha+2,beta)
                   + (1+alpha-m) P_m^(-alpha-2,beta) P_n^(alpha+1,beta-1)

    For ``m == 0`` this returns :func:`jacobi` unchanged.

    Raises
    ------
    ConstructionFailed
        If the leading coefficient cancels, so the degree drops below n + m.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    if m == 0:
        return jacobi(n, alpha, beta, z)
    c1 = 0.5 * (1.0 + alpha + beta + n)
    c2 = 1.0 + alpha - m
    lead = (c1 * _leading(m, -alpha - 1.0, beta - 1.0) * _leading(n - 1, alpha + 2.0, beta)
            + c2 * _leading(m, -alpha - 2.0, beta) * _leading(n, alpha + 1.0, beta - 1.0))
    scale = (abs(c1 * _leading(m, -alpha - 1.0, beta - 1.0) * _leading(n - 1, alpha + 2.0, beta))
             + abs(c2 * _leading(m, -alpha - 2.0, beta) * _leading(n, alpha + 1.0, beta - 1.0)))
    if scale == 0.0 or abs(lead) <= 1e-12 * scale:
        raise ConstructionFailed(
            f"X_{m} polynomial of degree {n + m} degenerates for alpha={alpha}, beta={beta}")
    z = np.asarray(z)
    out = c2 * jacobi(m, -alpha - 2.0, beta, z) * jacobi(n, alpha + 1.0, beta - 1.0, z)
    if n >= 1:
        out = out + c1 * (z - 1.0) * jacobi(m, -alpha - 1.0, beta - 1.0, z) * jacobi(
            n - 1, alpha + 2.0, beta, z)
    return out
