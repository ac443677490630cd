"""Volume of the unit n-ball and the inequalities built on it.

All arithmetic is in log space: Omega_n underflows long before n = 400.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special as _sp

from .errors import OutOfDomain, Overflow

_LOG_PI = math.log(math.pi)
_MAX_LOG = math.log(np.finfo(float).max)
ORACLE_MAX_N = 300


def _ret(out):
    return float(out) if np.ndim(out) == 0 else out


def _ints(value, name, minimum):
    arr = np.asarray(value)
    if not np.all(arr == np.floor(arr)):
        raise OutOfDomain(f"{name} must be an integer")
    if (arr < minimum).any():
        raise OutOfDomain(f"{name} must be >= {minimum}")
    return arr.astype(float)


def log_omega(n):
    """log Omega_n = (n/2) log pi - log Gamma(n/2 + 1), n >= 0 real."""
    arr = np.asarray(n, dtype=float)
    if np.isnan(arr).any() or (arr < 0).any():
        raise OutOfDomain("log_omega requires n >= 0")
    return _ret(0.5 * arr * _LOG_PI - _sp.gammaln(0.5 * arr + 1.0))


def omega(n):
    return _ret(np.exp(log_omega(n)))


def omega_product_oracle(n: int) -> float:
    """log Omega_n from the Wallis product of sine-power integrals.

    I_0 = pi, I_1 = 2, I_j = I_{j-2} (j - 1)/j and Omega_n = prod_{j=1}^n I_j.
    Independent of the Gamma function; used to cross-check ``log_omega``.
    """
    if int(n) != n or not 0 <= n <= ORACLE_MAX_N:
        raise OutOfDomain(f"omega_product_oracle requires integer 0 <= n <= {ORACLE_MAX_N}")
    integrals = [math.pi, 2.0]
    for j in range(2, int(n) + 1):
        integrals.append(integrals[j - 2] * (j - 1) / j)
    return math.fsum(math.log(v) for v in integrals[1 : int(n) + 1])


def ball_ineq_1(n):
    """log Omega_{2n-1} - (log Omega_{2n} + log Omega_{2n-2})/2, n >= 1."""
    n = _ints(n, "n", 1)
    return _ret(log_omega(2 * n - 1) - 0.5 * (log_omega(2 * n) + log_omega(2 * n - 2)))


def ball_ineq_2(n, k):
    """(log Omega_{k(n-1)} - log Omega_{kn}) - k (log Omega_{n-1} - log Omega_n)."""
    n = _ints(n, "n", 1)
    k = _ints(k, "k", 1)
    lhs = log_omega(k * (n - 1)) - log_omega(k * n)
    rhs = k * (log_omega(n - 1) - log_omega(n))
    return _ret(lhs - rhs)


def ball_log_convexity(n):
    """log Omega_n - (log Omega_{n-1} + log Omega_{n+1})/2, n >= 1.

    Non-negative exactly when n -> log(1/Omega_n) is midpoint convex at n.
    """
    arr = np.asarray(n, dtype=float)
    if (arr < 1).any():
        raise OutOfDomain("ball_log_convexity requires n >= 1")
    return _ret(log_omega(arr) - 0.5 * (log_omega(arr - 1) + log_omega(arr + 1)))


def grunbaum_margin(r, s):
    """1 + 1/Omega_{r+s} - 1/Omega_r - 1/Omega_s for real r, s >= 0.

    This is (1 + Omega_{r+s})/Omega_{r+s} - (Omega_r + Omega_s)/(Omega_r Omega_s).
    """
    r = np.asarray(r, dtype=float)
    s = np.asarray(s, dtype=float)
    big = -log_omega(r + s)
    if (np.asarray(big) > _MAX_LOG).any():
        raise Overflow("1/Omega_{r+s} exceeds the double range")
    # 1/Omega_{r+s} dominates for large r + s; pair terms of like size
    out = (1.0 - np.exp(-log_omega(r))) + (np.exp(big) - np.exp(-log_omega(s)))
    return _ret(out)


def grunbaum_ball(r, s):
    """Margin of the Grunbaum-type ball inequality for integers r, s >= 2."""
    r = _ints(r, "r", 2)
    s = _ints(s, "s", 2)
    return grunbaum_margin(r, s)


def log_ball_factor(x):
    """log(x Gamma(x) / pi^x) for x > 1/2; convex because psi'(x) > 1/x^2."""
    arr = np.asarray(x, dtype=float)
    if (arr <= 0.5).any():
        raise OutOfDomain("log_ball_factor requires x > 1/2")
    return _ret(np.log(arr) + _sp.gammaln(arr) - arr * _LOG_PI)
