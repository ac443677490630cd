"""Gamma-family kernels on real arguments.

Every function accepts a Python float or a numpy array and returns the same
shape back (floats for scalar input).  The digamma family is evaluated by
shifting the argument up to ``SHIFT`` with the recurrence and then summing the
asymptotic Bernoulli series; ``log_gamma`` is delegated to
``scipy.special.gammaln``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

import numpy as np
from scipy import special as _sp

from .errors import NotConverged, OutOfDomain, Overflow, PoleOrNonpositive

EULER_GAMMA = 0.57721566490153286060651209008240243
LN2 = math.log(2.0)
PI = math.pi

SHIFT = 10.0

# B_2, B_4, ..., B_14
_BERNOULLI = [
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
]
# coefficients of z**n, z = 1/x**2, in the tails of psi, psi' and psi''
_PSI_TAIL = [float(b / (2 * n)) for n, b in enumerate(_BERNOULLI, start=1)]
_PSI1_TAIL = [float(b) for b in _BERNOULLI]
_PSI2_TAIL = [float((2 * n + 1) * b) for n, b in enumerate(_BERNOULLI, start=1)]

_MAX_LOG = math.log(np.finfo(float).max)


def _prep(x, name: str):
    arr = np.asarray(x, dtype=float)
    if np.isnan(arr).any():
        raise OutOfDomain(f"{name}: NaN argument")
    return arr, arr.ndim == 0


def _out(arr, scalar: bool):
    return float(arr) if scalar else arr


def _require_positive(arr, name: str) -> None:
    if (arr <= 0).any():
        bad = arr[arr <= 0].flat[0] if arr.ndim else float(arr)
        raise PoleOrNonpositive(f"{name} requires x > 0, got {bad!r}")


def _horner(coeffs, z):
    acc = np.zeros_like(z)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _shift_up(arr):
    """Return ``(y, steps)``: y = arr + steps with y >= SHIFT."""
    steps = np.maximum(np.ceil(SHIFT - arr), 0.0)
    return arr + steps, steps


def log_gamma(x):
    """ln Gamma(x) for x > 0."""
    arr, scalar = _prep(x, "log_gamma")
    _require_positive(arr, "log_gamma")
    return _out(_sp.gammaln(arr), scalar)


def _sinpi(x):
    # reduce modulo 2 first so large |x| keeps its fractional part exact
    y = np.mod(x, 2.0)
    return np.sin(np.pi * y)


def log_abs_gamma_signed(x):
    """Return ``(sign, log|Gamma(x)|)`` for any real x that is not a pole.

    Arguments below 1/2 go through the reflection formula
    Gamma(x) Gamma(1 - x) = pi / sin(pi x).
    """
    arr, scalar = _prep(x, "log_abs_gamma_signed")
    poles = (arr <= 0) & (arr == np.floor(arr))
    if poles.any():
        raise PoleOrNonpositive(f"Gamma has a pole at {arr[poles].flat[0]!r}")
    low = arr < 0.5
    hi_arg = np.where(low, 1.0, arr)
    lo_arg = np.where(low, arr, 0.25)
    s = _sinpi(lo_arg)
    logabs = np.where(
        low,
        math.log(PI) - np.log(np.abs(s)) - _sp.gammaln(1.0 - lo_arg),
        _sp.gammaln(hi_arg),
    )
    sign = np.where(low, np.sign(s), 1.0)
    if scalar:
        return int(sign), float(logabs)
    return sign.astype(int), logabs


def gamma(x):
    """Gamma(x) on the real line minus the poles."""
    sign, logabs = log_abs_gamma_signed(x)
    if np.any(np.asarray(logabs) > _MAX_LOG):
        raise Overflow(f"Gamma({x!r}) exceeds the double range")
    if isinstance(logabs, float):
        return sign * math.exp(logabs)
    return sign * np.exp(logabs)


def digamma(x):
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0."""
    arr, scalar = _prep(x, "digamma")
    _require_positive(arr, "digamma")
    y, steps = _shift_up(arr)
    z = 1.0 / (y * y)
    total = np.log(y)
    comp = np.zeros_like(y)
    # Neumaier summation: the recurrence terms nearly cancel log(y) near the root
    terms = [-0.5 / y - z * _horner(_PSI_TAIL, z)]
    terms += [np.where(k < steps, -1.0 / (arr + k), 0.0) for k in range(int(steps.max(initial=0.0)))]
    for t in terms:
        s = total + t
        comp += np.where(np.abs(total) >= np.abs(t), (total - s) + t, (t - s) + total)
        total = s
    return _out(total + comp, scalar)


def trigamma(x):
    """psi'(x) for x > 0."""
    arr, scalar = _prep(x, "trigamma")
    _require_positive(arr, "trigamma")
    y, steps = _shift_up(arr)
    head = np.zeros_like(y)
    for k in range(int(steps.max(initial=0.0))):
        t = arr + k
        head += np.where(k < steps, 1.0 / (t * t), 0.0)
    z = 1.0 / (y * y)
    val = 1.0 / y + 0.5 * z + z / y * _horner(_PSI1_TAIL, z)
    # add the small asymptotic part to the large recurrence part last
    return _out(head + val, scalar)


def tetragamma(x):
    """psi''(x) for x > 0."""
    arr, scalar = _prep(x, "tetragamma")
    _require_positive(arr, "tetragamma")
    y, steps = _shift_up(arr)
    head = np.zeros_like(y)
    for k in range(int(steps.max(initial=0.0))):
        t = arr + k
        head -= np.where(k < steps, 2.0 / (t * t * t), 0.0)
    z = 1.0 / (y * y)
    val = -z - z / y - z * z * _horner(_PSI2_TAIL, z)
    return _out(head + val, scalar)


@cache
def psi_root() -> float:
    """The positive zero c = 1.46163... of digamma.

    Bisection on [1.4, 1.5] down to width 1e-15, then one Newton step.
    """
    lo, hi = 1.4, 1.5
    if not (digamma(lo) < 0.0 < digamma(hi)):
        raise NotConverged("digamma root is not bracketed by [1.4, 1.5]")
    for _ in range(200):
        if hi - lo <= 1e-15:
            break
        mid = 0.5 * (lo + hi)
        if digamma(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    else:
        raise NotConverged("bisection budget exhausted")
    c = 0.5 * (lo + hi)
    return c - digamma(c) / trigamma(c)


@dataclass(frozen=True)
class Constants:
    euler_gamma: float
    psi_root_c: float
    ln2: float
    pi: float


def constants() -> Constants:
    return Constants(EULER_GAMMA, psi_root(), LN2, PI)


def sth_ratio(a, x):
    """Gamma(1 + x)**a / Gamma(1 - a x) on the positive branch 0 <= x < 1/a."""
    a_arr, s1 = _prep(a, "sth_ratio")
    x_arr, s2 = _prep(x, "sth_ratio")
    if (a_arr < 1).any():
        raise OutOfDomain("sth_ratio requires a >= 1")
    if (x_arr < 0).any() or (a_arr * x_arr >= 1).any():
        raise OutOfDomain("sth_ratio requires 0 <= x < 1/a")
    logv = a_arr * _sp.gammaln(1.0 + x_arr) - _sp.gammaln(1.0 - a_arr * x_arr)
    if (np.abs(logv) > _MAX_LOG).any():
        raise Overflow("sth_ratio magnitude outside the double range")
    return _out(np.exp(logv), s1 and s2)


# hyperbolic helpers


def tanh(x):
    arr, scalar = _prep(x, "tanh")
    return _out(np.tanh(arr), scalar)


def cosh(x):
    arr, scalar = _prep(x, "cosh")
    return _out(np.cosh(arr), scalar)


def sinh(x):
    arr, scalar = _prep(x, "sinh")
    return _out(np.sinh(arr), scalar)


def artanh(x):
    arr, scalar = _prep(x, "artanh")
    if (np.abs(arr) >= 1).any():
        raise OutOfDomain("artanh requires |x| < 1")
    return _out(np.arctanh(arr), scalar)


def arcosh(x):
    arr, scalar = _prep(x, "arcosh")
    if (arr < 1).any():
        raise OutOfDomain("arcosh requires x >= 1")
    return _out(np.arccosh(arr), scalar)


def cosh_half_sum(r, s):
    """cosh((arcosh r + arcosh s)/2) in closed form, for r, s >= 1."""
    r_arr, s1 = _prep(r, "cosh_half_sum")
    s_arr, s2 = _prep(s, "cosh_half_sum")
    if (r_arr < 1).any() or (s_arr < 1).any():
        raise OutOfDomain("cosh_half_sum requires r >= 1 and s >= 1")
    inner = 1.0 + r_arr * s_arr + np.sqrt((r_arr * r_arr - 1.0) * (s_arr * s_arr - 1.0))
    return _out(np.sqrt(0.5 * inner), s1 and s2)
