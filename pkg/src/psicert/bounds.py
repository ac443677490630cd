"""Elementary digamma bounds and their margins.

A margin is ``greater side - lesser side``, so a positive value means the
bound holds at that point.  Margins are raw differences; any normalisation is
left to the verifier.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from .errors import PoleOrNonpositive
from .specfun import digamma, tetragamma, trigamma


def _positive(x, name):
    arr = np.asarray(x, dtype=float)
    if (arr <= 0).any():
        raise PoleOrNonpositive(f"{name} requires x > 0")
    return arr


def psi_lower(x):
    """log x - 1/x, a lower bound for digamma."""
    arr = _positive(x, "psi_lower")
    out = np.log(arr) - 1.0 / arr
    return float(out) if out.ndim == 0 else out


def psi_upper(x):
    """log x - 1/(2x), an upper bound for digamma."""
    arr = _positive(x, "psi_upper")
    out = np.log(arr) - 0.5 / arr
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class Lemma21Margins:
    m1_lower: float
    m1_upper: float
    m2: float
    m3: float
    m4: float
    m5: float

    def as_tuple(self):
        return tuple(getattr(self, f.name) for f in fields(self))

    def all_positive(self) -> bool:
        return all(np.all(np.asarray(v) > 0) for v in self.as_tuple())


def check_lemma21(x) -> Lemma21Margins:
    """Margins of the five elementary digamma bounds at x (scalar or array).

    m1_lower, m1_upper   log x - 1/x < psi(x) < log x - 1/(2x)
    m2                   psi'(x) > 1/x + 1/(2x^2)
    m3                   psi''(x) < 1/x - 2 psi'(x)
    m4                   psi'(x)^2 + psi''(x) > 0
    m5                   psi'(x) exp(psi(x)) < 1
    """
    arr = _positive(x, "check_lemma21")
    p0 = np.asarray(digamma(arr))
    p1 = np.asarray(trigamma(arr))
    p2 = np.asarray(tetragamma(arr))
    inv = 1.0 / arr
    logx = np.log(arr)
    out = (
        p0 - (logx - inv),
        (logx - 0.5 * inv) - p0,
        p1 - inv - 0.5 * inv * inv,
        (inv - 2.0 * p1) - p2,
        p1 * p1 + p2,
        1.0 - p1 * np.exp(p0),
    )
    if arr.ndim == 0:
        out = tuple(float(v) for v in out)
    return Lemma21Margins(*out)
