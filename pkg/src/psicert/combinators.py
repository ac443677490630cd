"""Generic checkers for three classical lemma shapes.

Each takes a user-supplied function handle ``f`` (which must accept floats or
numpy arrays) and returns a margin that is positive when the lemma's
conclusion holds at the probe points.
"""

from __future__ import annotations

import numpy as np

from .errors import OutOfDomain


def _ret(out):
    return float(out) if np.ndim(out) == 0 else out


def _log_positive(values, what):
    arr = np.asarray(values, dtype=float)
    if not np.all(arr > 0):
        raise OutOfDomain(f"{what}: f must be positive at every probe")
    return np.log(arr)


def neuman_check(f, a, x, y, *, f_at_zero=None):
    """Monotonicity of g(t) = f(t)**a / f(a t) for log-convex positive f.

    For a >= 1, g(y) <= g(x) <= f(0)**(a - 1) when 0 <= x <= y; for
    0 < a <= 1 both inequalities are reversed.  Returns the smaller of the two
    chained margins in log space.  The bound at zero is only checked when
    ``f_at_zero`` is given, since f may have no finite limit at the left end of
    its domain.
    """
    a = np.asarray(a, dtype=float)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if (a <= 0).any():
        raise OutOfDomain("neuman_check requires a > 0")
    if (x > y).any():
        raise OutOfDomain("neuman_check requires x <= y")

    def log_g(t):
        return a * _log_positive(f(t), "neuman_check") - _log_positive(f(a * t), "neuman_check")

    gx, gy = log_g(x), log_g(y)
    sign = np.where(a >= 1, 1.0, -1.0)
    margin = sign * (gx - gy)
    if f_at_zero is not None:
        cap = (a - 1.0) * _log_positive(f_at_zero, "neuman_check")
        margin = np.minimum(margin, sign * (cap - gx))
    return _ret(margin)


def _power_ratio_increasing(k: float, x: float, kind: str) -> bool:
    """Direction of g(x) = f(x^k)/f(x)^k from the convex/concave case table."""
    # convex h: increasing for k, x in (0,1), for k > 1 with x > 1 and for
    # k < 0 with x > 1; every other combination decreases.  Concave flips it.
    inside = x < 1.0
    up = inside if 0.0 < k < 1.0 else not inside
    return up if kind == "convex" else not up


def power_ratio_check(f, k, x1, x2, kind="convex"):
    """Signed change of g(x) = f(x**k) / f(x)**k between x1 < x2.

    ``kind`` declares whether h(u) = log f(e^u) is convex or concave.  The
    result is positive when g moves in the direction the case table predicts.
    Both probes must lie on the same side of 1.
    """
    if kind not in ("convex", "concave"):
        raise ValueError(f"kind must be 'convex' or 'concave', not {kind!r}")
    if k == 0:
        raise OutOfDomain("power_ratio_check requires k != 0")
    if not 0 < x1 < x2:
        raise OutOfDomain("power_ratio_check requires 0 < x1 < x2")
    if (x1 < 1.0) != (x2 < 1.0) or x1 == 1.0 or x2 == 1.0:
        raise OutOfDomain("x1 and x2 must both lie in (0, 1) or both in (1, inf)")

    def g(t):
        return f(t**k) / f(t) ** k

    diff = g(x2) - g(x1)
    if k == 1:
        return float(diff)
    return float(diff if _power_ratio_increasing(k, x1, kind) else -diff)


def grunbaum_check(f, x, y, *, threshold=0.0, increasing=True):
    """Margin of 1 + h(z) >= h(x) + h(y) with h(t) = f(t**2), z**2 = x**2 + y**2.

    Holds when (f(t) - 1)/t is increasing on (threshold, inf); pass
    ``increasing=False`` for the reversed inequality.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if (x < threshold).any() or (y < threshold).any():
        raise OutOfDomain(f"grunbaum_check requires x, y >= {threshold}")
    x2, y2 = x * x, y * y
    margin = 1.0 + np.asarray(f(x2 + y2)) - np.asarray(f(x2)) - np.asarray(f(y2))
    return _ret(margin if increasing else -margin)
