"""Central finite differences used by the monotonicity and convexity claims."""

from __future__ import annotations

import numpy as np

KINDS = ("increasing", "decreasing", "convex", "concave")
NOISE_TOL = 1e-9


def step_sizes(x, fd_step, lo=-np.inf, hi=np.inf):
    """h = fd_step * max(1, |x|), shrunk so that x - h and x + h stay inside (lo, hi)."""
    x = np.asarray(x, dtype=float)
    h = fd_step * np.maximum(1.0, np.abs(x))
    h = np.minimum(h, 0.5 * (x - lo))
    h = np.minimum(h, 0.5 * (hi - x))
    return np.maximum(h, 0.0)


def signed_difference(f, x, h, kind):
    """Return ``(margin, f(x))`` with margin > 0 when f looks ``kind`` at x.

    Margins are raw differences, f(x+h) - f(x-h) for the first-order kinds and
    f(x+h) - 2 f(x) + f(x-h) for convexity, sign-flipped for the decreasing
    and concave kinds.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown claim kind {kind!r}")
    x = np.asarray(x, dtype=float)
    h = np.asarray(h, dtype=float)
    fx = np.asarray(f(x), dtype=float)
    fp = np.asarray(f(x + h), dtype=float)
    fm = np.asarray(f(x - h), dtype=float)
    if kind in ("increasing", "decreasing"):
        diff = fp - fm
    else:
        diff = (fp - fx) + (fm - fx)
    if kind in ("decreasing", "concave"):
        diff = -diff
    # zero steps carry no information either way; + 0.0 also clears -0.0
    diff = np.where(h > 0, diff, 0.0) + 0.0
    return diff, fx


def noise_tolerance(fx):
    return NOISE_TOL * np.maximum(1.0, np.abs(fx))


def derivative(f, x, h):
    """(f(x+h) - f(x-h)) / 2h."""
    x = np.asarray(x, dtype=float)
    return (np.asarray(f(x + h)) - np.asarray(f(x - h))) / (2.0 * h)


def second_derivative(f, x, h):
    """(f(x+h) - 2 f(x) + f(x-h)) / h^2."""
    x = np.asarray(x, dtype=float)
    fx = np.asarray(f(x))
    return ((np.asarray(f(x + h)) - fx) + (np.asarray(f(x - h)) - fx)) / (h * h)
