import math

import numpy as np
import pytest
from scipy import special

from psicert.combinators import grunbaum_check, neuman_check, power_ratio_check
from psicert.errors import OutOfDomain
from psicert.specfun import digamma, psi_root

def test_neuman_log_convex_gamma():
    # Gamma(1 + t) is log-convex on [0, inf)
    f = lambda t: special.gamma(1.0 + np.asarray(t))
    rng = np.random.default_rng(3)
    for a in (1.5, 2.0, 4.0, 0.5):
        x = rng.uniform(0, 0.2, 200)
        y = x + rng.uniform(0, 0.2, 200)
        m = neuman_check(f, a, x, y, f_at_zero=1.0)
        assert np.all(m >= -1e-13)

def test_neuman_scalar():
    f = lambda t: np.exp(np.asarray(t) ** 2)
    assert isinstance(neuman_check(f, 2.0, 0.1, 0.3), float)

def test_neuman_rejects():
    f = lambda t: np.exp(t)
    with pytest.raises(OutOfDomain):
        neuman_check(f, 2.0, 0.5, 0.1)
    with pytest.raises(OutOfDomain):
        neuman_check(f, 0.0, 0.1, 0.5)
    with pytest.raises(OutOfDomain):
        neuman_check(lambda t: -np.ones_like(t), 2.0, 0.1, 0.5)

def test_neuman_detects_log_concave():
    # sqrt(1 + t) is log-concave so the conclusion for a > 1 fails
    f = lambda t: np.sqrt(1.0 + np.asarray(t))
    assert neuman_check(f, 2.0, 0.5, 2.0) < 0

def test_neuman_inverse_psi():
    c = psi_root()
    f = lambda t: 1.0 / np.asarray(digamma(t))
    m = neuman_check(f, 2.0, np.array([c + 0.1, 3.0]), np.array([c + 0.5, 9.0]))
    assert np.all(m > 0)

@pytest.mark.parametrize("k", [0.5, 2.0, 3.0, -1.0])
def test_power_ratio_exp_of_log(k):
    # f = exp(log^2): h(u) = u^2 is convex
    f = lambda t: np.exp(np.log(t) ** 2)
    assert power_ratio_check(f, k, 1.5, 3.0) > 0
    assert power_ratio_check(f, k, 0.2, 0.7) > 0

def test_power_ratio_concave_flip():
    f = lambda t: np.exp(-np.log(t) ** 2)
    assert power_ratio_check(f, 2.0, 1.5, 3.0, kind="concave") > 0
    assert power_ratio_check(f, 2.0, 1.5, 3.0, kind="convex") < 0

def test_power_ratio_rejects():
    f = lambda t: t
    with pytest.raises(OutOfDomain):
        power_ratio_check(f, 2.0, 0.5, 2.0)
    with pytest.raises(OutOfDomain):
        power_ratio_check(f, 0.0, 1.5, 2.0)
    with pytest.raises(OutOfDomain):
        power_ratio_check(f, 2.0, 3.0, 2.0)
    with pytest.raises(ValueError):
        power_ratio_check(f, 2.0, 1.5, 2.0, kind="flat")

def test_grunbaum_check():
    # (f(t) - 1)/t = t for f = 1 + t^2, increasing: margin 2 x^2 y^2
    f = lambda t: 1.0 + np.asarray(t) ** 2
    assert grunbaum_check(f, 1.5, 2.0) == pytest.approx(2 * 1.5**2 * 2.0**2, rel=1e-14)
    assert grunbaum_check(f, 1.5, 2.0, increasing=False) < 0
    with pytest.raises(OutOfDomain):
        grunbaum_check(f, 0.5, 2.0, threshold=1.0)

def test_grunbaum_linear_is_tight():
    f = lambda t: 1.0 + 3.0 * np.asarray(t)
    assert abs(grunbaum_check(f, math.pi, 2.0)) <= 1e-13
