import math

import numpy as np
import pytest

from psicert import fdiff
from psicert.catalog import ClaimCheck, DomainSpec, InequalityCase, Interval, Order, get_case
from psicert.errors import UnknownCase
from psicert.verifier import (
    SampleConfig,
    case_rng,
    check_monotone,
    derivative_agreement,
    run,
    run_case,
    sample_domain,
)

SMALL = SampleConfig(n_samples=5000)


def line_claim(kind="increasing"):
    dom = DomainSpec(variables=(("x", Interval(0.0, 10.0)),))
    return ClaimCheck(id="calib-line", statement="x is increasing", kind=kind, target=lambda x: x, domain=dom)


def test_config_validation():
    with pytest.raises(ValueError):
        SampleConfig(strategy="sobol")
    with pytest.raises(ValueError):
        SampleConfig(n_samples=-1)
    with pytest.raises(ValueError):
        SampleConfig(boundary_fraction=1.5)
    with pytest.raises(ValueError):
        SampleConfig(fd_step=0.0)


def test_case_streams_independent():
    a = case_rng(42, "lem21-1").random(5)
    b = case_rng(42, "lem21-1").random(5)
    c = case_rng(42, "lem21-2").random(5)
    d = case_rng(43, "lem21-1").random(5)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert not np.array_equal(a, d)


@pytest.mark.parametrize("strategy", ["grid", "random", "boundary-biased"])
def test_samples_inside_domain(strategy):
    cfg = SampleConfig(n_samples=3000, strategy=strategy)
    for cid in ("lem21-1", "thm-r4-harmonic", "cor-r2-powerratio", "thm-ball-2", "sth-decreasing"):
        dom = get_case(cid).domain
        pt = sample_domain(dom, cfg.n_samples, cfg, case_rng(cfg.seed, cid))
        assert np.all(dom.contains(pt))
        assert all(len(v) == cfg.n_samples for v in pt.values())


def test_unbounded_tail_capped():
    dom = DomainSpec(variables=(("x", Interval(2.0, math.inf)),))
    pt = sample_domain(dom, 20_000, SampleConfig(strategy="random"), np.random.default_rng(0))
    assert pt["x"].min() > 2.0
    assert pt["x"].max() <= 2.0 + 1e6
    assert np.median(pt["x"]) < 2.0 + 20.0


def test_order_respected():
    dom = DomainSpec(variables=(("r", Interval(0.0, 5.0)), ("s", Interval(0.0, 5.0))), constraints=(Order("r", "s"),))
    pt = sample_domain(dom, 4000, SampleConfig(), np.random.default_rng(1))
    assert np.all(pt["r"] <= pt["s"])


def test_deterministic_and_thread_invariant():
    a = run_case("cor-r5-ineq3", SMALL, threads=1)
    b = run_case("cor-r5-ineq3", SMALL, threads=1)
    c = run_case("cor-r5-ineq3", SampleConfig(n_samples=20_000), threads=4)
    d = run_case("cor-r5-ineq3", SampleConfig(n_samples=20_000), threads=1)
    assert a == b
    assert c == d


def test_unknown_case():
    with pytest.raises(UnknownCase):
        run_case("lem21-9", SMALL)


def test_zero_samples_undetermined():
    res = run_case("lem21-2", SampleConfig(n_samples=0))
    assert res.status == "undetermined"
    assert res.min_margin is None and res.argmin is None


def test_skip_accounting():
    res = run_case("cor-r5-ineq1", SMALL)
    assert res.n_evaluated + res.n_skipped_out_of_domain == res.n_samples
    assert res.n_skipped_out_of_domain > 0
    assert res.status == "pass"


def test_failing_case_reports_violations():
    res = run_case("lem21-3", SMALL)
    assert res.status == "fail"
    assert res.asserted_failure
    assert res.n_violations > 20
    assert len(res.violations) == 20
    assert res.min_margin < -0.3
    point, m = res.violations[0]
    assert m < 0 and len(point) == 1


def test_empirical_status():
    res = run_case("thm-r4-harmonic-printed", SMALL)
    assert res.status == "empirical-fail"
    assert not res.asserted_failure


def test_calibration_claim():
    res = check_monotone(line_claim(), SMALL)
    assert res.status == "pass"
    assert res.n_violations == 0
    assert check_monotone(line_claim("decreasing"), SMALL).status == "fail"


def test_check_monotone_type():
    with pytest.raises(TypeError):
        check_monotone(get_case("lem21-1"))


def test_ad_hoc_inequality_frontier():
    # x^2 >= 0, zero only at the frontier x = 0
    dom = DomainSpec(variables=(("x", Interval(-1.0, 1.0, lo_open=False, hi_open=False)),))
    case = InequalityCase(
        id="square", statement="x^2 > 0", domain=dom, margin=lambda x: x * x, frontier=lambda x: np.abs(x)
    )
    assert run(case, SampleConfig(n_samples=2000, strategy="grid")).status == "pass"


def test_finite_difference_calibration():
    xs = np.linspace(0.5, 20.0, 500)
    h = fdiff.step_sizes(xs, 1e-4)
    assert np.all(np.abs(fdiff.second_derivative(lambda t: t**3, xs, h) - 6 * xs) <= 1e-4 * np.maximum(1, 6 * xs))
    assert np.all(derivative_agreement(np.sin, np.cos, np.linspace(0.1, 1.4, 200)) < 1e-8)


def test_step_sizes_shrink_near_bounds():
    h = fdiff.step_sizes(np.array([1e-8, 1.0]), 1e-5, lo=0.0, hi=2.0)
    assert h[0] == pytest.approx(5e-9)
    assert h[1] == pytest.approx(1e-5)
