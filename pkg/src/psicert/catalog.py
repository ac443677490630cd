"""Every inequality and shape claim as a uniform, enumerable case.

An :class:`InequalityCase` carries a vectorised margin, positive exactly when
the printed inequality holds.  A :class:`ClaimCheck` names a one-variable
target function and a shape (increasing, decreasing, convex, concave) that is
verified by finite differences.  Both live in one ordered table keyed by id.

Cases with ``status="empirical"`` are printed statements suspected to be
misprinted.  They are evaluated and reported but never gate a run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache
from typing import Callable, Mapping, Sequence, Union

import numpy as np

from . import ballvol, fdiff
from .errors import OutOfDomain, UnknownCase
from .specfun import (
    EULER_GAMMA,
    artanh,
    cosh,
    cosh_half_sum,
    digamma,
    psi_root,
    sinh,
    sth_ratio,
    tanh,
    tetragamma,
    trigamma,
)
from .bounds import check_lemma21

CATALOG_VERSION = "1"

Bound = Union[float, Callable[[Mapping[str, np.ndarray]], np.ndarray]]

STATUSES = ("asserted", "asserted-with-correction", "empirical")

# Fixed parameter grids for the parametrised families.
STH_A = (1.0, 1.5, 2.0, 5.0)
R1_INCREASING_AB = ((2.5, 1.5), (3.0, 2.0), (4.0, 1.5), (5.0, 3.0), (10.0, 2.0))
R1_DECREASING_AB = ((1.5, 2.5), (2.0, 3.0), (1.5, 4.0), (3.0, 5.0), (2.0, 10.0))
R2_K = (1.5, 2.0, 3.0, 10.0)
R3_K_BELOW_ONE = (0.25, 0.5, 0.75)
R3_K_ABOVE_ONE = (1.5, 2.0, 3.0)

STH_GAP = 1e-3
# cosh and exp overflow just past 709
HYPERBOLIC_MAX = 700.0
FRONTIER_WIDTH = 1e-6
FRONTIER_SLACK = 1e-12


# ---------------------------------------------------------------------------
# constants derived from the kernel


def psi_c() -> float:
    return psi_root()


@cache
def c_constant() -> float:
    """psi(3/2)^2 / psi(2): the value at x = 1/2 of psi(1+x)^2 / psi(1+2x)."""
    return digamma(1.5) ** 2 / digamma(2.0)


@cache
def r4_value_at_one() -> float:
    """1/psi(cosh 1), the supremum of 1/psi(cosh x) on (1, inf)."""
    return 1.0 / digamma(math.cosh(1.0))


def r5_f(x):
    """artanh(psi(tanh x))."""
    return artanh(digamma(tanh(x)))


def r5_f_prime(x):
    """Closed form of the derivative of ``r5_f``."""
    t = tanh(x)
    p = digamma(t)
    sech2 = 1.0 / cosh(x) ** 2
    return trigamma(t) * sech2 / (1.0 - p * p)


@cache
def r5_limits() -> tuple[float, float]:
    """(f(c), f(inf)) for f = artanh(psi(tanh x)) on (c, inf)."""
    return float(r5_f(psi_c())), -math.atanh(EULER_GAMMA)


@cache
def r5_slope() -> float:
    """f'(c), the largest slope of artanh(psi(tanh x)) on (c, inf)."""
    return float(r5_f_prime(psi_c()))


@cache
def logpsi_exp_threshold() -> float:
    """t with psi(e^t) = 1, found by bisection on [1, 1.5]."""
    lo, hi = 1.0, 1.5
    while hi - lo > 1e-15:
        mid = 0.5 * (lo + hi)
        if digamma(math.exp(mid)) < 1.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def r4_target(x):
    return 1.0 / np.asarray(digamma(cosh(x)))


def r4_target_prime(x):
    """Closed form of the derivative of 1/psi(cosh x)."""
    r = cosh(x)
    return -trigamma(r) * sinh(x) / digamma(r) ** 2


def lem4b_target(x):
    r = cosh(x)
    return trigamma(r) * sinh(x) / digamma(r) ** 2


# ---------------------------------------------------------------------------
# domain description


@dataclass(frozen=True)
class Interval:
    lo: Bound = -math.inf
    hi: Bound = math.inf
    lo_open: bool = True
    hi_open: bool = True
    integer: bool = False
    log_scale: bool = False
    # sampling window inside the interval; None means the interval itself
    sample_lo: float | None = None
    sample_hi: float | None = None

    def bounds(self, point):
        lo = self.lo(point) if callable(self.lo) else self.lo
        hi = self.hi(point) if callable(self.hi) else self.hi
        return np.asarray(lo, dtype=float), np.asarray(hi, dtype=float)

    def contains(self, value, point):
        value = np.asarray(value, dtype=float)
        lo, hi = self.bounds(point)
        ok = (value > lo) if self.lo_open else (value >= lo)
        ok &= (value < hi) if self.hi_open else (value <= hi)
        if self.integer:
            ok &= value == np.floor(value)
        return ok

    def describe(self) -> str:
        lo = "f(...)" if callable(self.lo) else f"{self.lo:g}"
        hi = "f(...)" if callable(self.hi) else f"{self.hi:g}"
        kind = " integer" if self.integer else ""
        return f"{'(' if self.lo_open else '['}{lo}, {hi}{')' if self.hi_open else ']'}{kind}"


@dataclass(frozen=True)
class Order:
    """lesser <= greater (or < when strict)."""

    lesser: str
    greater: str
    strict: bool = False

    def holds(self, point):
        a, b = np.asarray(point[self.lesser]), np.asarray(point[self.greater])
        return a < b if self.strict else a <= b

    def describe(self) -> str:
        return f"{self.lesser} {'<' if self.strict else '<='} {self.greater}"


@dataclass(frozen=True)
class Predicate:
    text: str
    fn: Callable[[Mapping[str, np.ndarray]], np.ndarray]

    def holds(self, point):
        return np.asarray(self.fn(point), dtype=bool)

    def describe(self) -> str:
        return self.text


@dataclass(frozen=True)
class DomainSpec:
    """Per-variable intervals plus inter-variable constraints.

    ``params`` names the variables drawn from ``grid`` (a tuple of value
    tuples) when sampling; they are still validated against their intervals.
    Variables are listed so that every dependent bound only refers to earlier
    ones.
    """

    variables: tuple[tuple[str, Interval], ...]
    constraints: tuple[Order | Predicate, ...] = ()
    params: tuple[str, ...] = ()
    grid: tuple[tuple[float, ...], ...] = ()

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.variables)

    def interval(self, name: str) -> Interval:
        return dict(self.variables)[name]

    def contains(self, point):
        ok = np.asarray(True)
        for name, iv in self.variables:
            ok = ok & iv.contains(point[name], point)
        for con in self.constraints:
            ok = ok & con.holds(point)
        return ok

    def validate(self, point) -> None:
        missing = [n for n in self.names if n not in point]
        if missing:
            raise OutOfDomain(f"missing variables {missing}")
        for name, iv in self.variables:
            if not np.all(iv.contains(point[name], point)):
                raise OutOfDomain(f"{name} must lie in {iv.describe()}")
        for con in self.constraints:
            if not np.all(con.holds(point)):
                raise OutOfDomain(f"constraint violated: {con.describe()}")

    def describe(self) -> str:
        parts = [f"{n} in {iv.describe()}" for n, iv in self.variables]
        parts += [con.describe() for con in self.constraints]
        return ", ".join(parts)


# ---------------------------------------------------------------------------
# case records


@dataclass(frozen=True)
class InequalityCase:
    id: str
    statement: str
    domain: DomainSpec
    margin: Callable[..., np.ndarray]
    relation: str = "strict"
    status: str = "asserted"
    # points failing ``admissible`` are skipped and counted, never judged
    admissible: Callable[..., np.ndarray] | None = None
    # distance to the set where the inequality degenerates to equality
    frontier: Callable[..., np.ndarray] | None = None
    note: str = ""

    @property
    def arity(self) -> int:
        return len(self.domain.variables)

    @property
    def asserted(self) -> bool:
        return self.status != "empirical"


@dataclass(frozen=True)
class ClaimCheck:
    id: str
    statement: str
    kind: str
    target: Callable[..., np.ndarray]
    domain: DomainSpec
    status: str = "asserted"
    note: str = ""

    @property
    def arity(self) -> int:
        return len(self.domain.variables)

    @property
    def asserted(self) -> bool:
        return self.status != "empirical"


Case = Union[InequalityCase, ClaimCheck]


# ---------------------------------------------------------------------------
# margin bodies


def _psi(x):
    return np.asarray(digamma(x))


def _lem21(field_names):
    def margin(x):
        m = check_lemma21(x)
        vals = [np.asarray(getattr(m, f)) for f in field_names]
        return vals[0] if len(vals) == 1 else np.minimum(*vals)

    return margin


def r1_function(x, a, b):
    """psi(1 + b x)^a / psi(1 + a x)^b."""
    return _psi(1.0 + b * x) ** a / _psi(1.0 + a * x) ** b


def _r1_ineq1(x, a, b):
    lhs = (_psi(1.0 + 0.5 * b) / _psi(1.0 + b * x)) ** a
    rhs = (_psi(1.0 + 0.5 * a) / _psi(1.0 + a * x)) ** b
    return rhs - lhs


def _r1_ineq2(x, a, b):
    lhs = (_psi(1.0 + b * x) / _psi(1.0 + 0.5 * b)) ** a
    rhs = (_psi(1.0 + a * x) / _psi(1.0 + 0.5 * a)) ** b
    return rhs - lhs


def _r1_ineq3(x):
    return _psi(1.0 + x) ** 2 - c_constant() * _psi(1.0 + 2.0 * x)


def harmonic_margin(r, s, inner):
    """psi(r) + psi(s) - 2 psi(r) psi(s) / psi(inner)."""
    pr, ps = _psi(r), _psi(s)
    return pr + ps - 2.0 * pr * ps / _psi(inner)


def _r4_harmonic(r, s):
    return harmonic_margin(r, s, cosh_half_sum(r, s))


def printed_r4_inner(r, s):
    """sqrt((1 + rs + r's')/(rs)) with z' = sqrt(1 - z^2) read over the complex
    numbers, so that r's' = -sqrt((r^2 - 1)(s^2 - 1)) for r, s > 1."""
    r = np.asarray(r, dtype=float)
    s = np.asarray(s, dtype=float)
    return np.sqrt((1.0 + r * s - np.sqrt((r * r - 1.0) * (s * s - 1.0))) / (r * s))


def _r4_printed(r, s):
    return harmonic_margin(r, s, printed_r4_inner(r, s))


def _nonzero_psi(arg):
    arg = np.asarray(arg, dtype=float)
    ok = arg > 0
    vals = np.where(ok, np.asarray(digamma(np.where(ok, arg, 1.0))), 0.0)
    return ok & (vals != 0.0)


def _r2_power_ratio(x, y, k):
    """log(psi(kx)/psi(ky)) - k log(psi(x)/psi(y)), the printed inequality in log form."""
    return (np.log(_psi(k * x)) - np.log(_psi(k * y))) - k * (np.log(_psi(x)) - np.log(_psi(y)))


def _prime(z):
    return np.sqrt(1.0 - z * z)


def _r5_ineq1(r, s):
    R, S = _psi(r), _psi(s)
    lhs = _psi((r + s) / (1.0 + r * s + _prime(r) * _prime(s)))
    rhs = (R + S) / (1.0 + R * S + _prime(R) * _prime(S))
    return lhs - rhs


def _r5_ineq1_ok(r, s):
    return (np.abs(_psi(r)) < 1.0) & (np.abs(_psi(s)) < 1.0)


def _r5_ineq2_arg(r, s):
    p, q = _psi(2.0 * r), _psi(2.0 * s)
    den = 1.0 + p * q
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(den != 0.0, (p + q) / np.where(den != 0.0, den, 1.0), np.inf)


def _r5_ineq2(r, s):
    w = _r5_ineq2_arg(r, s)
    return _psi((r + s) / (1.0 + r * s)) - np.tanh(0.5 * np.arctanh(w))


def _r5_ineq2_ok(r, s):
    w = _r5_ineq2_arg(r, s)
    return np.isfinite(w) & (np.abs(w) < 1.0)


def _r5_ineq3(r, s):
    """2a(r - s) - log of the printed product, i.e. 2a(r - s) - 2(f(r) - f(s))."""
    return 2.0 * r5_slope() * (r - s) - 2.0 * (np.asarray(r5_f(r)) - np.asarray(r5_f(s)))


def _r3_geomean(r, s):
    return _psi(np.sqrt(r * s)) - np.sqrt(_psi(r) * _psi(s))


def _r3_power_below(r, k):
    return _psi(r) ** k - _psi(r**k)


def _r3_power_above(r, k):
    return _psi(r**k) - _psi(r) ** k


def grunbaum_psi_margin(r, s):
    """(r + s + psi(r+s)) / (r psi(s) + s psi(r)) - (r + s)/(r s)."""
    lhs = (r + s + _psi(r + s)) / (r * _psi(s) + s * _psi(r))
    return lhs - (r + s) / (r * s)


def _gap(u, v):
    return np.abs(np.asarray(u) - np.asarray(v))


# ---------------------------------------------------------------------------
# the table


def _pos_x(**kw):
    return DomainSpec(
        (("x", Interval(0.0, math.inf, log_scale=True, sample_lo=1e-3, sample_hi=1e4, **kw)),)
    )


def _above_c(*names):
    c = psi_c()
    return tuple((n, Interval(c, math.inf)) for n in names)


def _build() -> dict[str, Case]:
    c = psi_c()
    cases: list[Case] = []
    add = cases.append

    lem21 = [
        ("lem21-1", "log x - 1/x < psi(x) < log x - 1/(2x)", ("m1_lower", "m1_upper")),
        ("lem21-2", "psi'(x) > 1/x + 1/(2x^2)", ("m2",)),
        ("lem21-3", "psi''(x) < 1/x - 2 psi'(x)", ("m3",)),
        ("lem21-4", "psi'(x)^2 + psi''(x) > 0", ("m4",)),
        ("lem21-5", "psi'(x) exp(psi(x)) < 1", ("m5",)),
    ]
    for cid, text, fields_ in lem21:
        add(InequalityCase(cid, text, _pos_x(), _lem21(fields_)))

    add(
        ClaimCheck(
            "sth-decreasing",
            "Gamma(1+x)^a / Gamma(1-ax) decreasing in x on [0, 1/a)",
            "decreasing",
            lambda x, a: sth_ratio(a, x),
            DomainSpec(
                (
                    ("a", Interval(1.0, math.inf, lo_open=False)),
                    (
                        "x",
                        Interval(0.0, lambda p: 1.0 / p["a"] - STH_GAP, lo_open=False, hi_open=False),
                    ),
                ),
                params=("a",),
                grid=tuple((a,) for a in STH_A),
            ),
            note="scanned on the positive-Gamma branch x <= 1/a - 1e-3",
        )
    )

    def r1_domain(increasing: bool, x_closed: bool) -> DomainSpec:
        a_lo, b_lo = (2.0, 1.0) if increasing else (1.0, 2.0)
        order = (
            Predicate("a > b", lambda p: p["a"] > p["b"])
            if increasing
            else Predicate("a < b", lambda p: p["a"] < p["b"])
        )
        return DomainSpec(
            (
                ("a", Interval(a_lo, math.inf)),
                ("b", Interval(b_lo, math.inf)),
                ("x", Interval(0.5, math.inf, lo_open=not x_closed)),
            ),
            (order,),
            params=("a", "b"),
            grid=R1_INCREASING_AB if increasing else R1_DECREASING_AB,
        )

    r1_inc = r1_domain(True, False)
    r1_dec = r1_domain(False, False)
    add(
        ClaimCheck(
            "thm-r1-monotone-inc",
            "psi(1+bx)^a / psi(1+ax)^b increasing on (1/2, inf) for a > 2, b > 1, a > b",
            "increasing",
            r1_function,
            r1_inc,
        )
    )
    add(
        ClaimCheck(
            "thm-r1-monotone-dec",
            "psi(1+bx)^a / psi(1+ax)^b decreasing on (1/2, inf) for a > 1, b > 2, a < b",
            "decreasing",
            r1_function,
            r1_dec,
        )
    )
    near_half = lambda x, **_: _gap(x, 0.5)  # noqa: E731
    add(
        InequalityCase(
            "thm-r1-ineq1",
            "(psi(1+b/2)/psi(1+bx))^a < (psi(1+a/2)/psi(1+ax))^b",
            r1_domain(True, True),
            _r1_ineq1,
            frontier=near_half,
        )
    )
    add(
        InequalityCase(
            "thm-r1-ineq2",
            "(psi(1+bx)/psi(1+b/2))^a < (psi(1+ax)/psi(1+a/2))^b",
            r1_domain(False, True),
            _r1_ineq2,
            frontier=near_half,
        )
    )
    add(
        InequalityCase(
            "thm-r1-ineq3",
            "C psi(1+2x) < psi(1+x)^2, C = psi(3/2)^2/psi(2)",
            DomainSpec((("x", Interval(0.5, math.inf, lo_open=False)),)),
            _r1_ineq3,
            frontier=near_half,
        )
    )

    r4_dom = DomainSpec((("x", Interval(1.0, HYPERBOLIC_MAX, hi_open=False)),))
    add(ClaimCheck("thm-r4-decreasing", "1/psi(cosh x) decreasing on (1, inf)", "decreasing", r4_target, r4_dom))
    add(ClaimCheck("thm-r4-convex", "1/psi(cosh x) convex on (1, inf)", "convex", r4_target, r4_dom))
    diag = lambda r, s: _gap(r, s)  # noqa: E731
    cosh1 = math.cosh(1.0)
    add(
        InequalityCase(
            "thm-r4-harmonic",
            "2 psi(r) psi(s) / psi(cosh((arcosh r + arcosh s)/2)) <= psi(r) + psi(s)",
            DomainSpec((("r", Interval(cosh1, math.inf)), ("s", Interval(cosh1, math.inf)))),
            _r4_harmonic,
            relation="non-strict",
            status="asserted-with-correction",
            frontier=diag,
            note="corrected midpoint argument; r, s = cosh x, cosh y with x, y in (1, inf)",
        )
    )
    wide = DomainSpec((("r", Interval(1.0, math.inf)), ("s", Interval(1.0, math.inf))))
    add(
        InequalityCase(
            "thm-r4-harmonic-wide",
            "corrected harmonic-mean inequality over the printed range r, s in (1, inf)",
            wide,
            _r4_harmonic,
            relation="non-strict",
            status="empirical",
            admissible=lambda r, s: _nonzero_psi(cosh_half_sum(r, s)),
            frontier=diag,
        )
    )
    add(
        InequalityCase(
            "thm-r4-harmonic-printed",
            "2 psi(r) psi(s) / psi(sqrt((1+rs+r's')/(rs))) <= psi(r) + psi(s), literal argument",
            wide,
            _r4_printed,
            relation="non-strict",
            status="empirical",
            admissible=lambda r, s: _nonzero_psi(printed_r4_inner(r, s)),
            frontier=diag,
        )
    )
    add(
        ClaimCheck(
            "lem4b-decreasing",
            "psi'(cosh x) sinh x / psi(cosh x)^2 decreasing on (1, inf)",
            "decreasing",
            lem4b_target,
            r4_dom,
        )
    )

    add(
        InequalityCase(
            "cor-r2-powerratio",
            "(psi(x)/psi(y))^k <= psi(kx)/psi(ky) for k > 1, c < x <= y",
            DomainSpec(
                (("k", Interval(1.0, math.inf)),) + _above_c("x", "y"),
                (Order("x", "y"),),
                params=("k",),
                grid=tuple((k,) for k in R2_K),
            ),
            _r2_power_ratio,
            relation="non-strict",
            frontier=lambda x, y, k: _gap(x, y),
            note="margin in log form",
        )
    )

    r5_dom = DomainSpec(_above_c("x"))
    add(ClaimCheck("cor-r5-increasing", "artanh(psi(tanh x)) increasing on (c, inf)", "increasing", r5_f, r5_dom))
    add(ClaimCheck("cor-r5-concave", "artanh(psi(tanh x)) concave on (c, inf)", "concave", r5_f, r5_dom))
    unit_sq = DomainSpec(
        (("r", Interval(0.0, 1.0)), ("s", Interval(0.0, 1.0)))
    )
    add(
        InequalityCase(
            "cor-r5-ineq1",
            "psi((r+s)/(1+rs+r's')) > (psi(r)+psi(s))/(1+psi(r)psi(s)+psi(r)'psi(s)')",
            unit_sq,
            _r5_ineq1,
            admissible=_r5_ineq1_ok,
            frontier=diag,
            note="points with |psi(r)| >= 1 or |psi(s)| >= 1 are outside the derivation domain",
        )
    )
    add(
        InequalityCase(
            "cor-r5-ineq2",
            "psi((r+s)/(1+rs)) > tanh(artanh((psi(2r)+psi(2s))/(1+psi(2r)psi(2s)))/2)",
            unit_sq,
            _r5_ineq2,
            status="empirical",
            admissible=_r5_ineq2_ok,
        )
    )
    add(
        InequalityCase(
            "cor-r5-ineq3",
            "(1+P(r))/(1-P(r)) (1-P(s))/(1+P(s)) < exp(2a(r-s)), P = psi o tanh, r >= s > c",
            DomainSpec(_above_c("r", "s"), (Order("s", "r"),)),
            _r5_ineq3,
            frontier=diag,
            note="margin in log form; restricted to r >= s",
        )
    )
    add(
        InequalityCase(
            "cor-r5-ineq3-printed",
            "cor-r5-ineq3 over the printed range r, s in (c, inf)",
            DomainSpec(_above_c("r", "s")),
            _r5_ineq3,
            status="empirical",
            frontier=diag,
        )
    )

    add(
        InequalityCase(
            "cor-r3-geomean",
            "psi(sqrt(rs)) >= sqrt(psi(r) psi(s)) for r, s > c",
            DomainSpec(_above_c("r", "s")),
            _r3_geomean,
            relation="non-strict",
            frontier=diag,
        )
    )
    add(
        InequalityCase(
            "cor-r3-power-k-lt1",
            "psi(r^k) < psi(r)^k for k in (0, 1), r > c",
            DomainSpec(
                (
                    ("k", Interval(0.0, 1.0)),
                    ("r", Interval(lambda p: np.maximum(c, c ** (1.0 / p["k"])), math.inf)),
                ),
                params=("k",),
                grid=tuple((k,) for k in R3_K_BELOW_ONE),
            ),
            _r3_power_below,
            note="r restricted so that r^k > c as well",
        )
    )
    add(
        InequalityCase(
            "cor-r3-power-k-gt1",
            "psi(r)^k < psi(r^k) for k > 1, r > c",
            DomainSpec(
                (("k", Interval(1.0, math.inf)), ("r", Interval(c, math.inf))),
                params=("k",),
                grid=tuple((k,) for k in R3_K_ABOVE_ONE),
            ),
            _r3_power_above,
        )
    )

    add(
        InequalityCase(
            "cor-grunbaum-psi",
            "(r+s+psi(r+s))/(r psi(s) + s psi(r)) >= (r+s)/(rs) for r, s > c",
            DomainSpec(_above_c("r", "s")),
            grunbaum_psi_margin,
            relation="non-strict",
        )
    )

    t = logpsi_exp_threshold()
    add(
        ClaimCheck(
            "proof-fact-logpsi-exp-concave",
            "log psi(e^x) concave for x > t, psi(e^t) = 1",
            "concave",
            lambda x: np.log(_psi(np.exp(x))),
            DomainSpec((("x", Interval(t, HYPERBOLIC_MAX, hi_open=False)),)),
        )
    )
    add(
        ClaimCheck(
            "proof-fact-log-inv-psi-convex",
            "log(1/psi(x)) convex on (c, inf)",
            "convex",
            lambda x: -np.log(_psi(x)),
            r5_dom,
        )
    )
    add(
        ClaimCheck(
            "proof-fact-ball-log-convex",
            "log(x Gamma(x) / pi^x) convex for x > 1/2",
            "convex",
            ballvol.log_ball_factor,
            DomainSpec((("x", Interval(0.5, math.inf)),)),
        )
    )

    add(
        InequalityCase(
            "thm-ball-1",
            "sqrt(Omega_{2n} Omega_{2n-2}) <= Omega_{2n-1}",
            DomainSpec((("n", Interval(1, math.inf, lo_open=False, integer=True, sample_hi=30)),)),
            ballvol.ball_ineq_1,
            relation="non-strict",
        )
    )
    add(
        InequalityCase(
            "thm-ball-2",
            "(Omega_{n-1}/Omega_n)^k <= Omega_{k(n-1)}/Omega_{kn}",
            DomainSpec(
                (
                    ("n", Interval(1, math.inf, lo_open=False, integer=True, sample_hi=10)),
                    ("k", Interval(1, math.inf, lo_open=False, integer=True, sample_hi=10)),
                )
            ),
            ballvol.ball_ineq_2,
            relation="non-strict",
            frontier=lambda n, k: np.asarray(k, dtype=float) - 1.0,
        )
    )
    add(
        InequalityCase(
            "ball-logconvex",
            "log(1/Omega_n) midpoint convex in n",
            DomainSpec((("n", Interval(1, math.inf, lo_open=False, integer=True, sample_hi=100)),)),
            ballvol.ball_log_convexity,
            relation="non-strict",
        )
    )
    int2 = Interval(2, math.inf, lo_open=False, integer=True, sample_hi=30)
    add(
        InequalityCase(
            "cor-grunbaum-ball",
            "(1 + Omega_{r+s})/Omega_{r+s} >= (Omega_r + Omega_s)/(Omega_r Omega_s), r, s >= 2",
            DomainSpec((("r", int2), ("s", int2)), (Order("r", "s"),)),
            ballvol.grunbaum_ball,
            relation="non-strict",
        )
    )
    add(
        InequalityCase(
            "cor-grunbaum-ball-real",
            "cor-grunbaum-ball for real r, s >= 2",
            DomainSpec(
                (
                    ("r", Interval(2.0, math.inf, lo_open=False, sample_hi=100.0)),
                    ("s", Interval(2.0, math.inf, lo_open=False, sample_hi=100.0)),
                )
            ),
            ballvol.grunbaum_margin,
            relation="non-strict",
            status="empirical",
        )
    )

    table: dict[str, Case] = {}
    for case in cases:
        if case.id in table:
            raise RuntimeError(f"duplicate case id {case.id}")
        table[case.id] = case
    return table


_TABLE: dict[str, Case] | None = None


def _table() -> dict[str, Case]:
    global _TABLE
    if _TABLE is None:
        _TABLE = _build()
    return _TABLE


def list_cases() -> list[str]:
    return list(_table())


def get_case(case_id: str) -> Case:
    try:
        return _table()[case_id]
    except KeyError:
        raise UnknownCase(case_id) from None


def as_point(case: Case, point=None, **kwargs) -> dict[str, np.ndarray]:
    """Normalise a point given as a mapping, a sequence in variable order, or keywords."""
    names = case.domain.names
    if point is None:
        values = dict(kwargs)
    elif isinstance(point, Mapping):
        values = {**point, **kwargs}
    else:
        seq = list(point) if isinstance(point, Sequence) or np.ndim(point) else [point]
        if len(seq) != len(names):
            raise OutOfDomain(f"{case.id} expects {len(names)} coordinates {names}")
        values = dict(zip(names, seq))
    unknown = set(values) - set(names)
    if unknown:
        raise OutOfDomain(f"{case.id} has no variables {sorted(unknown)}")
    return {n: np.asarray(values[n], dtype=float) for n in names if n in values}


def margin(case_id: str, point=None, *, fd_step: float = 1e-5, **kwargs):
    """Margin of one case at one point (or at arrays of points).

    For shape claims the margin is the signed finite difference used by the
    verifier.  Points outside the derivation domain of a case give NaN.
    """
    case = get_case(case_id)
    pt = as_point(case, point, **kwargs)
    case.domain.validate(pt)
    if isinstance(case, ClaimCheck):
        lo, hi = case.domain.interval("x").bounds(pt)
        params = {k: v for k, v in pt.items() if k != "x"}
        h = fdiff.step_sizes(pt["x"], fd_step, lo, hi)
        out, _ = fdiff.signed_difference(lambda t: case.target(t, **params), pt["x"], h, case.kind)
    else:
        if case.admissible is not None and not np.all(case.admissible(**pt)):
            return math.nan
        out = case.margin(**pt)
    out = np.asarray(out, dtype=float)
    return float(out) if out.ndim == 0 else out
