"""Deterministic sampling engine for catalog cases.

Sample points are drawn up front from a per-case PCG64 stream whose seed is
derived from ``(config.seed, sha256(case id))``, so adding cases never shifts
existing streams.  Margins are evaluated in fixed-size chunks, optionally on a
thread pool, and reduced in chunk order; the thread count therefore never
changes a result.

Unbounded intervals are compactified with ``x = lo + 10 u / (1 - u)``: half of
the mass lands in ``[lo, lo + 10]`` and the tail is cut off at ``lo + 1e6``.
"""

from __future__ import annotations

import hashlib
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import catalog, fdiff
from .catalog import ClaimCheck, DomainSpec, InequalityCase, Interval, Order

STRATEGIES = ("grid", "random", "boundary-biased")
CHUNK = 4096
MAX_LISTED_VIOLATIONS = 20
TAIL_SCALE = 10.0
TAIL_CAP = 1e6
# open endpoints are kept at this relative distance
OPEN_GAP = 1e-9
BOUNDARY_POWER = 8


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 42
    n_samples: int = 100_000
    strategy: str = "boundary-biased"
    boundary_fraction: float = 0.1
    fd_step: float = 1e-5

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        if self.n_samples < 0:
            raise ValueError("n_samples must be non-negative")
        if not 0.0 <= self.boundary_fraction <= 1.0:
            raise ValueError("boundary_fraction must lie in [0, 1]")
        if not self.fd_step > 0:
            raise ValueError("fd_step must be positive")


@dataclass
class CheckResult:
    id: str
    status: str
    n_samples: int
    n_evaluated: int
    n_skipped_out_of_domain: int
    min_margin: float | None
    argmin: list | None
    n_violations: int
    violations: list = field(default_factory=list)

    @property
    def asserted_failure(self) -> bool:
        return self.status == "fail"


def case_rng(seed: int, case_id: str) -> np.random.Generator:
    digest = hashlib.sha256(case_id.encode("utf-8")).digest()
    words = [int.from_bytes(digest[i : i + 4], "little") for i in range(0, 16, 4)]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), *words])))


# ---------------------------------------------------------------------------
# sampling


def _unit_samples(rng, n, d, config):
    if config.strategy == "grid":
        if d == 0:
            return np.zeros((n, 0))
        m = max(1, math.ceil(n ** (1.0 / d) - 1e-9))
        idx = np.arange(n)
        cols = []
        for j in range(d):
            cols.append(((idx // m ** (d - 1 - j)) % m + 0.5) / m)
        return np.stack(cols, axis=1)
    u = rng.random((n, d))
    if config.strategy == "boundary-biased" and n and d:
        edge = rng.random(n) < config.boundary_fraction
        v = rng.random((n, d)) ** BOUNDARY_POWER
        high = rng.random((n, d)) < 0.5
        pushed = np.where(high, 1.0 - v, v)
        u = np.where(edge[:, None], pushed, u)
    return u


def _map_unit(iv: Interval, u, lo, hi):
    lo = np.broadcast_to(lo, u.shape).astype(float)
    hi = np.broadcast_to(hi, u.shape).astype(float)
    slo = lo if iv.sample_lo is None else np.maximum(lo, iv.sample_lo)
    shi = hi if iv.sample_hi is None else np.minimum(hi, iv.sample_hi)
    if iv.integer:
        first = np.where(iv.lo_open & (slo == np.floor(slo)), slo + 1, np.ceil(slo))
        last = np.where(iv.hi_open & (shi == np.floor(shi)), shi - 1, np.floor(shi))
        vals = first + np.floor(u * (last - first + 1))
        return np.minimum(vals, last)
    bounded = np.isfinite(shi)
    if iv.log_scale:
        with np.errstate(divide="ignore", invalid="ignore"):
            inside = np.exp(np.log(slo) + u * (np.log(shi) - np.log(slo)))
    else:
        inside = slo + u * (shi - slo)
    umax = TAIL_CAP / (TAIL_CAP + TAIL_SCALE)
    ue = u * umax
    tail = slo + TAIL_SCALE * ue / (1.0 - ue)
    vals = np.where(bounded, inside, tail)
    with np.errstate(invalid="ignore"):
        if iv.lo_open:
            floor = lo + OPEN_GAP * np.maximum(1.0, np.abs(lo))
            vals = np.where(np.isfinite(lo), np.maximum(vals, floor), vals)
        if iv.hi_open:
            ceil = hi - OPEN_GAP * np.maximum(1.0, np.abs(hi))
            vals = np.where(np.isfinite(hi), np.minimum(vals, ceil), vals)
    return vals


def sample_domain(domain: DomainSpec, n: int, config: SampleConfig, rng) -> dict[str, np.ndarray]:
    """Draw n points that satisfy every interval and constraint of ``domain``."""
    point: dict[str, np.ndarray] = {}
    if domain.params:
        grid = np.asarray(domain.grid, dtype=float)
        if config.strategy == "grid":
            rows = np.arange(n) % len(grid)
        else:
            rows = rng.integers(len(grid), size=n)
        for j, name in enumerate(domain.params):
            point[name] = grid[rows, j]
    free = [(name, iv) for name, iv in domain.variables if name not in domain.params]
    u = _unit_samples(rng, n, len(free), config)
    col = {name: j for j, (name, _) in enumerate(free)}
    orders = [c for c in domain.constraints if isinstance(c, Order)]
    if config.strategy == "boundary-biased" and orders and n:
        # pull part of the boundary mass onto the x = y diagonal
        near = rng.random(n) < 0.5 * config.boundary_fraction
        gap = 1e-3 * rng.random(n) ** BOUNDARY_POWER
        for con in orders:
            i, j = col[con.lesser], col[con.greater]
            u[:, j] = np.where(near, np.minimum(u[:, i] + gap, 1.0), u[:, j])
    for name, iv in free:
        lo, hi = iv.bounds(point)
        point[name] = _map_unit(iv, u[:, col[name]], lo, hi)
    for con in orders:
        a, b = point[con.lesser], point[con.greater]
        point[con.lesser], point[con.greater] = np.minimum(a, b), np.maximum(a, b)
    ok = domain.contains(point)
    if n and not np.all(ok):
        raise RuntimeError("sampler produced a point outside its domain")
    return point


# ---------------------------------------------------------------------------
# evaluation


def _chunks(n):
    return [(i, min(i + CHUNK, n)) for i in range(0, n, CHUNK)]


def _map_chunks(fn, n, threads):
    spans = _chunks(n)

    def quiet(span):
        # errstate is thread-local, so each worker sets its own
        with np.errstate(all="ignore"):
            return fn(span)

    if threads > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(quiet, spans))
    else:
        parts = [quiet(span) for span in spans]
    return parts


def _slice(point, lo, hi):
    return {k: v[lo:hi] for k, v in point.items()}


def _inequality_margins(case: InequalityCase, point, n, threads):
    def work(span):
        sub = _slice(point, *span)
        ok = np.ones(span[1] - span[0], dtype=bool)
        if case.admissible is not None:
            with np.errstate(all="ignore"):
                ok = np.asarray(case.admissible(**sub), dtype=bool) & ok
        m = np.full(ok.shape, np.nan)
        if ok.any():
            keep = {k: v[ok] for k, v in sub.items()}
            m[ok] = np.asarray(case.margin(**keep), dtype=float) + 0.0
        bad = np.zeros(ok.shape, dtype=bool)
        if ok.any():
            mk = m[ok]
            keep = {k: v[ok] for k, v in sub.items()}
            if case.relation == "strict":
                viol = mk <= 0.0
                if case.frontier is not None:
                    close = np.asarray(case.frontier(**keep)) < catalog.FRONTIER_WIDTH
                    viol = np.where(close, mk < -catalog.FRONTIER_SLACK, viol)
            else:
                viol = mk < -catalog.FRONTIER_SLACK
            bad[ok] = viol | ~np.isfinite(mk)
        return ok, m, bad

    return _map_chunks(work, n, threads)


def _claim_margins(claim: ClaimCheck, point, n, threads, fd_step):
    iv = claim.domain.interval("x")
    params = [p for p in claim.domain.names if p != "x"]

    def work(span):
        sub = _slice(point, *span)
        lo, hi = iv.bounds(sub)
        x = sub["x"]
        h = fdiff.step_sizes(x, fd_step, lo, hi)
        kw = {p: sub[p] for p in params}
        m, fx = fdiff.signed_difference(lambda t: claim.target(t, **kw), x, h, claim.kind)
        m = np.asarray(m, dtype=float)
        bad = (m < -fdiff.noise_tolerance(fx)) | ~np.isfinite(m)
        return np.ones(m.shape, dtype=bool), m, bad

    return _map_chunks(work, n, threads)


def _coord(domain: DomainSpec, name: str, value: float):
    if domain.interval(name).integer:
        return int(value)
    return float(value)


def _point_at(domain, point, i):
    return [_coord(domain, name, point[name][i]) for name in domain.names]


def _status(asserted: bool, n_eval: int, n_bad: int) -> str:
    if n_eval == 0:
        return "undetermined"
    if asserted:
        return "pass" if n_bad == 0 else "fail"
    return "empirical-pass" if n_bad == 0 else "empirical-fail"


def run(case, config: SampleConfig, threads: int = 1) -> CheckResult:
    """Verify one case object (catalog entry or ad hoc) under ``config``."""
    n = config.n_samples
    rng = case_rng(config.seed, case.id)
    point = sample_domain(case.domain, n, config, rng)
    with np.errstate(all="ignore"):
        if isinstance(case, ClaimCheck):
            parts = _claim_margins(case, point, n, threads, config.fd_step)
        else:
            parts = _inequality_margins(case, point, n, threads)
    if parts:
        ok = np.concatenate([p[0] for p in parts])
        m = np.concatenate([p[1] for p in parts])
        bad = np.concatenate([p[2] for p in parts])
    else:
        ok = np.zeros(0, dtype=bool)
        m = np.zeros(0)
        bad = np.zeros(0, dtype=bool)

    n_eval = int(ok.sum())
    min_margin = argmin = None
    if n_eval:
        ranked = np.where(ok, m, np.inf)
        ranked = np.where(ok & np.isnan(m), -np.inf, ranked)
        i = int(np.argmin(ranked))  # first index wins ties
        min_margin = float(m[i]) if np.isfinite(m[i]) else float("-inf")
        argmin = _point_at(case.domain, point, i)
    bad_idx = np.flatnonzero(bad)
    violations = [
        (_point_at(case.domain, point, int(i)), float(m[i])) for i in bad_idx[:MAX_LISTED_VIOLATIONS]
    ]
    return CheckResult(
        id=case.id,
        status=_status(case.asserted, n_eval, len(bad_idx)),
        n_samples=n,
        n_evaluated=n_eval,
        n_skipped_out_of_domain=n - n_eval,
        min_margin=min_margin,
        argmin=argmin,
        n_violations=int(len(bad_idx)),
        violations=violations,
    )


def run_case(case_id: str, config: SampleConfig | None = None, threads: int = 1) -> CheckResult:
    return run(catalog.get_case(case_id), config or SampleConfig(), threads)


def check_monotone(claim: ClaimCheck, config: SampleConfig | None = None, threads: int = 1) -> CheckResult:
    if not isinstance(claim, ClaimCheck):
        raise TypeError("check_monotone expects a ClaimCheck")
    return run(claim, config or SampleConfig(), threads)


def run_all(config: SampleConfig | None = None, threads: int = 1) -> list[CheckResult]:
    config = config or SampleConfig()
    return [run_case(cid, config, threads) for cid in catalog.list_cases()]


def derivative_agreement(f, fprime, xs, fd_step: float = 1e-5):
    """Relative gap between a closed-form derivative and central differences."""
    xs = np.asarray(xs, dtype=float)
    h = fd_step * np.maximum(1.0, np.abs(xs))
    exact = np.asarray(fprime(xs), dtype=float)
    approx = fdiff.derivative(f, xs, h)
    return np.abs(approx - exact) / np.abs(exact)
