"""Command-line front end.

    psicert eval psi --x 1
    psicert constants
    psicert check --all --seed 42 --samples 100000 --report report.json
    psicert list

Exit codes: 0 success, 1 an asserted case failed, 2 usage or domain error.
Empirical cases are reported but never change the exit code.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

from . import __version__, ballvol, catalog, specfun
from .errors import EvalError, UnknownCase
from .verifier import STRATEGIES, CheckResult, SampleConfig, run_case

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

THREADS_ENV = "PSI_CERTIFY_THREADS"
SUMMARY_KEYS = ("pass", "fail", "empirical_pass", "empirical_fail", "undetermined")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# eval


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"{args.function} needs --{name}")
    return value


EVALUATORS = {
    "gamma": lambda a: specfun.gamma(_need(a, "x")),
    "loggamma": lambda a: specfun.log_gamma(_need(a, "x")),
    "psi": lambda a: specfun.digamma(_need(a, "x")),
    "psi1": lambda a: specfun.trigamma(_need(a, "x")),
    "psi2": lambda a: specfun.tetragamma(_need(a, "x")),
    "omega": lambda a: ballvol.omega(_need(a, "n")),
    "logomega": lambda a: ballvol.log_omega(_need(a, "n")),
    "sth_ratio": lambda a: specfun.sth_ratio(_need(a, "a"), _need(a, "x")),
}


def format_value(value: float) -> str:
    return format(float(value), ".17g")


def cmd_eval(args, out=None) -> int:
    out = out or sys.stdout
    value = EVALUATORS[args.function](args)
    print(format_value(value), file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# constants


@dataclass(frozen=True)
class ConstantRow:
    name: str
    meaning: str
    computed: float
    printed: float | None
    tolerance: float | None

    @property
    def diff(self) -> float | None:
        return None if self.printed is None else abs(self.computed - self.printed)

    @property
    def erratum(self) -> bool:
        return self.diff is not None and self.diff > self.tolerance


def constants_table() -> list[ConstantRow]:
    l_, m_ = catalog.r5_limits()
    return [
        ConstantRow("gamma", "Euler-Mascheroni constant, -psi(1)", -specfun.digamma(1.0), None, None),
        ConstantRow("c", "positive zero of psi", specfun.psi_root(), 1.4616, 1e-4),
        ConstantRow("C", "psi(3/2)^2/psi(2)", catalog.c_constant(), 0.0031, 2e-4),
        ConstantRow("f(1)", "1/psi(cosh 1)", catalog.r4_value_at_one(), 13.1559, 1e-2),
        ConstantRow("l", "artanh(psi(tanh c))", l_, -0.9934, 1e-3),
        ConstantRow("m", "-artanh(gamma)", m_, -0.6582, 1e-3),
        ConstantRow("a", "slope of artanh(psi(tanh x)) at c", catalog.r5_slope(), 0.8807, 1e-3),
    ]


def cmd_constants(args, out=None) -> int:
    out = out or sys.stdout
    rows = constants_table()
    if getattr(args, "json", False):
        payload = [
            {
                "name": r.name,
                "meaning": r.meaning,
                "computed": r.computed,
                "printed": r.printed,
                "abs_diff": r.diff,
                "erratum": r.erratum,
            }
            for r in rows
        ]
        print(json.dumps(payload, indent=2), file=out)
        return EXIT_OK
    print(f"{'name':<6} {'computed':>22} {'printed':>10} {'abs diff':>10}  meaning", file=out)
    for r in rows:
        printed = "-" if r.printed is None else f"{r.printed:g}"
        diff = "-" if r.diff is None else f"{r.diff:.2e}"
        flag = "  ERRATUM: printed digits disagree" if r.erratum else ""
        print(f"{r.name:<6} {format_value(r.computed):>22} {printed:>10} {diff:>10}  {r.meaning}{flag}", file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# check and reports


def result_to_dict(res: CheckResult) -> dict:
    return {
        "id": res.id,
        "status": res.status,
        "n_evaluated": res.n_evaluated,
        "n_skipped": res.n_skipped_out_of_domain,
        "min_margin": res.min_margin,
        "argmin": res.argmin,
        "n_violations": res.n_violations,
        "violations": [{"point": p, "margin": m} for p, m in res.violations],
    }


def summarize(cases) -> dict:
    counts = dict.fromkeys(SUMMARY_KEYS, 0)
    for case in cases:
        status = case["status"] if isinstance(case, dict) else case.status
        counts[status.replace("-", "_")] += 1
    return counts


def build_report(results, config: SampleConfig) -> dict:
    cases = [result_to_dict(r) for r in results]
    return {
        "version": __version__,
        "catalog_version": catalog.CATALOG_VERSION,
        "config": {
            "seed": config.seed,
            "samples": config.n_samples,
            "strategy": config.strategy,
            "boundary_fraction": config.boundary_fraction,
            "fd_step": config.fd_step,
        },
        "cases": cases,
        "summary": summarize(cases),
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def read_report(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def resolve_threads(value) -> int:
    if value is None:
        env = os.environ.get(THREADS_ENV)
        if env is None:
            return 1
        value = env
    try:
        threads = int(value)
    except ValueError:
        raise UsageError(f"thread count must be a positive integer, got {value!r}") from None
    if threads < 1:
        raise UsageError(f"thread count must be a positive integer, got {value!r}")
    return threads


def _fmt_margin(value) -> str:
    return "-" if value is None else f"{value:.6g}"


def cmd_check(args, out=None) -> int:
    out = out or sys.stdout
    threads = resolve_threads(args.threads)
    if args.all:
        ids = catalog.list_cases()
    else:
        ids = [args.id]
        catalog.get_case(args.id)
    config = SampleConfig(seed=args.seed, n_samples=args.samples, strategy=args.strategy)
    results = [run_case(cid, config, threads) for cid in ids]
    report = build_report(results, config)
    for r in results:
        print(
            f"{r.status.upper():<15} {r.id:<30} evaluated={r.n_evaluated:<7} "
            f"skipped={r.n_skipped_out_of_domain:<7} violations={r.n_violations:<7} "
            f"min_margin={_fmt_margin(r.min_margin)}",
            file=out,
        )
    summary = report["summary"]
    print("summary: " + ", ".join(f"{k}={v}" for k, v in summary.items()), file=out)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(dump_report(report))
    return EXIT_FAIL if summary["fail"] else EXIT_OK


def cmd_list(args, out=None) -> int:
    out = out or sys.stdout
    for cid in catalog.list_cases():
        case = catalog.get_case(cid)
        print(f"{cid:<30} {case.status:<25} {case.statement}", file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="psicert", description="Gamma-family kernels and inequality checks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate one function")
    p.add_argument("function", choices=sorted(EVALUATORS))
    p.add_argument("--x", type=float)
    p.add_argument("--n", type=float)
    p.add_argument("--a", type=float)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("constants", help="computed constants next to their printed values")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("check", help="run catalog cases")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--id")
    which.add_argument("--all", action="store_true")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--strategy", choices=STRATEGIES, default="boundary-biased")
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--threads", help=f"worker threads (default ${THREADS_ENV} or 1)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("list", help="list catalog cases")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"psicert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownCase as exc:
        print(f"psicert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EvalError, ValueError) as exc:
        print(f"psicert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
