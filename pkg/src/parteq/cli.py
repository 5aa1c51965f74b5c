"""Command-line front end: verify, map, count, series.

Output is deterministic: records are ordered by parameter tuple and carry
no timestamps; timing is only included when --timing is passed. Exit
statuses: 0 all checks passed, 1 a checked claim failed, 2 usage or parse
error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .bijection import phi, phi_inverse
from .classes import (
    ClassParams,
    count_A,
    count_B,
    effective_budget,
    enumerate_A,
    enumerate_B,
)
from .errors import (
    BudgetExceeded,
    DomainError,
    NotInClassA,
    NotInClassB,
    ParseError,
    ParteqError,
)
from .partition import Partition
from .qseries import first_difference, lhs_series, rhs_series, solutionI_sides

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class GridSpec:
    """Inclusive parameter ranges for a verification sweep."""

    n_lo: int
    n_hi: int
    k_lo: int
    k_hi: int
    d_lo: int
    d_hi: int
    m_lo: int
    m_hi: int
    degree: int
    budget: int

    def __post_init__(self):
        if self.n_lo < 0 or self.k_lo < 1 or self.d_lo < 1 or self.m_lo < 1:
            raise DomainError("lower bounds must satisfy n >= 0, k,d,m >= 1")
        for lo, hi in ((self.n_lo, self.n_hi), (self.k_lo, self.k_hi),
                       (self.d_lo, self.d_hi), (self.m_lo, self.m_hi)):
            if hi < lo:
                raise DomainError(f"upper bound {hi} below lower bound {lo}")

    def points(self):
        for n in range(self.n_lo, self.n_hi + 1):
            for k in range(self.k_lo, self.k_hi + 1):
                for d in range(self.d_lo, self.d_hi + 1):
                    for m in range(self.m_lo, self.m_hi + 1):
                        yield ClassParams(n, k, d, m)


@dataclass
class VerifyReport:
    """Result record for one grid point."""

    params: ClassParams
    count_a: int | None = None
    count_b: int | None = None
    coeff_lhs: int | None = None
    coeff_rhs: int | None = None
    bijection_ok: bool | None = None  # None when d = 1 (not applicable)
    error: str | None = None
    elapsed: float | None = None

    @property
    def passed(self) -> bool:
        if self.error is not None:
            return False
        numbers = {self.count_a, self.count_b, self.coeff_lhs, self.coeff_rhs}
        return len(numbers) == 1 and self.bijection_ok is not False

    def to_record(self, timing: bool) -> dict:
        rec = {
            "n": self.params.n, "k": self.params.k, "d": self.params.d, "m": self.params.m,
            "count_A": self.count_a, "count_B": self.count_b,
            "coeff_lhs": self.coeff_lhs, "coeff_rhs": self.coeff_rhs,
            "bijection": self.bijection_ok,
            "pass": self.passed,
        }
        if self.error is not None:
            rec["error"] = self.error
        if timing:
            rec["elapsed"] = self.elapsed
        return rec


def verify_point(params: ClassParams, series_cache: dict, degree: int, budget: int) -> VerifyReport:
    """Check one grid point: counts, series coefficients, bijection round trip."""
    report = VerifyReport(params=params)
    start = time.perf_counter()
    key = (params.k, params.d, params.m)
    if key not in series_cache:
        series_cache[key] = (
            lhs_series(params.k, params.d, params.m, degree),
            rhs_series(params.k, params.d, params.m, degree),
        )
    lhs, rhs = series_cache[key]
    try:
        members_a = list(enumerate_A(params, budget=budget))
        members_b = list(enumerate_B(params, budget=budget))
        report.count_a = len(members_a)
        report.count_b = len(members_b)
        report.coeff_lhs = lhs.coefficient(params.n)
        report.coeff_rhs = rhs.coefficient(params.n)
        if params.d >= 2:
            images = set()
            ok = True
            for lam in members_a:
                kappa, _ = phi(lam, params)
                images.add(kappa)
                back, _ = phi_inverse(kappa, params)
                if back != lam:
                    ok = False
            if images != set(members_b):
                ok = False
            report.bijection_ok = ok
    except BudgetExceeded as exc:
        report.error = f"BudgetExceeded: {exc}"
    except ParteqError as exc:
        report.error = f"{type(exc).__name__}: {exc}"
    report.elapsed = time.perf_counter() - start
    return report


def _emit(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
        return
    if not records:
        return
    keys = list(records[0].keys())
    if fmt == "csv":
        out.write(",".join(keys) + "\n")
        for rec in records:
            out.write(",".join("" if rec.get(k) is None else str(rec.get(k)) for k in keys) + "\n")
        return
    widths = {k: max(len(k), *(len(str(rec.get(k))) for rec in records)) for k in keys}
    out.write("  ".join(k.ljust(widths[k]) for k in keys) + "\n")
    for rec in records:
        out.write("  ".join(str(rec.get(k)).ljust(widths[k]) for k in keys) + "\n")


def _parse_range(text: str, name: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    value = int(text)
    return value, value


def cmd_verify(args) -> int:
    budget = effective_budget(args.budget)
    grid = GridSpec(
        *_parse_range(args.n, "n"), *_parse_range(args.k, "k"),
        *_parse_range(args.d, "d"), *_parse_range(args.m, "m"),
        degree=max(args.N, int(_parse_range(args.n, "n")[1])),
        budget=budget,
    )
    series_cache: dict = {}
    records = []
    any_fail = False
    any_budget = False
    for params in grid.points():
        report = verify_point(params, series_cache, grid.degree, budget)
        if report.error and report.error.startswith("BudgetExceeded"):
            any_budget = True
        elif not report.passed:
            any_fail = True
        records.append(report.to_record(timing=args.timing))
    _emit(records, args.format, sys.stdout)
    if any_fail:
        return EXIT_FAIL
    if any_budget:
        return EXIT_BUDGET
    return EXIT_PASS


def cmd_map(args) -> int:
    params = ClassParams.parse(args.params)
    p = Partition.parse(args.partition)
    if args.inverse:
        image, trace = phi_inverse(p, params)
    else:
        image, trace = phi(p, params)
    if args.trace:
        print(trace.to_json(indent=2))
    else:
        print(image.render())
    return EXIT_PASS


def cmd_count(args) -> int:
    params = ClassParams.parse(args.params)
    budget = effective_budget(args.budget)
    if args.method == "enumerate":
        value = count_A(params, budget=budget) if args.cls == "A" else count_B(params, budget=budget)
    else:
        build = lhs_series if args.cls == "A" else rhs_series
        degree = max(args.N, params.n)
        value = build(params.k, params.d, params.m, degree).coefficient(params.n)
    print(value)
    return EXIT_PASS


def cmd_series(args) -> int:
    if args.eq1:
        lhs, rhs = solutionI_sides(args.k, args.N)
        label = f"eq1 k={args.k} N={args.N}"
    else:
        if args.d is None or args.m is None:
            raise DomainError("--d and --m are required unless --eq1 is given")
        lhs = lhs_series(args.k, args.d, args.m, args.N)
        rhs = rhs_series(args.k, args.d, args.m, args.N)
        label = f"eq2 k={args.k} d={args.d} m={args.m} N={args.N}"
    diff = first_difference(lhs, rhs)
    if diff is None:
        print(f"{label}: agree")
        return EXIT_PASS
    e, a, b = diff
    print(f"{label}: differ at q^{e}: lhs={a} rhs={b}")
    return EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parteq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="sweep a parameter grid and cross-check all oracles")
    p_verify.add_argument("--n", required=True, help="range lo..hi or single value")
    p_verify.add_argument("--k", required=True)
    p_verify.add_argument("--d", required=True)
    p_verify.add_argument("--m", required=True)
    p_verify.add_argument("--N", type=int, default=60, help="series truncation degree")
    p_verify.add_argument("--budget", type=int, default=None)
    p_verify.add_argument("--timing", action="store_true", help="include elapsed seconds per point")
    _add_format_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_map = sub.add_parser("map", help="apply the bijection (or its inverse) to one partition")
    p_map.add_argument("partition", help="partition in canonical text form")
    p_map.add_argument("--params", required=True, help="n,k,d,m")
    p_map.add_argument("--inverse", action="store_true")
    p_map.add_argument("--trace", action="store_true", help="print the full trace as JSON")
    p_map.set_defaults(func=cmd_map)

    p_count = sub.add_parser("count", help="count one class by enumeration or series")
    p_count.add_argument("--params", required=True, help="n,k,d,m")
    p_count.add_argument("--class", dest="cls", choices=["A", "B"], required=True)
    p_count.add_argument("--method", choices=["enumerate", "series"], default="enumerate")
    p_count.add_argument("--N", type=int, default=60)
    p_count.add_argument("--budget", type=int, default=None)
    p_count.set_defaults(func=cmd_count)

    p_series = sub.add_parser("series", help="compare both sides of an identity coefficientwise")
    p_series.add_argument("--k", type=int, required=True)
    p_series.add_argument("--d", type=int, default=None)
    p_series.add_argument("--m", type=int, default=None)
    p_series.add_argument("--N", type=int, default=60)
    p_series.add_argument("--eq1", action="store_true", help="check the classical identity instead")
    p_series.set_defaults(func=cmd_series)

    return parser


def _add_format_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", dest="format", action="store_const", const="json", default="table")
    p.add_argument("--csv", dest="format", action="store_const", const="csv")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _error("ParseError", exc)
        return EXIT_USAGE
    except (NotInClassA, NotInClassB) as exc:
        _error(type(exc).__name__, exc)
        return EXIT_FAIL
    except BudgetExceeded as exc:
        _error("BudgetExceeded", exc)
        return EXIT_BUDGET
    except DomainError as exc:
        _error("DomainError", exc)
        return EXIT_USAGE


def _error(name: str, exc: Exception) -> None:
    sys.stderr.write(json.dumps({"error": name, "message": str(exc)}) + "\n")


if __name__ == "__main__":
    sys.exit(main())
