"""Benchmark harness: run every solver on a batch of instances and tabulate
measured approximation ratios against the exact optimum."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from relay.delivery_model import DeliveryInstance
from relay.errors import InfeasibleInstanceError, OracleCapacityError, RelayError
from relay.solvers import exact_opt, greedy1, greedy_beta, matching_sweep, wk_beta

HEADER = (
    "instance", "W", "k", "greedy1", "greedy_wk", "matching", "exact",
    "ratio_g1", "ratio_gwk", "ratio_m",
)
SOLVERS = ("greedy1", "greedy_wk", "matching")


@dataclass(frozen=True)
class BenchRow:
    instance: str
    W: int
    k: int
    greedy1: int | str
    greedy_wk: int | str
    matching: int | str
    exact: int | str | None

    def ratio(self, solver: str) -> Fraction | None:
        value = getattr(self, solver)
        if not isinstance(value, int) or not isinstance(self.exact, int) or self.exact == 0:
            return None
        return Fraction(value, self.exact)

    def cells(self) -> list[str]:
        def fmt(r: Fraction | None) -> str:
            return "" if r is None else f"{float(r):.3f}"

        exact = "" if self.exact is None else self.exact
        return [
            self.instance, str(self.W), str(self.k),
            str(self.greedy1), str(self.greedy_wk), str(self.matching), str(exact),
            *(fmt(self.ratio(s)) for s in SOLVERS),
        ]


def _failure(exc: RelayError) -> str:
    if isinstance(exc, OracleCapacityError):
        return "capacity"
    if isinstance(exc, InfeasibleInstanceError):
        return "infeasible"
    return "error"


def _run(fn: Callable[[], int]) -> int | str:
    try:
        return fn()
    except RelayError as exc:
        return _failure(exc)


def bench_instance(name: str, inst: DeliveryInstance, with_exact: bool = True) -> BenchRow:
    return BenchRow(
        name,
        inst.W,
        inst.k,
        _run(lambda: greedy1(inst).range),
        _run(lambda: greedy_beta(inst, wk_beta(inst)).range),
        _run(lambda: matching_sweep(inst).range),
        _run(lambda: exact_opt(inst).range) if with_exact else None,
    )


def _bench_args(args: tuple[str, DeliveryInstance, bool]) -> BenchRow:
    return bench_instance(*args)


def run_bench(
    instances: Iterable[tuple[str, DeliveryInstance]],
    with_exact: bool = True,
    jobs: int = 1,
) -> list[BenchRow]:
    """One row per instance, in input order regardless of ``jobs``."""
    work = [(name, inst, with_exact) for name, inst in instances]
    if jobs <= 1:
        return [_bench_args(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_bench_args, work))


def to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADER)
    for row in rows:
        writer.writerow(row.cells())
    return buf.getvalue()


def format_table(rows: Sequence[BenchRow]) -> str:
    table = [list(HEADER)] + [row.cells() for row in rows]
    widths = [max(len(r[c]) for r in table) for c in range(len(HEADER))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in table]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
