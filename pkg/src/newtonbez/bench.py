"""Timing harness: basis-preserving vs. basis-transforming Bezout construction.

Absolute times depend on the machine; only the ordering and the growth of
``t_trans / t_preserving`` are meaningful.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .bezout import bezout_newton_preserving, bezout_newton_via_transform
from .field import F64, RATIONAL, check_mode, with_counting
from .newton import random_instance

CSV_HEADER = ("n", "m", "size", "t_preserving", "t_trans", "ratio", "mults", "adds")


@dataclass
class BenchRecord:
    n: int
    m: int
    size: int
    t_preserving: float
    t_trans: float
    mults: Optional[int] = None
    adds: Optional[int] = None

    @property
    def ratio(self) -> float:
        return self.t_trans / self.t_preserving

    def row(self) -> list:
        return [
            self.n,
            self.m,
            f"{self.size}x{self.size}",
            f"{self.t_preserving:.6g}",
            f"{self.t_trans:.6g}",
            f"{self.ratio:.6g}",
            "" if self.mults is None else self.mults,
            "" if self.adds is None else self.adds,
        ]


def median_time(fn: Callable, *args, repeats: int = 3, warmup: int = 1) -> float:
    for _ in range(warmup):
        fn(*args)
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def degree_pairs(degrees: Iterable[int]) -> list[tuple[int, int]]:
    pairs = []
    for n in degrees:
        pairs.append((n, n))
        if n > 2:
            pairs.append((n, n - 2))
    return pairs


def bench_pair(n: int, m: int, field: str = F64, seed: int = 0, repeats: int = 3) -> BenchRecord:
    inst = random_instance(n, m, seed, field)
    t_pres = median_time(bezout_newton_preserving, inst.F, inst.G, repeats=repeats)
    t_trans = median_time(bezout_newton_via_transform, inst.F, inst.G, repeats=repeats)
    rec = BenchRecord(n, m, n, t_pres, t_trans)
    if field == RATIONAL:
        _, counter = with_counting(bezout_newton_preserving, inst.F, inst.G)
        rec.mults, rec.adds = counter.as_tuple()
    return rec


def run_bench(degrees, field: str = F64, seed: int = 0, repeats: int = 3, progress=None) -> list[BenchRecord]:
    check_mode(field)
    degrees = list(degrees)
    if not degrees:
        raise ValueError("at least one degree is required")
    if any(n < 2 for n in degrees):
        raise ValueError("every degree must be at least 2")
    records = []
    for k, (n, m) in enumerate(degree_pairs(degrees)):
        rec = bench_pair(n, m, field, seed + k, repeats)
        records.append(rec)
        if progress is not None:
            progress(rec)
    return records


def write_csv(path, records: Iterable[BenchRecord]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_HEADER)
        for rec in records:
            w.writerow(rec.row())
