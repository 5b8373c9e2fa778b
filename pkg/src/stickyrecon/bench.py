"""Synthetic frequency profiles and the naive-vs-optimized comparison."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .combinatorics import BallSizeTable, ErrorBudget, default_table
from .reconstruction import (
    FrequencyProfile,
    IterationCounter,
    find_satisfied_value_naive,
    find_satisfied_value_optimized,
)

DEFAULT_SIZES = ((5, 5), (50, 50), (500, 500))


def random_profile(
    t: int, s: int, r: int, rng: random.Random, table: BallSizeTable | None = None
) -> tuple[FrequencyProfile, int]:
    """A profile that admits exactly one run length, and that length.

    Counts off the planted length are drawn under their thresholds; the
    planted length takes the rest so the counts sum to ``reads_required``.
    """
    A = table or default_table()
    w = rng.randint(0, max(0, s + t - 1))
    a = rng.randint(1, s + 2)
    b = a + w
    # with reads_required reads the true length is always observed
    u = rng.randint(max(1, b - t, a), min(a + s, b))
    counts = []
    for k in range(a, b + 1):
        if k == u:
            counts.append(0)
            continue
        thr = A.get(t, s - u + k, r - 1) if k < u else A.get(t - k + u, s, r - 1)
        floor = 1 if k in (a, b) else 0
        counts.append(rng.randint(floor, thr))
    counts[u - a] = A.reads_required(t, s, r) - sum(counts)
    return FrequencyProfile(1, a, b, tuple(counts)), u


@dataclass
class BenchRow:
    t: int
    s: int
    r: int
    trial: int
    width: int
    expected: int
    naive_value: int | None
    optimized_value: int | None
    naive_iterations: int
    optimized_iterations: int
    naive_seconds: float = 0.0
    optimized_seconds: float = 0.0

    @property
    def agree(self) -> bool:
        return self.naive_value == self.optimized_value

    @property
    def within_bound(self) -> bool:
        return self.optimized_iterations <= 2 * (self.t + self.s) + 2


def run_bench(sizes=DEFAULT_SIZES, trials: int = 20, r: int = 3, seed: int = 0, timing: bool = False):
    rows = []
    for t, s in sizes:
        table = BallSizeTable(t, s, max(r - 1, 1))
        budget = ErrorBudget(t, s)
        rng = random.Random(f"{seed}:{t}:{s}:{r}")
        for trial in range(trials):
            prof, u = random_profile(t, s, r, rng, table)
            cn, co = IterationCounter(), IterationCounter()
            t0 = time.perf_counter()
            vn = find_satisfied_value_naive(prof, budget, r, table, cn)
            t1 = time.perf_counter()
            vo = find_satisfied_value_optimized(prof, budget, r, table, co)
            t2 = time.perf_counter()
            row = BenchRow(t, s, r, trial, prof.b - prof.a, u, vn, vo, cn.iterations, co.iterations)
            if timing:
                row.naive_seconds, row.optimized_seconds = t1 - t0, t2 - t1
            rows.append(row)
    return rows
