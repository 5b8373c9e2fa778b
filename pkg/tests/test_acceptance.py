"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (visible with ``-s``) and the lines
are repeated, in order, in the pytest terminal summary.
"""

import random
import time
from itertools import combinations
from math import comb

from stickyrecon.bench import run_bench
from stickyrecon.channel import (
    ball_size_brute,
    contains,
    enumerate_asymmetric_ball,
    intersection_brute,
    intersection_size_brute,
    max_intersection_brute,
    worst_case_pair,
)
from stickyrecon.combinatorics import (
    BallSizeTable,
    ErrorBudget,
    ball_size_closed_form,
    ball_size_recursive,
    reads_required,
)
from stickyrecon.reconstruction import (
    FrequencyProfile,
    IterationCounter,
    Success,
    explore,
    find_satisfied_value_naive,
    find_satisfied_value_optimized,
    reconstruct,
)
from stickyrecon.runlength import encode, with_lengths


def test_criterion_1_recursion_equals_closed_form(report):
    start = time.perf_counter()
    bad = [
        (t, s, r)
        for t in range(9)
        for s in range(9)
        for r in range(1, 11)
        if ball_size_recursive(t, s, r) != ball_size_closed_form(t, s, r)
    ]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 5
    report(1, ok, f"810 points, mismatches={len(bad)}, {elapsed:.2f}s (< 5s)")
    assert ok, bad


def test_criterion_2_max_ball_size(report):
    start = time.perf_counter()
    rng = random.Random(2)
    exact_bad = []
    for t in range(4):
        for s in range(4):
            for r in range(1, 5):
                if ball_size_brute((s + 1,) * r, (t, s)) != ball_size_recursive(t, s, r):
                    exact_bad.append((t, s, r))

    def small_center():
        t, s, r = rng.randint(0, 3), rng.randint(1, 3), rng.randint(1, 4)
        u = [rng.randint(1, s + 3) for _ in range(r)]
        u[rng.randrange(r)] = rng.randint(1, s)
        return t, s, tuple(u)

    upper_bad = []
    for _ in range(200):
        t, s, u = small_center()
        if ball_size_brute(u, (t, s)) > ball_size_recursive(t, s, len(u)):
            upper_bad.append((t, s, u))

    shift_bad = []
    for _ in range(200):
        t, s, r = rng.randint(0, 3), rng.randint(0, 3), rng.randint(1, 4)
        u = tuple(rng.randint(1, s + 3) for _ in range(r))
        if ball_size_brute(u, (t, s)) > ball_size_brute(tuple(x + s for x in u), (t, s)):
            shift_bad.append((t, s, u))

    elapsed = time.perf_counter() - start
    ok = not (exact_bad or upper_bad or shift_bad) and elapsed < 60
    report(
        2,
        ok,
        f"exact misses={len(exact_bad)}/64, upper-bound misses={len(upper_bad)}/200, "
        f"shift misses={len(shift_bad)}/200, {elapsed:.2f}s (< 60s)",
    )
    assert ok, (exact_bad, upper_bad, shift_bad)


def test_criterion_3_intersection_tightness(report):
    gating, informative = [], []
    for t in range(3):
        for s in range(3):
            for r in range(1, 5):
                best, _, _ = max_intersection_brute(t, s, r, s + 3)
                if r >= 3:
                    pair = worst_case_pair(t, s, r)
                    best = max(best, intersection_size_brute(pair.u0, pair.v0, (t, s)))
                row = (t, s, r, best, reads_required(t, s, r) - 1)
                (gating if r >= 3 else informative).append(row)
    bad = [row for row in gating if row[3] != row[4]]
    info_match = sum(row[3] == row[4] for row in informative)
    ok = not bad
    report(
        3,
        ok,
        f"r in {{3,4}}: {len(gating) - len(bad)}/{len(gating)} exact; "
        f"r in {{1,2}} (informative): {info_match}/{len(informative)} equal",
    )
    assert ok, bad


def test_criterion_4_insertion_only_reads(report):
    bad = [
        (t, r)
        for t in range(7)
        for r in range(1, 9)
        if reads_required(t, 0, r) != comb(t + r - 1, r) + 1
    ]
    report(4, not bad, f"56 points, mismatches={len(bad)}")
    assert not bad


def _random_composition(rng, r, q):
    comp = [rng.randrange(q)]
    while len(comp) < r:
        comp.append(rng.choice([c for c in range(q) if c != comp[-1]]))
    return tuple(comp)


def test_criterion_5_round_trip(report):
    start = time.perf_counter()
    rng = random.Random(5)
    failures = []
    for trial in range(1000):
        q = rng.randint(2, 4)
        r = rng.randint(3, 10)
        t, s = rng.randint(0, 3), rng.randint(0, 3)
        u = tuple(rng.randint(s + 1, s + 4) for _ in range(r))
        comp = _random_composition(rng, r, q)
        x = with_lengths(comp, u, q)
        ball = list(enumerate_asymmetric_ball(u, (t, s)))
        M = reads_required(t, s, r)
        reads = [with_lengths(comp, v, q) for v in rng.sample(ball, M)]
        if reconstruct(reads, (t, s)) != Success(x, u):
            failures.append((trial, t, s, u))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120
    report(5, ok, f"{1000 - len(failures)}/1000 exact recoveries, {elapsed:.1f}s (< 120s)")
    assert ok, failures[:5]


def test_criterion_6_necessity_witness(report):
    notes, ok = [], True
    for t, s, r in [(1, 1, 3), (2, 1, 3), (1, 2, 3)]:
        pair = worst_case_pair(t, s, r)
        shared = intersection_brute(pair.u0, pair.v0, (t, s))
        consistent = all(contains(pair.u0, v, (t, s)) and contains(pair.v0, v, (t, s)) for v in shared)
        comp = (0, 1, 2)
        found = explore([with_lengths(comp, v, 4) for v in shared], (t, s))
        centers = {encode(y).lengths for y in found}
        good = (
            len(shared) == reads_required(t, s, r) - 1
            and consistent
            and len(centers) >= 2
            and {pair.u0, pair.v0} <= centers
        )
        ok = ok and good
        notes.append(f"({t},{s},{r}) reads={len(shared)} candidates={len(centers)}")
    report(6, ok, "; ".join(notes))
    assert ok


def _profiles(a, w, total):
    """Every count vector on [a, a+w] summing to total with nonzero endpoints."""
    if w == 0:
        yield FrequencyProfile(1, a, a, (total,))
        return
    # endpoints take 1 each, the remaining total-2 is spread over w+1 slots
    spare = total - 2
    for bars in combinations(range(spare + w), w):
        parts, prev = [], -1
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(spare + w - prev - 1)
        parts[0] += 1
        parts[-1] += 1
        yield FrequencyProfile(1, a, a + w, tuple(parts))


# cases whose exhaustive profile count stays under this are included
EXHAUSTIVE_CAP = 2_000_000


def exhaustive_cases():
    cases = []
    for r in (1, 2, 3):
        for t in range(4):
            for s in range(4):
                M = reads_required(t, s, r)
                n = sum(1 if w == 0 else comb(M - 2 + w, w) for w in range(t + s + 1))
                if n <= EXHAUSTIVE_CAP:
                    cases.append((t, s, r))
    return cases


def test_criterion_7_naive_equals_optimized(report):
    table = BallSizeTable(3, 3, 3)
    checked, mismatches = 0, []
    cases = exhaustive_cases()
    for t, s, r in cases:
        budget = ErrorBudget(t, s)
        M = reads_required(t, s, r)
        # a single read cannot have two distinct nonzero endpoints
        widths = range(t + s + 1) if M >= 2 else [0]
        # a=1 exercises the clamp at 1, a=t+2 leaves the range unclamped
        for a in sorted({1, t + 2}):
            for w in widths:
                for prof in _profiles(a, w, M):
                    checked += 1
                    vn = find_satisfied_value_naive(prof, budget, r, table)
                    vo = find_satisfied_value_optimized(prof, budget, r, table)
                    if vn != vo:
                        mismatches.append((t, s, r, prof))

    rng = random.Random(7)
    fuzz_table = BallSizeTable(12, 12, 8)
    for _ in range(10_000):
        t, s, r = rng.randint(0, 12), rng.randint(0, 12), rng.randint(1, 8)
        budget = ErrorBudget(t, s)
        M = fuzz_table.reads_required(t, s, r)
        w = rng.randint(0, t + s) if M >= 2 else 0
        a = rng.randint(1, t + 3)
        cuts = sorted(rng.randint(0, M - 2) for _ in range(w)) if w else []
        parts = [hi - lo for lo, hi in zip([0] + cuts, cuts + [M - 2])] if w else [M]
        if w:
            parts[0] += 1
            parts[-1] += 1
        prof = FrequencyProfile(1, a, a + w, tuple(parts))
        cn, co = IterationCounter(), IterationCounter()
        if find_satisfied_value_naive(prof, budget, r, fuzz_table, cn) != find_satisfied_value_optimized(
            prof, budget, r, fuzz_table, co
        ):
            mismatches.append((t, s, r, prof))

    ok = not mismatches
    report(
        7,
        ok,
        f"{checked} exhaustive profiles over {len(cases)} (t,s,r) cases with t,s<=3, r<=3, "
        f"plus 10000 fuzz; mismatches={len(mismatches)}",
    )
    assert ok, mismatches[:5]


def test_criterion_8_iteration_counts(report):
    rows = run_bench(trials=50, seed=8)
    over = [row for row in rows if not row.within_bound]
    disagree = [row for row in rows if not row.agree or row.naive_value != row.expected]
    big = [row for row in rows if row.t == row.s == 500]
    naive = sum(row.naive_iterations for row in big)
    opt = sum(row.optimized_iterations for row in big)
    ratio = naive / opt if opt else float("inf")
    ok = not over and not disagree and ratio >= 10
    report(
        8,
        ok,
        f"{len(rows)} bench profiles, bound violations={len(over)}, disagreements={len(disagree)}, "
        f"naive/optimized at t=s=500 = {ratio:.1f}x (>= 10x)",
    )
    assert ok
