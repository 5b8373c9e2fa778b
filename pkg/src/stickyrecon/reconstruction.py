"""Recover a transmitted sequence from distinct sticky-insdel channel outputs.

Each run length is decoded independently.  For run ``j`` let ``a``/``b``
be the smallest/largest observed length and ``c[k]`` how many reads show
length ``k``.  The true length ``u`` satisfies

1. ``b - t <= u <= a + s``
2. ``c[k] <= A(t, s - u + k, r - 1)`` for ``a <= k < u``
3. ``c[k] <= A(t - k + u, s, r - 1)`` for ``u < k <= b``

and with at least ``reads_required(t, s, r)`` distinct reads no other
value does.  Condition 2 only gets harder as ``u`` grows and condition 3
only gets harder as ``u`` shrinks, which is what the two-pointer search
exploits.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence as _Seq, Union

from .channel import DEFAULT_MAX_STATES, contains
from .combinatorics import BallSizeTable, ErrorBudget, default_table
from .errors import InvalidInput, WorkBoundExceeded
from .runlength import RunProfile, Sequence, decode, encode

__all__ = [
    "FailureReason",
    "Success",
    "Failure",
    "FrequencyProfile",
    "check_valid",
    "find_frequency",
    "find_satisfied_value_naive",
    "find_satisfied_value_optimized",
    "reconstruct",
    "brute_force_candidates",
    "explore",
]


class FailureReason(enum.Enum):
    COMPOSITION_MISMATCH = "CompositionMismatch"
    SPREAD_EXCEEDED = "SpreadExceeded"
    NO_SATISFYING_VALUE = "NoSatisfyingValue"
    DUPLICATE_READS = "DuplicateReads"
    INSUFFICIENT_READS = "InsufficientReads"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Success:
    x: Sequence
    lengths: tuple[int, ...]

    ok = True


@dataclass(frozen=True)
class Failure:
    reason: FailureReason
    detail: str = ""

    ok = False


ReconstructionOutcome = Union[Success, Failure]


@dataclass(frozen=True)
class FrequencyProfile:
    """Length statistics of one run across all reads.

    ``counts[i]`` is the number of reads whose run has length ``a + i``.
    """

    j: int
    a: int
    b: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if self.a < 1 or self.b < self.a:
            raise InvalidInput(f"bad window [{self.a}, {self.b}]")
        if len(self.counts) != self.b - self.a + 1:
            raise InvalidInput("counts must cover the window [a, b] exactly")
        if any(c < 0 for c in self.counts):
            raise InvalidInput("negative count")
        if self.counts[0] < 1 or self.counts[-1] < 1:
            raise InvalidInput("window endpoints must be observed at least once")

    def count(self, k: int) -> int:
        if self.a <= k <= self.b:
            return self.counts[k - self.a]
        return 0

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass
class IterationCounter:
    iterations: int = 0


def check_valid(reads: _Seq[Sequence]) -> bool:
    """True iff every read has the same run composition as the first."""
    if not reads:
        raise InvalidInput("no reads given")
    comp = encode(reads[0]).composition
    return all(encode(y).composition == comp for y in reads[1:])


def find_frequency(j: int, vectors: _Seq[_Seq[int]]) -> FrequencyProfile:
    """Profile of run ``j`` (1-based) over the run-length vectors of the reads."""
    if not vectors:
        raise InvalidInput("no vectors given")
    column = [v[j - 1] for v in vectors]
    a, b = min(column), max(column)
    counts = [0] * (b - a + 1)
    for k in column:
        counts[k - a] += 1
    return FrequencyProfile(j, a, b, tuple(counts))


def _window(p: FrequencyProfile, budget: ErrorBudget):
    return max(1, p.b - budget.t), p.a + budget.s


def find_satisfied_value_naive(
    profile: FrequencyProfile,
    budget: ErrorBudget,
    r: int,
    table: BallSizeTable | None = None,
    counter: IterationCounter | None = None,
) -> Optional[int]:
    """Smallest admissible run length, or ``None``; tests every candidate.

    Costs about ``(s + t - (b - a)) * (b - a)`` threshold comparisons.
    """
    A = table or default_table()
    t, s = budget.t, budget.s
    a, b = profile.a, profile.b
    c = profile.count
    lo, hi = _window(profile, budget)
    n = 0
    found = None
    for u in range(lo, hi + 1):
        ok = True
        for k in range(a, min(u - 1, b) + 1):
            n += 1
            if c(k) > A.get(t, s - u + k, r - 1):
                ok = False
        for k in range(max(u + 1, a), b + 1):
            n += 1
            if c(k) > A.get(t - k + u, s, r - 1):
                ok = False
        if ok:
            found = u
            break
    if counter is not None:
        counter.iterations += n
    return found


def find_satisfied_value_optimized(
    profile: FrequencyProfile,
    budget: ErrorBudget,
    r: int,
    table: BallSizeTable | None = None,
    counter: IterationCounter | None = None,
) -> Optional[int]:
    """Same result as :func:`find_satisfied_value_naive` in linear time.

    The first sweep walks ``u`` down from ``a + s`` to the largest value
    meeting condition 2; the second walks ``u`` up from ``max(1, b - t)`` to
    the smallest value meeting condition 3.  Every comparison moves one of
    the two pointers, so at most ``2 (s + t) + 2`` comparisons are made
    when ``b - a <= s + t``.
    """
    A = table or default_table()
    t, s = budget.t, budget.s
    a, b = profile.a, profile.b
    c = profile.count
    lo, hi = _window(profile, budget)
    n = 0
    result = None

    # largest u meeting condition 2; k walks down through [a, u)
    u = hi
    k = min(b, u - 1)
    while k >= a and u >= lo:
        n += 1
        if c(k) > A.get(t, s - u + k, r - 1):
            u -= 1
            k = min(k, u - 1)
        else:
            k -= 1
    if u >= lo:
        top = u
        # smallest u meeting condition 3; k walks up through (u, b]
        u = lo
        k = max(a, u + 1)
        while k <= b and u <= top:
            n += 1
            if c(k) > A.get(t - k + u, s, r - 1):
                u += 1
                k = max(k, u + 1)
            else:
                k += 1
        if u <= top:
            result = u

    if counter is not None:
        counter.iterations += n
    return result


_FINDERS = {
    "naive": find_satisfied_value_naive,
    "optimized": find_satisfied_value_optimized,
}


def _distinct(reads):
    seen = set()
    for y in reads:
        key = y.symbols
        if key in seen:
            return False
        seen.add(key)
    return True


def _precheck(reads, budget, r_expected):
    if not reads:
        raise InvalidInput("no reads given")
    if not _distinct(reads):
        return Failure(FailureReason.DUPLICATE_READS, "reads must be pairwise distinct")
    if not check_valid(reads):
        return Failure(FailureReason.COMPOSITION_MISMATCH, "reads do not share one run composition")
    r = encode(reads[0]).r
    if r_expected is not None and r_expected != r:
        return Failure(FailureReason.COMPOSITION_MISMATCH, f"reads have {r} runs, expected {r_expected}")
    return None


def reconstruct(
    reads: _Seq[Sequence],
    budget,
    r_expected: int | None = None,
    *,
    strict: bool = True,
    finder: str = "optimized",
    table: BallSizeTable | None = None,
) -> ReconstructionOutcome:
    """Decode the transmitted sequence from distinct reads.

    With ``strict`` (the default) fewer than ``reads_required(t, s, r)``
    reads is a failure, since uniqueness is only guaranteed from that
    many.  Any returned sequence has every read inside its ball.
    """
    if not isinstance(budget, ErrorBudget):
        budget = ErrorBudget(*budget)
    table = table or default_table()
    find = _FINDERS[finder]
    reads = list(reads)
    bad = _precheck(reads, budget, r_expected)
    if bad is not None:
        return bad

    profiles = [encode(y) for y in reads]
    comp = profiles[0].composition
    r = len(comp)
    vectors = [p.lengths for p in profiles]
    if strict:
        need = table.reads_required(budget.t, budget.s, r)
        if len(reads) < need:
            return Failure(FailureReason.INSUFFICIENT_READS, f"{len(reads)} reads given, {need} required")

    u = []
    for j in range(1, r + 1):
        prof = find_frequency(j, vectors)
        spread = prof.b - prof.a
        if spread > budget.s + budget.t:
            return Failure(FailureReason.SPREAD_EXCEEDED, f"run {j} lengths span {prof.a}..{prof.b}")
        if spread == budget.s + budget.t:
            u.append(prof.a + budget.s)
            continue
        uj = find(prof, budget, r, table)
        if uj is None:
            return Failure(FailureReason.NO_SATISFYING_VALUE, f"no admissible length for run {j}")
        u.append(uj)

    u = tuple(u)
    for v in vectors:
        if not contains(u, v, budget):
            return Failure(FailureReason.NO_SATISFYING_VALUE, f"decoded lengths {u} do not cover read {v}")
    q = max(y.q for y in reads)
    return Success(decode(RunProfile(comp, u), q), u)


def _candidates_for_vectors(vectors, budget, max_states):
    r = len(vectors[0])
    ranges = []
    size = 1
    for j in range(r):
        col = [v[j] for v in vectors]
        lo, hi = max(1, max(col) - budget.t), min(col) + budget.s
        if lo > hi:
            return []
        ranges.append(range(lo, hi + 1))
        size *= hi - lo + 1
    if size > max_states:
        raise WorkBoundExceeded(size, max_states, "candidate box")
    return [u for u in product(*ranges) if all(contains(u, v, budget) for v in vectors)]


def brute_force_candidates(
    reads: _Seq[Sequence], budget, max_states: int = DEFAULT_MAX_STATES
) -> list[tuple[int, ...]]:
    """Every run-length vector whose ball holds all reads, lexicographically.

    The reads must share one composition.
    """
    if not isinstance(budget, ErrorBudget):
        budget = ErrorBudget(*budget)
    reads = list(reads)
    if not reads:
        raise InvalidInput("no reads given")
    if not check_valid(reads):
        raise InvalidInput("reads do not share one run composition")
    return _candidates_for_vectors([encode(y).lengths for y in reads], budget, max_states)


def explore(
    reads: _Seq[Sequence], budget, r_expected: int | None = None, max_states: int = DEFAULT_MAX_STATES
) -> Union[list[Sequence], Failure]:
    """All sequences consistent with ``reads``; no read-count requirement."""
    if not isinstance(budget, ErrorBudget):
        budget = ErrorBudget(*budget)
    reads = list(reads)
    bad = _precheck(reads, budget, r_expected)
    if bad is not None:
        return bad
    comp = encode(reads[0]).composition
    q = max(y.q for y in reads)
    return [decode(RunProfile(comp, u), q) for u in brute_force_candidates(reads, budget, max_states)]
