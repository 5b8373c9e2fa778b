"""The (t, s)-sticky-insdel channel.

Sticky errors never create or destroy a run, so a sequence ``y`` is in the
ball of ``x`` exactly when both share a composition and the run-length
vector of ``y`` lies in the asymmetric ball of ``x``'s run-length vector:

    sum_i max(0, u_i - v_i) <= s   and   sum_i max(0, v_i - u_i) <= t

Everything here that enumerates is an oracle, bounded by ``max_states``.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence as _Seq

from .combinatorics import ErrorBudget, default_table
from .errors import InvalidInput, RunTooShort, WorkBoundExceeded
from .runlength import RunProfile, Sequence, decode, encode

__all__ = [
    "DEFAULT_MAX_STATES",
    "ChannelRng",
    "WorstCasePair",
    "apply_sticky_insertion",
    "apply_sticky_deletion",
    "transmit",
    "enumerate_asymmetric_ball",
    "enumerate_sticky_ball",
    "contains",
    "in_sticky_ball",
    "ball_size_brute",
    "intersection_size_brute",
    "intersection_brute",
    "max_intersection_brute",
    "worst_case_pair",
    "sample_distinct_reads",
]

DEFAULT_MAX_STATES = 10**7


class ChannelRng(random.Random):
    """Seeded generator owned by one simulation; never shared across trials."""

    def __init__(self, seed: int = 0):
        if not 0 <= seed < 2**64:
            raise InvalidInput(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.seed_value = seed
        super().__init__(seed)


@dataclass(frozen=True)
class WorstCasePair:
    u0: tuple[int, ...]
    v0: tuple[int, ...]
    k: int


def _budget(budget) -> ErrorBudget:
    if isinstance(budget, ErrorBudget):
        return budget
    t, s = budget
    return ErrorBudget(t, s)


def _run_index(p: RunProfile, run_index: int) -> int:
    if not 1 <= run_index <= p.r:
        raise InvalidInput(f"run index {run_index} outside [1, {p.r}]")
    return run_index - 1


def apply_sticky_insertion(x: Sequence, run_index: int) -> Sequence:
    """Duplicate one symbol of run ``run_index`` (1-based)."""
    p = encode(x)
    j = _run_index(p, run_index)
    lengths = list(p.lengths)
    lengths[j] += 1
    return decode(RunProfile(p.composition, tuple(lengths)), x.q)


def apply_sticky_deletion(x: Sequence, run_index: int) -> Sequence:
    p = encode(x)
    j = _run_index(p, run_index)
    if p.lengths[j] < 2:
        raise RunTooShort(f"run {run_index} has length 1 and cannot be removed")
    lengths = list(p.lengths)
    lengths[j] -= 1
    return decode(RunProfile(p.composition, tuple(lengths)), x.q)


def transmit(x: Sequence, budget, rng: ChannelRng) -> Sequence:
    """Pass ``x`` through the channel once.

    Draws ``a ~ U{0..t}`` insertions and ``b ~ U{0..s}`` deletions, applies
    them in a shuffled order, each at a uniformly chosen run.  A deletion
    is drawn only among runs of length >= 2 at that moment and is dropped
    when there are none.
    """
    budget = _budget(budget)
    p = encode(x)
    lengths = list(p.lengths)
    a = rng.randint(0, budget.t)
    b = rng.randint(0, budget.s)
    ops = ["ins"] * a + ["del"] * b
    rng.shuffle(ops)
    for op in ops:
        if op == "ins":
            lengths[rng.randrange(len(lengths))] += 1
        else:
            eligible = [j for j, u in enumerate(lengths) if u >= 2]
            if eligible:
                lengths[rng.choice(eligible)] -= 1
    return decode(RunProfile(p.composition, tuple(lengths)), x.q)


def contains(u: _Seq[int], v: _Seq[int], budget) -> bool:
    """True iff ``v`` is in the asymmetric ball centered at ``u``."""
    budget = _budget(budget)
    if len(u) != len(v):
        raise InvalidInput(f"length mismatch: {len(u)} vs {len(v)}")
    down = up = 0
    for ui, vi in zip(u, v):
        if ui > vi:
            down += ui - vi
        else:
            up += vi - ui
    return down <= budget.s and up <= budget.t


def in_sticky_ball(x: Sequence, y: Sequence, budget) -> bool:
    px, py = encode(x), encode(y)
    return px.composition == py.composition and contains(px.lengths, py.lengths, budget)


def _guard(u, budget, max_states):
    bound = default_table().get(budget.t, budget.s, len(u))
    if bound > max_states:
        raise WorkBoundExceeded(bound, max_states, f"ball of {tuple(u)} with t={budget.t}, s={budget.s}")


def enumerate_asymmetric_ball(
    u: _Seq[int], budget, max_states: int = DEFAULT_MAX_STATES
) -> Iterator[tuple[int, ...]]:
    """Yield every vector of the ball around ``u`` once, lexicographically."""
    budget = _budget(budget)
    u = tuple(u)
    if not u or min(u) < 1:
        raise InvalidInput(f"center must be a non-empty vector of positive ints, got {u}")
    _guard(u, budget, max_states)
    r = len(u)
    prefix = [0] * r

    def walk(i, t_left, s_left):
        if i == r:
            yield tuple(prefix)
            return
        ui = u[i]
        for vi in range(max(1, ui - s_left), ui + t_left + 1):
            prefix[i] = vi
            if vi < ui:
                yield from walk(i + 1, t_left, s_left - (ui - vi))
            else:
                yield from walk(i + 1, t_left - (vi - ui), s_left)

    return walk(0, budget.t, budget.s)


def enumerate_sticky_ball(
    x: Sequence, budget, max_states: int = DEFAULT_MAX_STATES
) -> Iterator[Sequence]:
    p = encode(x)
    for v in enumerate_asymmetric_ball(p.lengths, budget, max_states):
        yield decode(RunProfile(p.composition, v), x.q)


def ball_size_brute(u: _Seq[int], budget, max_states: int = DEFAULT_MAX_STATES) -> int:
    return sum(1 for _ in enumerate_asymmetric_ball(u, budget, max_states))


def intersection_brute(
    u: _Seq[int], v: _Seq[int], budget, max_states: int = DEFAULT_MAX_STATES
) -> list[tuple[int, ...]]:
    """Vectors in both balls, in lexicographic order."""
    budget = _budget(budget)
    if len(u) != len(v):
        raise InvalidInput(f"length mismatch: {len(u)} vs {len(v)}")
    return [w for w in enumerate_asymmetric_ball(u, budget, max_states) if contains(v, w, budget)]


def intersection_size_brute(
    u: _Seq[int], v: _Seq[int], budget, max_states: int = DEFAULT_MAX_STATES
) -> int:
    return len(intersection_brute(u, v, budget, max_states))


def max_intersection_brute(
    t: int, s: int, r: int, max_entry: int, max_states: int = DEFAULT_MAX_STATES
):
    """Largest ``|ball(u) & ball(v)|`` over distinct centers in ``[1, max_entry]^r``.

    Returns ``(size, u, v)`` for one maximizing pair.  Every ball is built
    once; pair counts come from an index of which centers hold each vector.
    """
    budget = ErrorBudget(t, s)
    centers = list(product(range(1, max_entry + 1), repeat=r))
    if len(centers) < 2:
        raise InvalidInput("need at least two centers")
    work = len(centers) * default_table().get(t, s, r)
    if work > max_states:
        raise WorkBoundExceeded(work, max_states, f"pair search t={t}, s={s}, r={r}, entries<={max_entry}")
    holders: dict[tuple[int, ...], list[int]] = {}
    balls = []
    for ci, c in enumerate(centers):
        ball = list(enumerate_asymmetric_ball(c, budget, max_states))
        balls.append(ball)
        for w in ball:
            holders.setdefault(w, []).append(ci)
    best = (-1, None, None)
    for ci, ball in enumerate(balls):
        counts = Counter()
        for w in ball:
            for cj in holders[w]:
                if cj > ci:
                    counts[cj] += 1
        for cj, n in counts.items():
            if n > best[0]:
                best = (n, centers[ci], centers[cj])
    if best[0] < 0:
        # no two balls meet at all
        best = (0, centers[0], centers[1])
    return best


def worst_case_pair(t: int, s: int, r: int, k: int = 1) -> WorstCasePair:
    """Two centers whose balls share ``reads_required(t, s, r) - 1`` vectors.

    They differ only in the first two runs, ``(s+2, s+1)`` against
    ``(s+1, s+2)``; the third run is ``s + k`` and the rest ``s + 1``.
    """
    if t < 0 or s < 0:
        raise InvalidInput(f"error budget must be non-negative, got t={t}, s={s}")
    if r < 3:
        raise InvalidInput(f"worst-case construction needs r >= 3, got r={r}")
    if k < 1:
        raise InvalidInput(f"k must be >= 1, got {k}")
    tail = (s + k,) + (s + 1,) * (r - 3)
    return WorstCasePair((s + 2, s + 1) + tail, (s + 1, s + 2) + tail, k)


def sample_distinct_reads(
    x: Sequence, budget, n: int, rng: random.Random, max_states: int = DEFAULT_MAX_STATES
) -> list[Sequence]:
    """``n`` distinct members of the ball of ``x``, drawn without replacement."""
    ball = list(enumerate_sticky_ball(x, budget, max_states))
    if n > len(ball):
        raise InvalidInput(f"requested {n} distinct reads but the ball holds only {len(ball)}")
    return rng.sample(ball, n)
