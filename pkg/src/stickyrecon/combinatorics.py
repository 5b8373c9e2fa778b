"""Exact ball sizes and reads-required counts for the sticky-insdel channel.

``A(t, s, r)`` is the largest asymmetric error ball over run-length vectors
with ``r`` runs, at most ``t`` unit increases and ``s`` unit decreases.
``reads_required(t, s, r)`` is the number of distinct channel outputs that
pins down the transmitted sequence; it is one more than the largest
intersection of two distinct balls.

All values are Python ints, so nothing overflows.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from .errors import InvalidInput

__all__ = [
    "ErrorBudget",
    "BallSizeTable",
    "binomial",
    "ball_size_recursive",
    "ball_size_closed_form",
    "reads_required",
    "max_intersection",
    "default_table",
]


@dataclass(frozen=True)
class ErrorBudget:
    """At most ``t`` sticky insertions and ``s`` sticky deletions."""

    t: int
    s: int

    def __post_init__(self):
        if self.t < 0 or self.s < 0:
            raise InvalidInput(f"error budget must be non-negative, got t={self.t}, s={self.s}")


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise InvalidInput(f"binomial({n}, {k}): arguments must be non-negative")
    return math.comb(n, k)


def _check(t, s, r):
    if t < 0 or s < 0:
        raise InvalidInput(f"error budget must be non-negative, got t={t}, s={s}")
    if r < 1:
        raise InvalidInput(f"number of runs must be >= 1, got r={r}")


class BallSizeTable:
    """Memoized ``A(t, s, r)`` over a growable box.

    Layer ``r`` is built from layer ``r - 1`` by the recursion

        A(t, s, r) = sum_{i=1..t} A(t-i, s, r-1) + sum_{i=1..s} A(t, s-i, r-1) + A(t, s, r-1)

    evaluated with running sums so each entry costs O(1).  Layer 0 is all
    ones (the empty vector has a one-point ball), which reproduces the base
    case ``A(t, s, 1) = t + s + 1``.  Lookups with negative ``t`` or ``s``
    return 0.  Growth is guarded by a lock; reads of a built box are
    lock-free.
    """

    def __init__(self, t_max: int = 0, s_max: int = 0, r_max: int = 1):
        self._lock = threading.Lock()
        self._t_max = -1
        self._s_max = -1
        self._layers: list[list[list[int]]] = []
        self.ensure(t_max, s_max, r_max)

    @property
    def box(self):
        return self._t_max, self._s_max, len(self._layers) - 1

    def ensure(self, t_max: int, s_max: int, r_max: int) -> None:
        if t_max <= self._t_max and s_max <= self._s_max and r_max < len(self._layers):
            return
        with self._lock:
            T = max(t_max, self._t_max)
            S = max(s_max, self._s_max)
            R = max(r_max, len(self._layers) - 1, 0)
            if T != self._t_max or S != self._s_max:
                layers = [[[1] * (S + 1) for _ in range(T + 1)]]
            else:
                layers = list(self._layers)
            while len(layers) <= R:
                layers.append(_next_layer(layers[-1], T, S))
            # publish dims after layers so concurrent readers never index past the end
            self._layers = layers
            self._t_max, self._s_max = T, S

    def get(self, t: int, s: int, r: int) -> int:
        """``A(t, s, r)`` for any ``r >= 0``; zero when ``t < 0`` or ``s < 0``."""
        if t < 0 or s < 0:
            return 0
        if r < 0:
            raise InvalidInput(f"r must be >= 0, got {r}")
        self.ensure(t, s, r)
        return self._layers[r][t][s]

    __call__ = get

    def reads_required(self, t: int, s: int, r: int) -> int:
        _check(t, s, r)
        total = 1
        for i in range(1, t + 1):
            total += self.get(t - i, s, r - 1)
        for i in range(1, s + 1):
            total += self.get(t, s - i, r - 1)
        return total


def _next_layer(prev, T, S):
    cur = [[0] * (S + 1) for _ in range(T + 1)]
    col_sums = [0] * (S + 1)
    for t in range(T + 1):
        row = prev[t]
        out = cur[t]
        row_sum = 0
        for s in range(S + 1):
            col_sums[s] += row[s]
            # col_sums[s] = sum_{i<=t} prev[i][s]; row_sum = sum_{j<s} prev[t][j]
            out[s] = col_sums[s] + row_sum
            row_sum += row[s]
    return cur


_default = BallSizeTable()


def default_table() -> BallSizeTable:
    return _default


def ball_size_recursive(t: int, s: int, r: int, table: BallSizeTable | None = None) -> int:
    _check(t, s, r)
    return (table or _default).get(t, s, r)


def ball_size_closed_form(t: int, s: int, r: int, paper_sign: bool = False) -> int:
    """Coefficient of ``x^t y^s`` in ``(1 - xy)^r / ((1 - x)(1 - y))^(r + 1)``.

    The alternating sign is ``(-1)^i``.  ``paper_sign=True`` uses
    ``(-1)^(r - i)`` instead, which is only kept to show that variant is
    wrong (it gives ``A(0, 0, 1) = -1``).
    """
    _check(t, s, r)
    total = 0
    for i in range(min(t, s, r) + 1):
        term = math.comb(r + t - i, r) * math.comb(r + s - i, r) * math.comb(r, i)
        sign_exp = (r - i) if paper_sign else i
        total += -term if sign_exp % 2 else term
    return total


def reads_required(t: int, s: int, r: int, table: BallSizeTable | None = None) -> int:
    """Distinct outputs needed to recover any sequence with ``r`` runs."""
    return (table or _default).reads_required(t, s, r)


def max_intersection(t: int, s: int, r: int, table: BallSizeTable | None = None) -> int:
    return reads_required(t, s, r, table) - 1
