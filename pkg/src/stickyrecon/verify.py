"""Cross-checks of the closed formulas against brute-force enumeration."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .channel import (
    DEFAULT_MAX_STATES,
    ball_size_brute,
    intersection_size_brute,
    max_intersection_brute,
    worst_case_pair,
)
from .combinatorics import (
    ErrorBudget,
    ball_size_closed_form,
    ball_size_recursive,
    binomial,
    reads_required,
)

PASS, FAIL, INFO = "PASS", "FAIL", "INFO"


@dataclass(frozen=True)
class CheckResult:
    check: str
    t: int
    s: int
    r: int
    status: str
    detail: str = ""

    def key(self):
        return (self.check, self.t, self.s, self.r)


def check_closed_form(t_max, s_max, r_max, paper_sign=False):
    out = []
    for t in range(t_max + 1):
        for s in range(s_max + 1):
            for r in range(1, r_max + 1):
                rec = ball_size_recursive(t, s, r)
                cf = ball_size_closed_form(t, s, r, paper_sign=paper_sign)
                status = PASS if rec == cf else FAIL
                out.append(CheckResult("closed_form", t, s, r, status, f"recursion={rec} closed_form={cf}"))
    return out


def check_s0(t_max, r_max):
    out = []
    for t in range(t_max + 1):
        for r in range(1, r_max + 1):
            a = ball_size_recursive(t, 0, r)
            n = reads_required(t, 0, r)
            ok = a == binomial(t + r, r) and n == binomial(t + r - 1, r) + 1
            out.append(CheckResult("insertion_only", t, 0, r, PASS if ok else FAIL, f"A={a} N={n}"))
    return out


def _random_vector(rng, r, hi):
    return tuple(rng.randint(1, hi) for _ in range(r))


def check_max_ball(t_max, s_max, r_max, rng, samples=5, max_states=DEFAULT_MAX_STATES):
    """Ball size is exactly A when every run is longer than s, at most A otherwise."""
    out = []
    for t in range(t_max + 1):
        for s in range(s_max + 1):
            budget = ErrorBudget(t, s)
            for r in range(1, r_max + 1):
                A = ball_size_recursive(t, s, r)
                big = ball_size_brute((s + 1,) * r, budget, max_states)
                sizes = [ball_size_brute(_random_vector(rng, r, s + 3), budget, max_states) for _ in range(samples)]
                ok = big == A and all(n <= A for n in sizes)
                out.append(CheckResult("max_ball", t, s, r, PASS if ok else FAIL, f"A={A} at_s+1={big} max_random={max(sizes)}"))
    return out


def check_shift_monotone(t_max, s_max, r_max, rng, samples=5, max_states=DEFAULT_MAX_STATES):
    """Shifting every run up by s never shrinks the ball."""
    out = []
    for t in range(t_max + 1):
        for s in range(s_max + 1):
            budget = ErrorBudget(t, s)
            for r in range(1, r_max + 1):
                bad = []
                for _ in range(samples):
                    u = _random_vector(rng, r, s + 3)
                    shifted = tuple(x + s for x in u)
                    if ball_size_brute(u, budget, max_states) > ball_size_brute(shifted, budget, max_states):
                        bad.append(u)
                out.append(CheckResult("shift_monotone", t, s, r, FAIL if bad else PASS, f"violations={bad}"))
    return out


def check_max_intersection(t_max, s_max, r_max, entry_slack=3, max_states=DEFAULT_MAX_STATES):
    """Largest pairwise intersection equals reads_required - 1.

    Searches all centers with entries in ``[1, s + entry_slack]`` and, for
    r >= 3, also the explicit worst-case pair.  Rows with r < 3 are INFO
    when they disagree, since the explicit construction needs three runs.
    """
    out = []
    for t in range(t_max + 1):
        for s in range(s_max + 1):
            for r in range(1, r_max + 1):
                expected = reads_required(t, s, r) - 1
                best, u, v = max_intersection_brute(t, s, r, s + entry_slack, max_states)
                detail = f"expected={expected} search={best} at {u},{v}"
                if r >= 3:
                    pair = worst_case_pair(t, s, r)
                    wc = intersection_size_brute(pair.u0, pair.v0, (t, s), max_states)
                    best = max(best, wc)
                    detail += f" worst_case_pair={wc}"
                    status = PASS if best == expected and wc == expected else FAIL
                else:
                    status = PASS if best == expected else INFO
                out.append(CheckResult("max_intersection", t, s, r, status, detail))
    return out


def run_all(t_max, s_max, r_max, seed=0, paper_sign=False, entry_slack=3, max_states=DEFAULT_MAX_STATES):
    rng = random.Random(seed)
    results = []
    results += check_closed_form(t_max, s_max, r_max, paper_sign)
    results += check_s0(t_max, r_max)
    results += check_shift_monotone(t_max, s_max, r_max, rng, max_states=max_states)
    results += check_max_ball(t_max, s_max, r_max, rng, max_states=max_states)
    results += check_max_intersection(t_max, s_max, r_max, entry_slack, max_states)
    return sorted(results, key=CheckResult.key)
