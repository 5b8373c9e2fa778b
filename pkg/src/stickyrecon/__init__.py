"""Exact sequence reconstruction for the (t, s)-sticky-insdel channel."""

from .channel import (
    ChannelRng,
    WorstCasePair,
    apply_sticky_deletion,
    apply_sticky_insertion,
    ball_size_brute,
    contains,
    enumerate_asymmetric_ball,
    intersection_size_brute,
    sample_distinct_reads,
    transmit,
    worst_case_pair,
)
from .combinatorics import (
    BallSizeTable,
    ErrorBudget,
    ball_size_closed_form,
    ball_size_recursive,
    binomial,
    max_intersection,
    reads_required,
)
from .errors import InvalidInput, RunTooShort, StickyReconError, WorkBoundExceeded
from .reconstruction import (
    Failure,
    FailureReason,
    FrequencyProfile,
    Success,
    brute_force_candidates,
    check_valid,
    explore,
    find_frequency,
    find_satisfied_value_naive,
    find_satisfied_value_optimized,
    reconstruct,
)
from .runlength import RunProfile, Sequence, decode, encode, format_sequence, parse_sequence, run_count

__version__ = "0.1.0"
