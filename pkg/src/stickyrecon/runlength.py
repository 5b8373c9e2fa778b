"""Run-length view of q-ary sequences.

A sequence ``x = c_1^{u_1} ... c_r^{u_r}`` is represented as the pair
(composition, lengths): the run symbols with adjacent symbols distinct, and
the positive run lengths.  The map is a bijection on non-empty sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Sequence as _Seq

from .errors import InvalidInput

__all__ = [
    "Sequence",
    "RunProfile",
    "encode",
    "decode",
    "run_count",
    "parse_sequence",
    "format_sequence",
    "with_lengths",
]


@dataclass(frozen=True)
class Sequence:
    """Immutable non-empty word over the alphabet ``{0, ..., q-1}``."""

    symbols: tuple[int, ...]
    q: int = 4

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(int(a) for a in self.symbols))
        if self.q < 2:
            raise InvalidInput(f"alphabet size must be >= 2, got {self.q}")
        if not self.symbols:
            raise InvalidInput("empty sequence")
        for a in self.symbols:
            if not 0 <= a < self.q:
                raise InvalidInput(f"symbol {a} outside alphabet of size {self.q}")

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return format_sequence(self)


@dataclass(frozen=True)
class RunProfile:
    composition: tuple[int, ...]
    lengths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "composition", tuple(int(c) for c in self.composition))
        object.__setattr__(self, "lengths", tuple(int(u) for u in self.lengths))
        if not self.composition:
            raise InvalidInput("empty run profile")
        if len(self.composition) != len(self.lengths):
            raise InvalidInput(
                f"composition has {len(self.composition)} runs but "
                f"{len(self.lengths)} lengths were given"
            )
        for i in range(len(self.composition) - 1):
            if self.composition[i] == self.composition[i + 1]:
                raise InvalidInput(f"adjacent composition letters equal at run {i + 1}")
        for u in self.lengths:
            if u < 1:
                raise InvalidInput(f"run length must be >= 1, got {u}")
        for c in self.composition:
            if c < 0:
                raise InvalidInput(f"negative symbol {c}")

    @property
    def r(self) -> int:
        return len(self.lengths)


def encode(x: Sequence) -> RunProfile:
    """Split ``x`` into its maximal runs."""
    if not isinstance(x, Sequence):
        x = Sequence(tuple(x))
    comp, lengths = [], []
    for symbol, group in groupby(x.symbols):
        comp.append(symbol)
        lengths.append(sum(1 for _ in group))
    return RunProfile(tuple(comp), tuple(lengths))


def decode(p: RunProfile, q: int | None = None) -> Sequence:
    """Inverse of :func:`encode`.

    ``q`` defaults to the smallest alphabet size (at least 4) that holds every
    composition letter.
    """
    if q is None:
        q = max(4, max(p.composition) + 1)
    out: list[int] = []
    for c, u in zip(p.composition, p.lengths):
        out.extend([c] * u)
    return Sequence(tuple(out), q)


def run_count(x: Sequence) -> int:
    return len(encode(x).lengths)


def parse_sequence(text: str, q: int | None = None) -> Sequence:
    """Parse either the compact digit form ``"00311120"`` or ``"0,0,3,1"``.

    Without ``q`` the alphabet size is inferred as above: at least 4, large
    enough for the largest symbol.  With an explicit ``q > 10`` the text is
    always read as comma-separated, so ``"10"`` is the single symbol 10.
    """
    text = text.strip()
    if not text:
        raise InvalidInput("empty sequence text")
    try:
        if "," in text or (q is not None and q > 10):
            symbols = tuple(int(tok) for tok in text.split(","))
        else:
            if not text.isdigit():
                raise ValueError(text)
            symbols = tuple(int(ch) for ch in text)
    except ValueError:
        raise InvalidInput(f"cannot parse sequence {text!r}") from None
    if q is None:
        q = max(4, max(symbols) + 1)
    return Sequence(symbols, q)


def format_sequence(x: Sequence) -> str:
    if x.q <= 10:
        return "".join(str(a) for a in x.symbols)
    return ",".join(str(a) for a in x.symbols)


def with_lengths(composition: _Seq[int], lengths: _Seq[int], q: int) -> Sequence:
    return decode(RunProfile(tuple(composition), tuple(lengths)), q)
