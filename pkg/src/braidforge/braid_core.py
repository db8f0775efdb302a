"""
Braid words, their underlying permutations, and strand tracking.

A braid word on ``p`` strands is a tuple of nonzero integers; ``+i`` is the
Artin generator sigma_i (strands at positions i and i+1 cross positively) and
``-i`` its inverse. Words are read top to bottom, left to right, so
``concat(u, v)`` stacks ``u`` above ``v``.

Strands are named by the top position at which they enter the word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class BraidError(ValueError):
    """Raised for malformed braid words or out-of-range arguments."""


class BraidParseError(BraidError):
    def __init__(self, message: str, token_index: int | None = None):
        if token_index is not None:
            message = f"token {token_index}: {message}"
        super().__init__(message)
        self.token_index = token_index


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(g) for g in self.letters))
        if self.strands < 1:
            raise BraidError(f"strand count must be positive, got {self.strands}")
        for g in self.letters:
            if g == 0 or abs(g) > self.strands - 1:
                raise BraidError(f"letter {g} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return format_braid(self)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, n: int) -> BraidWord:
        if n < 0:
            raise BraidError("negative powers are not supported on words")
        return BraidWord(self.strands, self.letters * n)


@dataclass(frozen=True)
class Permutation:
    """``images[j - 1]`` is the bottom position of the strand entering at top ``j``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BraidError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def is_identity(self) -> bool:
        return all(img == j for j, img in enumerate(self.images, 1))

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other`` (stacking ``self`` above ``other``)."""
        if other.size != self.size:
            raise BraidError("permutation sizes differ")
        return Permutation(tuple(other(img) for img in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for j, img in enumerate(self.images, 1):
            inv[img - 1] = j
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles ordered by least element, each starting at its least element."""
        seen = set()
        out = []
        for j in range(1, self.size + 1):
            if j in seen:
                continue
            cyc = []
            x = j
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            out.append(tuple(cyc))
        return out


@dataclass(frozen=True)
class CrossingEvent:
    letter_index: int
    partner: int
    sign: int


@dataclass(frozen=True)
class StrandTrace:
    start_position: int
    positions: tuple[int, ...]
    crossing_events: tuple[CrossingEvent, ...] = field(default=())

    @property
    def end_position(self) -> int:
        return self.positions[-1]


_HEADER = re.compile(r"^\s*(\S+?)\s*:(.*)$", re.S)


def parse_braid(text: str) -> BraidWord:
    """Parse ``"<p>: g1 g2 ... gn"``.

    Errors carry the offending token's index (0 is the strand count,
    letters count from 1).
    """
    m = _HEADER.match(text)
    if m is None:
        raise BraidParseError("expected '<strands>: <letters>'", 0)
    head, body = m.groups()
    try:
        p = int(head)
    except ValueError:
        raise BraidParseError(f"strand count {head!r} is not an integer", 0) from None
    if p < 1:
        raise BraidParseError(f"strand count must be positive, got {p}", 0)
    letters = []
    for idx, tok in enumerate(body.split(), 1):
        if not re.fullmatch(r"[+-]?\d+", tok):
            raise BraidParseError(f"{tok!r} is not an integer", idx)
        g = int(tok)
        if g == 0:
            raise BraidParseError("letter 0 is not a generator", idx)
        if abs(g) >= p:
            raise BraidParseError(f"letter {g} out of range for {p} strands", idx)
        letters.append(g)
    return BraidWord(p, tuple(letters))


def format_braid(w: BraidWord) -> str:
    if not w.letters:
        return f"{w.strands}:"
    return f"{w.strands}: " + " ".join(str(g) for g in w.letters)


def permutation_of(w: BraidWord) -> Permutation:
    strand_at = list(range(w.strands + 1))
    for g in w.letters:
        i = abs(g)
        strand_at[i], strand_at[i + 1] = strand_at[i + 1], strand_at[i]
    images = [0] * w.strands
    for pos in range(1, w.strands + 1):
        images[strand_at[pos] - 1] = pos
    return Permutation(tuple(images))


def concat(u: BraidWord, v: BraidWord, *more: BraidWord) -> BraidWord:
    words = (u, v) + more
    p = u.strands
    for x in words[1:]:
        if x.strands != p:
            raise BraidError(f"strand counts differ: {p} vs {x.strands}")
    return BraidWord(p, tuple(g for x in words for g in x.letters))


def power(letters: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(letters) * n


def ascending(start: int, stop: int) -> tuple[int, ...]:
    """sigma_start sigma_{start+1} ... sigma_stop (empty when stop < start)."""
    return tuple(range(start, stop + 1))


def descending(start: int, stop: int) -> tuple[int, ...]:
    """sigma_start sigma_{start-1} ... sigma_stop (empty when start < stop)."""
    return tuple(range(start, stop - 1, -1))


def full_twist(p: int, k: int = 1) -> BraidWord:
    """(sigma_1 ... sigma_{p-1})^(p k): ``k`` positive full twists on ``p`` strands."""
    if k < 0:
        raise BraidError("number of full twists must be non-negative")
    if k > 0 and p < 2:
        raise BraidError("a full twist needs at least 2 strands")
    return BraidWord(p, ascending(1, p - 1) * (p * k))


def half_twist(p: int) -> BraidWord:
    """Delta spelled as (s_1..s_{p-1})(s_1..s_{p-2})...(s_1)."""
    letters: list[int] = []
    for top in range(p - 1, 0, -1):
        letters.extend(ascending(1, top))
    return BraidWord(p, tuple(letters))


def is_positive(w: BraidWord) -> bool:
    return all(g > 0 for g in w.letters)


def span_within(w: BraidWord, q: int) -> bool:
    if not 1 <= q <= w.strands:
        raise BraidError(f"q={q} outside 1..{w.strands}")
    return all(abs(g) <= q - 1 for g in w.letters)


def embed(w: BraidWord, strands: int) -> BraidWord:
    """View ``w`` as a braid on the first ``w.strands`` of ``strands`` strands."""
    if strands < w.strands:
        raise BraidError("cannot embed into fewer strands")
    return BraidWord(strands, w.letters)


def reverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, w.letters[::-1])


def rotate(w: BraidWord, shift: int) -> BraidWord:
    """Cyclic rotation: moves the first ``shift`` letters to the end (a conjugate)."""
    if not w.letters:
        return w
    shift %= len(w.letters)
    return BraidWord(w.strands, w.letters[shift:] + w.letters[:shift])


def trace_strand(w: BraidWord, start: int) -> StrandTrace:
    if not 1 <= start <= w.strands:
        raise BraidError(f"start position {start} outside 1..{w.strands}")
    strand_at = list(range(w.strands + 1))
    pos = start
    positions = [pos]
    events = []
    for idx, g in enumerate(w.letters):
        i = abs(g)
        if pos == i or pos == i + 1:
            other = i + 1 if pos == i else i
            events.append(CrossingEvent(idx, strand_at[other], 1 if g > 0 else -1))
            pos = other
        strand_at[i], strand_at[i + 1] = strand_at[i + 1], strand_at[i]
        positions.append(pos)
    return StrandTrace(start, tuple(positions), tuple(events))


def crossing_pairs(w: BraidWord) -> Iterable[tuple[int, int, int]]:
    """Yield ``(strand_left, strand_right, sign)`` for each letter, strands named by top position."""
    strand_at = list(range(w.strands + 1))
    for g in w.letters:
        i = abs(g)
        yield strand_at[i], strand_at[i + 1], (1 if g > 0 else -1)
        strand_at[i], strand_at[i + 1] = strand_at[i + 1], strand_at[i]
