"""
Left normal form in the positive braid monoid.

Simple elements (permutation braids) are stored as permutations in the same
convention as :class:`~braidforge.braid_core.Permutation`: entry ``j - 1`` is
the bottom position of the strand entering at top position ``j``. A pair of
strands crosses in a permutation braid exactly when the pair is inverted.

The normal form of a positive braid is ``Delta^m s_1 ... s_r`` with every
pair ``(s_i, s_{i+1})`` left-weighted, i.e. the starting set of ``s_{i+1}``
contained in the finishing set of ``s_i``.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .braid_core import BraidError, BraidWord, Permutation, half_twist, is_positive

ORACLE_MAXLEN = 14
ORACLE_MAXSTRANDS = 4


class NotPositiveError(BraidError):
    pass


class OracleBoundError(BraidError):
    pass


@dataclass(frozen=True)
class SimpleElement:
    strands: int
    perm: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> SimpleElement:
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def delta(cls, n: int) -> SimpleElement:
        return cls(n, tuple(range(n, 0, -1)))

    @classmethod
    def generator(cls, n: int, i: int) -> SimpleElement:
        perm = list(range(1, n + 1))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return cls(n, tuple(perm))

    @property
    def permutation(self) -> Permutation:
        return Permutation(self.perm)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(1, self.strands + 1))

    def is_delta(self) -> bool:
        return self.perm == tuple(range(self.strands, 0, -1))

    def length(self) -> int:
        p = self.perm
        return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])

    def starting_set(self) -> frozenset[int]:
        """Generators sigma_i that left-divide this element."""
        p = self.perm
        return frozenset(i for i in range(1, self.strands) if p[i - 1] > p[i])

    def finishing_set(self) -> frozenset[int]:
        """Generators sigma_i that right-divide this element."""
        inv = [0] * self.strands
        for j, img in enumerate(self.perm, 1):
            inv[img - 1] = j
        return frozenset(i for i in range(1, self.strands) if inv[i - 1] > inv[i])

    def times_generator(self, i: int) -> SimpleElement:
        """``self * sigma_i``; caller guarantees ``i`` is not in the finishing set."""
        perm = tuple(i + 1 if x == i else i if x == i + 1 else x for x in self.perm)
        return SimpleElement(self.strands, perm)

    def generator_divides(self, i: int) -> SimpleElement:
        """``sigma_i^{-1} * self``; caller guarantees ``i`` is in the starting set."""
        perm = list(self.perm)
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return SimpleElement(self.strands, tuple(perm))

    def word(self) -> tuple[int, ...]:
        """Lexicographically least reduced word."""
        letters = []
        x = self
        while True:
            start = x.starting_set()
            if not start:
                return tuple(letters)
            i = min(start)
            letters.append(i)
            x = x.generator_divides(i)

    def fixes_last_strand(self) -> bool:
        return self.perm[-1] == self.strands


@dataclass(frozen=True)
class NormalForm:
    strands: int
    delta_power: int
    factors: tuple[SimpleElement, ...] = ()

    @property
    def infimum(self) -> int:
        return self.delta_power

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_left_weighted(self) -> bool:
        for a, b in zip(self.factors, self.factors[1:]):
            if not b.starting_set() <= a.finishing_set():
                return False
        return all(not (f.is_identity() or f.is_delta()) for f in self.factors)

    def word(self) -> BraidWord:
        letters = list(half_twist(self.strands).letters) * self.delta_power
        for f in self.factors:
            letters.extend(f.word())
        return BraidWord(self.strands, tuple(letters))

    def __str__(self) -> str:
        parts = []
        if self.delta_power:
            parts.append(f"D^{self.delta_power}")
        parts.extend("[" + " ".join(map(str, f.word())) + "]" for f in self.factors)
        return " ".join(parts) if parts else "1"


def _left_weight(a: SimpleElement, b: SimpleElement) -> tuple[SimpleElement, SimpleElement]:
    """Move the largest possible prefix of ``b`` onto ``a``."""
    while True:
        extra = b.starting_set() - a.finishing_set()
        if not extra:
            return a, b
        i = min(extra)
        a, b = a.times_generator(i), b.generator_divides(i)


def _require_positive(w: BraidWord) -> None:
    if not is_positive(w):
        bad = next(g for g in w.letters if g < 0)
        raise NotPositiveError(f"negative letter {bad}: only positive words are supported")


def normal_form(w: BraidWord) -> NormalForm:
    _require_positive(w)
    n = w.strands
    factors: list[SimpleElement] = []
    for g in w.letters:
        factors.append(SimpleElement.generator(n, g))
        for j in range(len(factors) - 2, -1, -1):
            a, b = _left_weight(factors[j], factors[j + 1])
            if a == factors[j]:
                break
            factors[j], factors[j + 1] = a, b
        while factors and factors[-1].is_identity():
            factors.pop()
    m = 0
    while m < len(factors) and factors[m].is_delta():
        m += 1
    return NormalForm(n, m, tuple(factors[m:]))


def extract_full_twists(w: BraidWord) -> tuple[int, NormalForm]:
    """Largest ``k`` with ``w = beta0 * (Delta^2)^k``, ``beta0`` positive, and that ``beta0``.

    Delta^2 is central, so this is half the infimum rounded down.
    """
    _require_positive(w)
    if w.strands < 2:
        raise BraidError("full twists need at least 2 strands")
    nf = normal_form(w)
    k = nf.delta_power // 2
    return k, NormalForm(nf.strands, nf.delta_power - 2 * k, nf.factors)


def positive_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise BraidError(f"strand counts differ: {u.strands} vs {v.strands}")
    return normal_form(u) == normal_form(v)


def left_divide_letter(nf: NormalForm, i: int) -> NormalForm | None:
    """Normal form of ``sigma_i^{-1} * x`` if ``sigma_i`` left-divides ``x``, else None."""
    n = nf.strands
    if nf.delta_power > 0:
        head = SimpleElement.delta(n).generator_divides(i)
        rest = NormalForm(n, nf.delta_power - 1, nf.factors).word().letters
    elif nf.factors and i in nf.factors[0].starting_set():
        head = nf.factors[0].generator_divides(i)
        rest = NormalForm(n, 0, nf.factors[1:]).word().letters
    else:
        return None
    return normal_form(BraidWord(n, head.word() + rest))


def left_divide_word(nf: NormalForm, letters: Sequence[int]) -> NormalForm | None:
    for i in letters:
        nf = left_divide_letter(nf, i)
        if nf is None:
            return None
    return nf


# -- brute-force verifier ---------------------------------------------------

def _oracle_maxlen() -> int:
    env = os.environ.get("BRAIDFORGE_ORACLE_MAXLEN")
    return int(env) if env else ORACLE_MAXLEN


def positive_class(w: BraidWord, maxlen: int | None = None, max_strands: int = ORACLE_MAXSTRANDS) -> set[tuple[int, ...]]:
    """Every positive word equal to ``w``, by closing under the braid relations."""
    _require_positive(w)
    maxlen = _oracle_maxlen() if maxlen is None else maxlen
    if len(w) > maxlen or w.strands > max_strands:
        raise OracleBoundError(
            f"oracle bound exceeded: length {len(w)} (max {maxlen}), strands {w.strands} (max {max_strands})"
        )
    start = w.letters
    seen = {start}
    queue = deque([start])
    while queue:
        word = queue.popleft()
        for j in range(len(word) - 1):
            a, b = word[j], word[j + 1]
            nbrs = []
            if abs(a - b) >= 2:
                nbrs.append(word[:j] + (b, a) + word[j + 2:])
            if j + 2 < len(word) and abs(a - b) == 1 and word[j + 2] == a:
                nbrs.append(word[:j] + (b, a, b) + word[j + 3:])
            for nb in nbrs:
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
    return seen


def oracle_divisible_by_delta(w: BraidWord, power: int, maxlen: int | None = None,
                              max_strands: int = ORACLE_MAXSTRANDS) -> bool:
    """True iff some positive word equal to ``w`` starts with the spelled ``Delta^power``."""
    if power < 1:
        raise BraidError("power must be positive")
    cls = positive_class(w, maxlen, max_strands)
    prefix = half_twist(w.strands).letters * power
    return any(word[:len(prefix)] == prefix for word in cls)


def oracle_full_twists(w: BraidWord, maxlen: int | None = None, max_strands: int = ORACLE_MAXSTRANDS) -> int:
    """Brute-force ``max {k : Delta^(2k) is a prefix of some representative}``."""
    if w.strands < 2:
        raise BraidError("full twists need at least 2 strands")
    cls = positive_class(w, maxlen, max_strands)
    dl = half_twist(w.strands).letters
    k = 0
    while True:
        prefix = dl * (2 * (k + 1))
        if len(prefix) > len(w) or not any(word[:len(prefix)] == prefix for word in cls):
            return k
        k += 1
