"""
Combinatorial satellite operations on braids: deleting closure components,
adjoining the braid axis, and recognising braids of the shape
``B0 (s_1 ... s_{a-2})^j Delta_a^2`` where ``B0`` avoids the last strand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .braid_core import BraidError, BraidWord, ascending, descending, embed, is_positive
from .garside import NormalForm, left_divide_letter, normal_form
from .invariants import closure_components


@dataclass(frozen=True)
class DeletionResult:
    braid: BraidWord
    removed_letters: int
    strand_map: dict[int, int] = field(hash=False)


@dataclass(frozen=True)
class Case2Match:
    a: int
    matched: bool
    b0: BraidWord | None = None
    wheel_power: int = 0

    def reconstruct(self) -> BraidWord:
        """B0 (s_1 ... s_{a-2})^j (s_1 ... s_{a-1})^a."""
        if not self.matched:
            raise BraidError("no Case-2 decomposition to reconstruct")
        a = self.a
        letters = self.b0.letters + ascending(1, a - 2) * self.wheel_power + ascending(1, a - 1) * a
        return BraidWord(a, letters)


def delete_components(w: BraidWord, ids: Iterable[int]) -> DeletionResult:
    """Drop the closure components named by ``ids`` (their least top positions).

    A letter survives only when both strands it crosses survive. Surviving
    strands are renumbered by rank at every level, so the result's closure is
    the sublink of the remaining components. ``strand_map`` sends each
    surviving old top position to its new top position.
    """
    ids = set(ids)
    parts = closure_components(w)
    known = set(parts.ids)
    unknown = ids - known
    if unknown:
        raise BraidError(f"unknown component ids {sorted(unknown)}; components are {sorted(known)}")
    if not ids:
        raise BraidError("no components to delete")
    if ids == known:
        raise BraidError("cannot delete every component")
    comp = parts.component_of()
    alive = [False] + [comp[s] not in ids for s in range(1, w.strands + 1)]

    strand_map = {}
    rank = 0
    for s in range(1, w.strands + 1):
        if alive[s]:
            rank += 1
            strand_map[s] = rank
    new_n = rank

    # strand_at[pos] = strand id at that position (positions 1-based)
    strand_at = list(range(w.strands + 1))
    letters = []
    removed = 0
    for g in w.letters:
        i = abs(g)
        left, right = strand_at[i], strand_at[i + 1]
        if alive[left] and alive[right]:
            new_pos = sum(1 for p in range(1, i + 1) if alive[strand_at[p]])
            letters.append(new_pos if g > 0 else -new_pos)
        else:
            removed += 1
        strand_at[i], strand_at[i + 1] = right, left
    return DeletionResult(BraidWord(new_n, tuple(letters)), removed, strand_map)


def axis_wrap(n: int) -> BraidWord:
    """s_n s_{n-1} ... s_1 s_1 ... s_{n-1} s_n on n+1 strands: the last strand circles the others once."""
    return BraidWord(n + 1, descending(n, 1) + ascending(1, n))


def adjoin_axis(w: BraidWord) -> BraidWord:
    """Add the braid axis of ``w`` as a new strand, returning a positive braid on one more strand."""
    if not is_positive(w):
        raise BraidError("adjoin_axis needs a positive word")
    n = w.strands
    return BraidWord(n + 1, embed(w, n + 1).letters + axis_wrap(n).letters)


def _reverse_nf(nf: NormalForm) -> NormalForm:
    return normal_form(BraidWord(nf.strands, nf.word().letters[::-1]))


def match_case2_form(w: BraidWord, wheel_cap: int | None = None) -> Case2Match:
    """Try to write ``w`` as ``B0 (s_1..s_{a-2})^j Delta_a^2`` with ``B0`` avoiding strand ``a``.

    ``j`` is taken as large as possible, or as large as possible up to
    ``wheel_cap`` when given; ``b0`` is whatever remains on the left.
    """
    if not is_positive(w):
        raise BraidError("match_case2_form needs a positive word")
    a = w.strands
    if a < 3:
        raise BraidError("Case-2 form needs at least 3 strands")
    nf = normal_form(w)
    if nf.delta_power < 2:
        return Case2Match(a, False)
    quotient = NormalForm(a, nf.delta_power - 2, nf.factors)
    if quotient.delta_power > 0 or not all(f.fixes_last_strand() for f in quotient.factors):
        return Case2Match(a, False)

    # right division by (s_1..s_{a-2}) is left division of the reversal by (s_{a-2}..s_1)
    rev = _reverse_nf(quotient)
    step = descending(a - 2, 1)
    j = 0
    while wheel_cap is None or j < wheel_cap:
        nxt = rev
        for i in step:
            nxt = left_divide_letter(nxt, i)
            if nxt is None:
                break
        if nxt is None:
            break
        rev, j = nxt, j + 1
    b0 = BraidWord(a, rev.word().letters[::-1])
    return Case2Match(a, True, b0, j)
