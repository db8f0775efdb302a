"""
T-links, V-links, and the parametric families built from them.

A T-link ``T((r1,s1),...,(rn,sn))`` is the closure of
``(s_1..s_{r1-1})^s1 ... (s_1..s_{rn-1})^sn``. A V-link on ``p`` strands
starts with "barred" factors of descending generators
``(s_{p-1} s_{p-2} .. s_{p-u+1})^v``, continues with ascending factors
``(s_1..s_{r-1})^s`` and ends with ``(s_1..s_{p-1})^q``.

Specs built directly are validated leniently: zero exponents are allowed (the
factor simply drops out) and consecutive T-link indices may repeat.
``check_strict()`` enforces strictly increasing indices and positive exponents.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .braid_core import BraidWord, ascending, descending


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class TLinkSpec:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(r), int(s)) for r, s in self.pairs))
        if not self.pairs:
            raise FamilyError("a T-link needs at least one pair")
        rs = [r for r, _ in self.pairs]
        if rs[0] < 2:
            raise FamilyError(f"T-link indices must be >= 2, got {rs[0]}")
        if any(b < a for a, b in zip(rs, rs[1:])):
            raise FamilyError(f"T-link indices must not decrease: {rs}")
        if any(s < 0 for _, s in self.pairs):
            raise FamilyError("T-link exponents must be non-negative")

    def check_strict(self) -> TLinkSpec:
        rs = [r for r, _ in self.pairs]
        if any(b <= a for a, b in zip(rs, rs[1:])):
            raise FamilyError(f"T-link indices must strictly increase: {rs}")
        if any(s <= 0 for _, s in self.pairs):
            raise FamilyError("T-link exponents must be positive")
        return self

    @property
    def strands(self) -> int:
        return self.pairs[-1][0]

    def __str__(self) -> str:
        return "T(" + ",".join(f"({r},{s})" for r, s in self.pairs) + ")"


@dataclass(frozen=True)
class VLinkSpec:
    barred_pairs: tuple[tuple[int, int], ...]
    plain_pairs: tuple[tuple[int, int], ...]
    final: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "barred_pairs", tuple((int(u), int(v)) for u, v in self.barred_pairs))
        object.__setattr__(self, "plain_pairs", tuple((int(r), int(s)) for r, s in self.plain_pairs))
        p, q = self.final
        object.__setattr__(self, "final", (int(p), int(q)))
        p, q = self.final
        if p < 2:
            raise FamilyError(f"V-link strand count must be >= 2, got {p}")
        if q < 0:
            raise FamilyError("final exponent must be non-negative")
        us = [u for u, _ in self.barred_pairs]
        if us and (us[0] < 2 or us[-1] > p or any(b <= a for a, b in zip(us, us[1:]))):
            raise FamilyError(f"barred indices must satisfy 2 <= u1 < ... <= {p}: {us}")
        rs = [r for r, _ in self.plain_pairs]
        if rs and (rs[0] < 2 or rs[-1] >= p or any(b <= a for a, b in zip(rs, rs[1:]))):
            raise FamilyError(f"plain indices must satisfy 2 <= r1 < ... < {p}: {rs}")
        if any(e < 0 for _, e in self.barred_pairs + self.plain_pairs):
            raise FamilyError("V-link exponents must be non-negative")

    def check_strict(self) -> VLinkSpec:
        p, q = self.final
        if q < p:
            raise FamilyError(f"V-link needs p <= q, got p={p}, q={q}")
        if any(e <= 0 for _, e in self.barred_pairs + self.plain_pairs):
            raise FamilyError("V-link exponents must be positive")
        return self

    @property
    def strands(self) -> int:
        return self.final[0]

    def __str__(self) -> str:
        parts = [f"({u},~{v})" for u, v in self.barred_pairs]
        parts += [f"({r},{s})" for r, s in self.plain_pairs]
        parts.append(f"({self.final[0]},{self.final[1]})")
        return "V(" + ",".join(parts) + ")"


@dataclass(frozen=True)
class FamilyParams:
    a: int
    b: int
    c: int
    k: int

    def validate(self, allow_k_zero: bool = True) -> FamilyParams:
        if min(self.a, self.b, self.c) < 1:
            raise FamilyError(f"a, b, c must be positive: {self}")
        if max(self.a, self.b, self.c) < 2:
            raise FamilyError(f"at least one of a, b, c must exceed 1: {self}")
        if self.k < (0 if allow_k_zero else 1):
            raise FamilyError(f"k out of range: {self}")
        return self

    @property
    def width(self) -> int:
        return self.a + self.b + self.c


def t_link_braid(spec: TLinkSpec) -> BraidWord:
    letters: list[int] = []
    for r, s in spec.pairs:
        letters.extend(ascending(1, r - 1) * s)
    return BraidWord(spec.strands, tuple(letters))


def v_link_braid(spec: VLinkSpec) -> BraidWord:
    p, q = spec.final
    letters: list[int] = []
    for u, v in spec.barred_pairs:
        letters.extend(descending(p - 1, p - u + 1) * v)
    for r, s in spec.plain_pairs:
        letters.extend(ascending(1, r - 1) * s)
    letters.extend(ascending(1, p - 1) * q)
    return BraidWord(p, tuple(letters))


_PAIR = r"\(\s*(\d+)\s*,\s*(~?)\s*(\d+)\s*\)"


def _parse_pairs(text: str, head: str) -> list[tuple[int, bool, int]]:
    full = rf"\s*{head}\(\s*{_PAIR}(\s*,\s*{_PAIR})*\s*\)\s*"
    if re.fullmatch(full, text) is None:
        raise FamilyError(f"expected {head}((x,y),...), got {text!r}")
    return [(int(x), bool(bar), int(e)) for x, bar, e in re.findall(_PAIR, text)]


def parse_tlink(text: str) -> TLinkSpec:
    """Parse ``T((r1,s1),...,(rn,sn))``."""
    pairs = _parse_pairs(text, "T")
    if any(bar for _, bar, _ in pairs):
        raise FamilyError("T-link pairs cannot be barred")
    return TLinkSpec(tuple((r, s) for r, _, s in pairs))


def parse_vlink(text: str) -> VLinkSpec:
    """Parse ``V((u1,~v1),...,(r1,s1),...,(p,q))``; ``~`` marks a barred exponent."""
    pairs = _parse_pairs(text, "V")
    *body, last = pairs
    if last[1]:
        raise FamilyError("the final (p,q) pair cannot be barred")
    barred, plain = [], []
    for x, bar, e in body:
        if bar:
            if plain:
                raise FamilyError("barred pairs must precede plain pairs")
            barred.append((x, e))
        else:
            plain.append((x, e))
    return VLinkSpec(tuple(barred), tuple(plain), (last[0], last[2]))


def satellite_family_t(params: FamilyParams) -> TLinkSpec:
    """T((a+b+c, c), (a+b+2c+k(a+b+c), a+b+c))."""
    params.validate()
    a, b, c, k = params.a, params.b, params.c, params.k
    m = a + b + c
    return TLinkSpec(((m, c), (a + b + 2 * c + k * m, m)))


def satellite_family_v(params: FamilyParams) -> VLinkSpec:
    """V((a+b+c, ~c), (a+b+c, (k+1)(a+b+c) + c))."""
    params.validate()
    m = params.width
    return VLinkSpec(((m, params.c),), (), (m, (params.k + 1) * m + params.c))


def deletion_stage_t(c: int, k: int) -> TLinkSpec:
    """T((2+c, c), (2+2c+k(2+c), 2+c)): the family after thinning the first block to two strands."""
    return TLinkSpec(((2 + c, c), (2 + 2 * c + k * (2 + c), 2 + c)))


def companion_t(k: int) -> TLinkSpec:
    """T((3,1),(3+2k,2))."""
    if k < 0:
        raise FamilyError("k must be non-negative")
    return TLinkSpec(((3, 1), (3 + 2 * k, 2)))


def companion_mid_t(k: int) -> TLinkSpec:
    """T((3,1),(4+3k,3))."""
    if k < 0:
        raise FamilyError("k must be non-negative")
    return TLinkSpec(((3, 1), (4 + 3 * k, 3)))


def companion_v(k: int) -> VLinkSpec:
    """V((2,2k),(3,3)), whose braid is sigma_1^(2k) (sigma_1 sigma_2)^3."""
    if k < 0:
        raise FamilyError("k must be non-negative")
    return VLinkSpec((), ((2, 2 * k),), (3, 3))


def long_factor_first(spec: TLinkSpec) -> BraidWord:
    """The two-factor T-braid with its factors swapped (a conjugate, same closure)."""
    if len(spec.pairs) != 2:
        raise FamilyError("expected a two-factor T-link")
    (r1, s1), (r2, s2) = spec.pairs
    n = r2
    return BraidWord(n, ascending(1, r2 - 1) * s2 + ascending(1, r1 - 1) * s1)


def default_grid(k_values=range(4)) -> list[FamilyParams]:
    out = []
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            for c in (1, 2, 3):
                if max(a, b, c) < 2:
                    continue
                out.extend(FamilyParams(a, b, c, k) for k in k_values)
    return out
