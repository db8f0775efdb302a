"""
Invariants of braid closures.

These are used as a necessary-condition oracle for link equivalence: two
braids whose closures are the same link must produce identical bundles, but
matching bundles do not prove the links are equal.

The Alexander polynomial uses the reduced Burau representation and the
identity ``det(I - rho(b)) = (1 + t + ... + t^(n-1)) * Delta(t)`` (up to a
unit). The determinant is computed exactly by evaluating the polynomial
matrix at a power of two large enough that every coefficient of the result
can be read back off the integer's balanced base-2^k digits.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .braid_core import BraidError, BraidWord, crossing_pairs, is_positive, permutation_of
from .laurent import LaurentPoly

_ZERO = LaurentPoly()
_ONE = LaurentPoly.constant(1)
_T = LaurentPoly.monomial(1, 1)
_TINV = LaurentPoly.monomial(1, -1)


class LinkingParityError(RuntimeError):
    """A raw inter-component crossing count came out odd."""


@dataclass(frozen=True)
class ComponentPartition:
    strands: int
    cycles: tuple[tuple[int, ...], ...]

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.cycles)

    def __len__(self) -> int:
        return len(self.cycles)

    def component_of(self) -> dict[int, int]:
        """Map each strand (top position) to the id of its component."""
        return {s: cyc[0] for cyc in self.cycles for s in cyc}

    def sizes(self) -> dict[int, int]:
        return {cyc[0]: len(cyc) for cyc in self.cycles}


@dataclass(frozen=True, eq=False)
class LinkingMatrix:
    ids: tuple[int, ...]
    matrix: np.ndarray

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinkingMatrix) and self.ids == other.ids
                and np.array_equal(self.matrix, other.matrix))

    def lk(self, i: int, j: int) -> int:
        return int(self.matrix[self.ids.index(i), self.ids.index(j)])

    def multiset(self) -> tuple[int, ...]:
        n = len(self.ids)
        return tuple(sorted(int(self.matrix[a, b]) for a in range(n) for b in range(a + 1, n)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        n = len(self.ids)
        return {(self.ids[a], self.ids[b]): int(self.matrix[a, b]) for a in range(n) for b in range(a + 1, n)}


@dataclass(frozen=True)
class InvariantBundle:
    component_count: int
    euler_char: int
    linking_multiset: tuple[int, ...]
    alexander: LaurentPoly

    def to_dict(self) -> dict:
        return {
            "component_count": self.component_count,
            "euler_char": self.euler_char,
            "linking_multiset": list(self.linking_multiset),
            "alexander": self.alexander.to_list(),
        }


def closure_components(w: BraidWord) -> ComponentPartition:
    return ComponentPartition(w.strands, tuple(permutation_of(w).cycles()))


def raw_linking_counts(w: BraidWord, parts: ComponentPartition | None = None) -> tuple[Counter, int]:
    """Signed crossing counts per unordered component pair, and the count of intra-component letters."""
    parts = closure_components(w) if parts is None else parts
    comp = parts.component_of()
    raw: Counter = Counter()
    intra = 0
    for a, b, sign in crossing_pairs(w):
        ca, cb = comp[a], comp[b]
        if ca == cb:
            intra += 1
        else:
            raw[min(ca, cb), max(ca, cb)] += sign
    return raw, intra


def linking_matrix(w: BraidWord) -> LinkingMatrix:
    parts = closure_components(w)
    ids = parts.ids
    index = {c: i for i, c in enumerate(ids)}
    raw, _ = raw_linking_counts(w, parts)
    mat = np.zeros((len(ids), len(ids)), dtype=np.int64)
    for (a, b), count in raw.items():
        if count % 2:
            raise LinkingParityError(f"odd raw crossing count {count} between components {a} and {b}")
        mat[index[a], index[b]] = mat[index[b], index[a]] = count // 2
    mat.setflags(write=False)
    return LinkingMatrix(ids, mat)


def euler_characteristic(w: BraidWord) -> int:
    """Euler characteristic of the Bennequin surface: strands minus crossings."""
    if not is_positive(w):
        raise BraidError("Euler characteristic formula needs a positive word")
    return w.strands - len(w.letters)


def reduced_burau(w: BraidWord) -> list[list[LaurentPoly]]:
    """Reduced Burau matrix of ``w`` as an (n-1) x (n-1) nested list.

    sigma_i differs from the identity only in column ``i - 1``, which is
    ``(t, -t, 1)`` in rows ``i - 2, i - 1, i`` (truncated at the borders);
    the inverse has ``(1, -1/t, 1/t)`` there.
    """
    d = w.strands - 1
    m = [[_ONE if r == c else _ZERO for c in range(d)] for r in range(d)]
    for g in w.letters:
        c = abs(g) - 1
        if g > 0:
            weights = ((c - 1, _T), (c, -_T), (c + 1, _ONE))
        else:
            weights = ((c - 1, _ONE), (c, -_TINV), (c + 1, _TINV))
        for row in m:
            acc = _ZERO
            for k, wk in weights:
                if 0 <= k < d and not row[k].is_zero():
                    acc = acc + row[k] * wk
            row[c] = acc
    return m


def _bareiss_det(a: list[list[int]]) -> int:
    a = [row[:] for row in a]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def _eval_at(p: LaurentPoly, x: int) -> int:
    return sum(c * x ** e for e, c in p.coeffs.items())


def poly_det(mat: list[list[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a square matrix with polynomial (non-negative exponent) entries."""
    n = len(mat)
    if n == 0:
        return _ONE
    # |coeff of det| <= max over |t|=1 of |det| <= prod of column 2-norms (Hadamard)
    bound_sq = 1
    for j in range(n):
        bound_sq *= sum(mat[i][j].l1_norm() ** 2 for i in range(n))
    if bound_sq == 0:
        return _ZERO
    bits = (bound_sq.bit_length() + 1) // 2 + 2
    x = 1 << bits
    d = _bareiss_det([[_eval_at(mat[i][j], x) for j in range(n)] for i in range(n)])
    coeffs = []
    half = x >> 1
    while d:
        r = d & (x - 1)
        if r >= half:
            r -= x
        coeffs.append(r)
        d = (d - r) >> bits
    return LaurentPoly.from_list(coeffs)


def alexander_polynomial(w: BraidWord) -> LaurentPoly:
    """One-variable Alexander polynomial of the closure, lowest exponent 0, constant term positive.

    A one-strand word closes to the unknot and returns 1.
    """
    n = w.strands
    if n == 1:
        return _ONE
    m = reduced_burau(w)
    d = n - 1
    a = [[(_ONE if i == j else _ZERO) - m[i][j] for j in range(d)] for i in range(d)]
    lo = min((e.min_degree() for row in a for e in row if not e.is_zero()), default=0)
    shift = max(0, -lo)
    if shift:
        a = [[e.shift(shift) for e in row] for row in a]
    det = poly_det(a).shift(-shift * d)
    numerator = det * (_T - 1)
    divisor = LaurentPoly({n: 1, 0: -1})
    return numerator.exact_div(divisor).normalized()


def invariant_bundle(w: BraidWord) -> InvariantBundle:
    lk = linking_matrix(w)
    return InvariantBundle(
        component_count=len(lk.ids),
        euler_char=euler_characteristic(w),
        linking_multiset=lk.multiset(),
        alexander=alexander_polynomial(w),
    )


def bundles_match(a: InvariantBundle, b: InvariantBundle) -> bool:
    return (a.component_count == b.component_count
            and a.euler_char == b.euler_char
            and sorted(a.linking_multiset) == sorted(b.linking_multiset)
            and a.alexander == b.alexander)


def nonsplit_certified(w: BraidWord) -> bool:
    """True when every pair of distinct components links positively (so the closure is non-split)."""
    ms = linking_matrix(w).multiset()
    return bool(ms) and min(ms) >= 1


def twist_bound_from_linking(w: BraidWord) -> int | None:
    """Upper bound on full twists in any positive braid with this closure.

    ``r`` full twists force every pairwise linking number to be at least ``r``,
    so the minimum off-diagonal entry bounds ``r``. None for knots.
    """
    ms = linking_matrix(w).multiset()
    return min(ms) if ms else None

