"""Laurent polynomials in one variable with arbitrary-precision integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping


class DivisionRemainderError(ArithmeticError):
    """An exact division left a nonzero remainder."""


class LaurentPoly:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._coeffs = {int(e): int(c) for e, c in (coeffs or {}).items() if c}

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, e: int) -> LaurentPoly:
        return cls({e: c})

    @classmethod
    def from_list(cls, coeffs: Iterable[int], shift: int = 0) -> LaurentPoly:
        """Coefficients listed from exponent ``shift`` upward."""
        return cls({shift + i: c for i, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def min_degree(self) -> int:
        return min(self._coeffs)

    def max_degree(self) -> int:
        return max(self._coeffs)

    def __getitem__(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def l1_norm(self) -> int:
        return sum(abs(c) for c in self._coeffs.values())

    def divmod(self, divisor: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Long division treating both as polynomials after shifting to degree 0.

        The divisor's leading coefficient must be +-1 so the quotient stays integral.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        lo_d = divisor.min_degree()
        d = [divisor[e] for e in range(lo_d, divisor.max_degree() + 1)]
        lead = d[-1]
        if abs(lead) != 1:
            raise ValueError("divisor must be monic up to sign")
        lo = self.min_degree()
        rem = [self[e] for e in range(lo, self.max_degree() + 1)]
        nq = len(rem) - len(d) + 1
        quot = [0] * max(nq, 0)
        for i in range(nq - 1, -1, -1):
            c = rem[i + len(d) - 1] * lead
            if c:
                quot[i] = c
                for j, dj in enumerate(d):
                    rem[i + j] -= c * dj
        q = LaurentPoly.from_list(quot, lo - lo_d)
        r = LaurentPoly.from_list(rem, lo)
        return q, r

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise DivisionRemainderError(f"nonzero remainder {r} dividing {self} by {divisor}")
        return q

    def normalized(self) -> LaurentPoly:
        """Shift the lowest exponent to 0 and make that coefficient positive."""
        if self.is_zero():
            return self
        p = self.shift(-self.min_degree())
        return -p if p[0] < 0 else p

    def to_list(self) -> list[int]:
        """Coefficients from the lowest exponent upward."""
        if self.is_zero():
            return []
        return [self[e] for e in range(self.min_degree(), self.max_degree() + 1)]

    def __repr__(self) -> str:
        return f"LaurentPoly({self._coeffs!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


T = LaurentPoly.monomial(1, 1)
