"""Real algebraic numbers: an irreducible minimal polynomial plus a rational
isolating interval.

Construction normalises any squarefree defining polynomial to the irreducible
factor owning the isolated root; rational numbers get point intervals.  All
comparisons are exact: equality never relies on "the intervals look close".
"""

from __future__ import annotations

from typing import Optional, Tuple

from gmpy2 import mpq, mpz

from ..errors import InternalInvariantError
from ..polycore.factor import factor_rational, normalize_primitive
from ..polycore.poly import QQ, UniPoly
from ..polycore.roots import (
    isolate_real_roots_sqfree,
    refine_interval,
    root_in_closed,
)


class AlgebraicNumber:
    """An exact real number: irreducible minpoly + isolating interval."""

    __slots__ = ("minpoly", "_iv")

    def __init__(self, minpoly: UniPoly, interval: Tuple[mpq, mpq], _trusted: bool = False):
        if not _trusted:
            raise TypeError("use AlgebraicNumber.from_defining or from_rational")
        self.minpoly = minpoly
        self._iv = interval

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_rational(r) -> "AlgebraicNumber":
        r = mpq(r)
        mp = normalize_primitive(UniPoly((-r, mpq(1)), "x", QQ))
        return AlgebraicNumber(mp, (r, r), _trusted=True)

    @staticmethod
    def from_defining(defining: UniPoly, lo, hi) -> "AlgebraicNumber":
        """Isolate the unique root of a squarefree rational poly in [lo, hi]."""
        lo, hi = mpq(lo), mpq(hi)
        if defining.is_zero():
            raise ValueError("zero defining polynomial")
        if defining.var != "x":
            defining = defining.map_coeffs(lambda c: c, QQ, "x")
        hits = []
        for factor, _ in factor_rational(defining):
            if factor.degree == 0:
                continue
            if factor.degree == 1:
                r = -factor.coeffs[0] / factor.coeffs[1]
                if lo <= r <= hi:
                    hits.append((factor, (r, r)))
                continue
            for iv in isolate_real_roots_sqfree(factor):
                if root_in_closed(factor, iv, lo, hi):
                    hits.append((factor, iv))
        if len(hits) != 1:
            raise ValueError(f"interval [{lo}, {hi}] isolates {len(hits)} roots, expected 1")
        factor, iv = hits[0]
        if iv[0] == iv[1]:
            return AlgebraicNumber(factor, iv, _trusted=True)
        # irreducible of degree >= 2 has no rational roots, so the root is
        # interior to [lo, hi]; shrink until the interval sits inside it
        a, b = iv
        while not (lo < a and b < hi):
            a, b = refine_interval(factor, a, b, (b - a) / 4)
        return AlgebraicNumber(factor, (a, b), _trusted=True)

    # -- queries --------------------------------------------------------------

    @property
    def interval(self) -> Tuple[mpq, mpq]:
        return self._iv

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def is_rational(self) -> bool:
        return self.minpoly.degree == 1

    def rational_value(self) -> mpq:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return -self.minpoly.coeffs[0] / self.minpoly.coeffs[1]

    def is_zero(self) -> bool:
        return self.is_rational() and self.rational_value() == 0

    # -- refinement ------------------------------------------------------------

    def refine(self, width) -> "AlgebraicNumber":
        """Shrink the isolating interval to the requested width (in place;
        the value is unchanged, so sharing the refinement is sound)."""
        width = mpq(width)
        if width <= 0:
            raise ValueError("width must be positive")
        lo, hi = self._iv
        if lo == hi or hi - lo <= width:
            return self
        self._iv = refine_interval(self.minpoly, lo, hi, width)
        return self

    def refine_step(self) -> "AlgebraicNumber":
        lo, hi = self._iv
        if lo != hi:
            self._iv = refine_interval(self.minpoly, lo, hi, (hi - lo) / 2)
        return self

    # -- comparisons -----------------------------------------------------------

    def equals(self, other: "AlgebraicNumber") -> bool:
        if self.minpoly != other.minpoly:
            return False
        lo, hi = other._iv
        return root_in_closed(self.minpoly, self._iv, lo, hi)

    def compare(self, other: "AlgebraicNumber") -> int:
        if self.equals(other):
            return 0
        while True:
            a = self._iv
            b = other._iv
            if a[1] < b[0]:
                return -1
            if b[1] < a[0]:
                return 1
            self.refine_step()
            other.refine_step()

    def compare_rational(self, r) -> int:
        r = mpq(r)
        if self.is_rational():
            v = self.rational_value()
            return -1 if v < r else (1 if v > r else 0)
        while True:
            lo, hi = self._iv
            if hi < r:
                return -1
            if lo > r:
                return 1
            self.refine_step()

    def sign(self) -> int:
        return self.compare_rational(0)

    def __eq__(self, other):
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        return self.equals(other)

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __hash__(self):
        return hash(self.minpoly.coeffs)

    def __neg__(self) -> "AlgebraicNumber":
        mp = normalize_primitive(
            UniPoly(tuple((-c if k % 2 else c) for k, c in enumerate(self.minpoly.coeffs)), "x", QQ)
        )
        lo, hi = self._iv
        return AlgebraicNumber(mp, (-hi, -lo), _trusted=True)

    # -- rendering ---------------------------------------------------------------

    def decimal_string(self) -> str:
        """Shortest decimal (>= 1 fractional digit) whose half-ulp interval
        contains the isolating interval."""
        nd = 1
        while True:
            self.refine(mpq(1, mpz(10) ** (nd + 3)))
            lo, hi = self._iv
            step = mpq(1, mpz(10) ** nd)
            base = (lo * step.denominator).numerator // (lo * step.denominator).denominator
            for k in (base - 1, base, base + 1):
                v = mpq(k, step.denominator)
                if v - step / 2 <= lo and hi <= v + step / 2:
                    return _decimal_str(k, nd)
            nd += 1
            if nd > 80:
                raise InternalInvariantError("decimal rendering did not converge")

    def float_approx(self) -> float:
        self.refine(mpq(1, mpz(10) ** 15))
        lo, hi = self._iv
        mid = (lo + hi) / 2
        return float(mid.numerator) / float(mid.denominator)

    def minpoly_string(self) -> str:
        return str(self.minpoly).replace(" ", "")

    def to_json(self) -> dict:
        lo, hi = self._iv
        return {
            "approx": self.decimal_string(),
            "min_poly": self.minpoly_string(),
            "interval": [str(lo), str(hi)],
        }

    def __str__(self):
        return self.decimal_string()

    def __repr__(self):
        return f"AlgebraicNumber({self.decimal_string()}, {self.minpoly_string()})"


def _decimal_str(scaled: int, nd: int) -> str:
    neg = scaled < 0
    scaled = -scaled if neg else scaled
    digits = str(scaled).rjust(nd + 1, "0")
    intpart, frac = digits[:-nd], digits[-nd:]
    return ("-" if neg else "") + intpart + "." + frac


def sort_unique(values) -> list:
    """Ascending list with exact deduplication."""
    out: list[AlgebraicNumber] = []
    for v in values:
        if not any(v.equals(w) for w in out):
            out.append(v)
    out.sort(key=_CompareKey)
    return out


class _CompareKey:
    def __init__(self, value: AlgebraicNumber):
        self.value = value

    def __lt__(self, other: "_CompareKey") -> bool:
        return self.value.compare(other.value) < 0
