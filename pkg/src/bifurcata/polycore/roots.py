"""Real root isolation for squarefree rational polynomials.

Descartes / Vincent-Collins-Akritas bisection on integer coefficient lists:
exact, certificate-producing, and fast enough for the degree range this
package targets.  Every returned interval has rational endpoints and contains
exactly one real root; point intervals mark exact rational roots.
"""

from __future__ import annotations

from typing import List, Tuple

from gmpy2 import mpq, mpz

from .poly import UniPoly

Interval = Tuple[mpq, mpq]


def _variations(coeffs: List) -> int:
    count = 0
    prev = 0
    for c in coeffs:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _shift_by_one(coeffs: List) -> List:
    """p(x) -> p(x + 1) on integer coefficient lists (ascending)."""
    cs = list(coeffs)
    n = len(cs)
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            cs[k] = cs[k] + cs[k + 1]
    return cs


def _descartes_bound_01(coeffs: List) -> int:
    """Upper bound on the number of roots of p in the open interval (0, 1)."""
    # variations of (1+x)^n p(1/(1+x)) = shift-by-one of the reversed poly
    return _variations(_shift_by_one(list(reversed(coeffs))))


def _half_left(coeffs: List) -> List:
    """2^n p(x/2): maps roots in (0, 1/2) to (0, 1)."""
    n = len(coeffs) - 1
    return [c << (n - i) for i, c in enumerate(coeffs)]


def _eval_int(coeffs: List, x: mpq):
    acc = mpq(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def isolate_real_roots_sqfree(p: UniPoly) -> List[Interval]:
    """Isolating intervals for all real roots of a squarefree rational poly.

    Returns ascending, pairwise disjoint intervals; ``lo == hi`` marks an
    exact rational root, otherwise the open interval carries a sign change
    and exactly one root.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree == 0:
        return []
    ints = [mpz(c) for c in p.integer_coefficients()]

    roots: List[Interval] = []
    # strip a root at the origin (squarefree: multiplicity one)
    if ints[0] == 0:
        roots.append((mpq(0), mpq(0)))
        while ints[0] == 0:
            ints = ints[1:]
    if len(ints) <= 1:
        return roots

    lead = abs(ints[-1])
    bound = 1 + max(abs(c) for c in ints) // lead + 1
    bound = mpq(bound)

    pos = _isolate_positive(ints, bound)
    neg_ints = [(-c if i % 2 else c) for i, c in enumerate(ints)]
    neg = [(-hi, -lo) for (lo, hi) in _isolate_positive(neg_ints, bound)]
    neg.reverse()
    return neg + roots + pos


def _isolate_positive(ints: List, bound: mpq) -> List[Interval]:
    """Roots in (0, bound); works on p scaled so that (0,1) covers (0, bound)."""
    n = len(ints) - 1
    b_num, b_den = bound.numerator, bound.denominator
    scaled = [c * b_num**i * b_den ** (n - i) for i, c in enumerate(ints)]
    out: List[Interval] = []
    _isolate_01(scaled, mpq(0), bound, out)
    out.sort(key=lambda iv: iv[0])
    return out


def _isolate_01(coeffs: List, lo: mpq, hi: mpq, out: List[Interval]) -> None:
    v = _descartes_bound_01(coeffs)
    if v == 0:
        return
    if v == 1:
        out.append((lo, hi))
        return
    mid = (lo + hi) / 2
    left = _half_left(coeffs)
    right = _shift_by_one(left)
    if right[0] == 0:
        out.append((mid, mid))
        while right[0] == 0:
            right = right[1:]
    _isolate_01(left, lo, mid, out)
    _isolate_01(right, mid, hi, out)


def refine_interval(p: UniPoly, lo: mpq, hi: mpq, width: mpq) -> Interval:
    """Bisect an isolating interval of p down to the requested width.

    Point intervals pass through; open intervals must carry a sign change.
    """
    if lo == hi:
        return (lo, hi)
    flo = p.evaluate(lo)
    if not flo:
        return (lo, lo)
    fhi = p.evaluate(hi)
    if not fhi:
        return (hi, hi)
    slo = 1 if flo > 0 else -1
    shi = 1 if fhi > 0 else -1
    if slo == shi:
        raise ValueError("interval does not bracket a sign change")
    while hi - lo > width:
        mid = (lo + hi) / 2
        fm = p.evaluate(mid)
        if not fm:
            return (mid, mid)
        sm = 1 if fm > 0 else -1
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return (lo, hi)


def root_in_closed(p: UniPoly, root_iv: Interval, lo: mpq, hi: mpq) -> bool:
    """Does the root of p isolated by ``root_iv`` lie in [lo, hi]?  Exact."""
    a, b = root_iv
    if a == b:
        return lo <= a <= hi
    if lo > hi:
        return False
    # the unique root in (a, b) may coincide with a query endpoint
    if a < lo < b and not p.evaluate(lo):
        return True
    if a < hi < b and not p.evaluate(hi):
        return True
    while True:
        if lo < a and b < hi:
            return True
        if b <= lo or a >= hi:
            # endpoint coincidence was excluded above or is outside (a, b)
            return False
        a, b = refine_interval(p, a, b, (b - a) / 4)
        if a == b:
            return lo <= a <= hi


def count_roots_in_closed(p: UniPoly, intervals: List[Interval], lo: mpq, hi: mpq) -> int:
    """How many isolated roots of p lie in [lo, hi]; exact."""
    return sum(1 for iv in intervals if root_in_closed(p, iv, lo, hi))
