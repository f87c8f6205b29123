"""Exact rational arithmetic helpers.

Coefficients throughout the package are `gmpy2.mpq` values: arbitrary
precision, canonical (positive denominator, reduced), and much faster than
`fractions.Fraction` on the coefficient sizes that resultant chains produce.
"""

from __future__ import annotations

from typing import Tuple, Union

import gmpy2
from gmpy2 import mpq, mpz

Q = mpq
QLike = Union[int, str, mpq]


def q(value: QLike, den: int | None = None) -> mpq:
    """Build an exact rational from an int, an `a/b` string, or another mpq."""
    if den is not None:
        return mpq(value, den)
    return mpq(value)


QZERO = mpq(0)
QONE = mpq(1)


def q_sign(x: mpq) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def isqrt_floor(n) -> "mpz":
    if n < 0:
        raise ValueError("isqrt of negative value")
    return gmpy2.isqrt(mpz(n))


def isqrt_ceil(n) -> "mpz":
    r = isqrt_floor(n)
    return r if r * r == n else r + 1


def sqrt_lower(x: mpq, scale_bits: int = 64) -> mpq:
    """Rational lower bound of sqrt(x) for x >= 0, tight to ~2^-scale_bits."""
    if x < 0:
        raise ValueError("sqrt of negative value")
    if x == 0:
        return QZERO
    s = mpz(1) << scale_bits
    # floor(sqrt(num*den*s^2)) / (den*s) <= sqrt(num/den)
    num, den = x.numerator, x.denominator
    return mpq(isqrt_floor(num * den * s * s), den * s)


def sqrt_upper(x: mpq, scale_bits: int = 64) -> mpq:
    """Rational upper bound of sqrt(x) for x >= 0."""
    if x < 0:
        raise ValueError("sqrt of negative value")
    if x == 0:
        return QZERO
    s = mpz(1) << scale_bits
    num, den = x.numerator, x.denominator
    return mpq(isqrt_ceil(num * den * s * s), den * s)


def nth_root_upper(x: mpq, n: int, scale_bits: int = 32) -> mpq:
    """Rational upper bound of x**(1/n) for x >= 0."""
    if x < 0:
        raise ValueError("root of negative value")
    if x == 0:
        return QZERO
    s = mpz(1) << scale_bits
    num, den = x.numerator, x.denominator
    # ceil((num/den)^(1/n) * s) / s, computed on integers
    target = num * s**n
    r = gmpy2.iroot(target // den, n)[0]
    while r**n * den < target:
        r += 1
    return mpq(r, s)


def round_down_denominator(x: mpq, max_den: int) -> mpq:
    """Largest rational <= x with denominator <= max_den."""
    if x.denominator <= max_den:
        return x
    # floor(x * max_den) / max_den
    n = (x.numerator * max_den) // x.denominator
    return mpq(n, max_den)


def q_min(*values: mpq) -> mpq:
    return min(values)


def q_interval_intersect(a: Tuple[mpq, mpq], b: Tuple[mpq, mpq]) -> Tuple[mpq, mpq] | None:
    lo = max(a[0], b[0])
    hi = min(a[1], b[1])
    if lo > hi:
        return None
    return (lo, hi)
