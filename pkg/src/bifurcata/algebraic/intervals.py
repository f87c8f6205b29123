"""Exact rational interval arithmetic (closed intervals, mpq endpoints).

Endpoints are exact rationals, so there is no outward rounding anywhere:
interval results are the exact images of the endpoint combinations.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from gmpy2 import mpq

IV = Tuple[mpq, mpq]


def iv_point(x: mpq) -> IV:
    return (x, x)


def iv_add(a: IV, b: IV) -> IV:
    return (a[0] + b[0], a[1] + b[1])


def iv_sub(a: IV, b: IV) -> IV:
    return (a[0] - b[1], a[1] - b[0])


def iv_neg(a: IV) -> IV:
    return (-a[1], -a[0])


def iv_mul(a: IV, b: IV) -> IV:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(products), max(products))


def iv_scale(a: IV, c: mpq) -> IV:
    if c >= 0:
        return (a[0] * c, a[1] * c)
    return (a[1] * c, a[0] * c)


def iv_pow(a: IV, n: int) -> IV:
    out = iv_point(mpq(1))
    for _ in range(n):
        out = iv_mul(out, a)
    return out


def iv_width(a: IV) -> mpq:
    return a[1] - a[0]


def iv_sign(a: IV) -> int | None:
    """Certified sign, or None when the interval straddles zero."""
    if a[0] > 0:
        return 1
    if a[1] < 0:
        return -1
    if a[0] == a[1] == 0:
        return 0
    return None


def iv_contains(a: IV, x: mpq) -> bool:
    return a[0] <= x <= a[1]


def iv_horner(coeff_ivs: Sequence[IV], x: IV) -> IV:
    acc = iv_point(mpq(0))
    for c in reversed(coeff_ivs):
        acc = iv_add(iv_mul(acc, x), c)
    return acc
