"""Exact sign of a bivariate polynomial at an algebraic point.

Interval evaluation resolves almost every query; when it cannot (the value
is zero or stubbornly close), the point is lifted into a single joined
extension field where the evaluation is exact and zero is syntactic.
"""

from __future__ import annotations

from gmpy2 import mpq

from ..polycore.poly import BiPoly, QQ
from .extension import ExtensionField
from .intervals import iv_add, iv_mul, iv_point, iv_pow, iv_sign
from .joins import join_field_with_algebraic
from .numbers import AlgebraicNumber

_INTERVAL_ROUNDS = 3


def _coeff_interval(c, field):
    if getattr(field, "is_rational", False):
        return iv_point(mpq(c))
    return field.interval(c)


def _interval_eval(p: BiPoly, x_iv, y_iv):
    total = iv_point(mpq(0))
    for (i, j), c in p.coeffs.items():
        term = iv_mul(_coeff_interval(c, p.field), iv_mul(iv_pow(x_iv, i), iv_pow(y_iv, j)))
        total = iv_add(total, term)
    return total


def sign_at(p: BiPoly, point) -> int:
    """Sign of p at (a, b) for algebraic coordinates; exact, in {-1, 0, 1}."""
    a, b = point
    if not isinstance(a, AlgebraicNumber):
        a = AlgebraicNumber.from_rational(a)
    if not isinstance(b, AlgebraicNumber):
        b = AlgebraicNumber.from_rational(b)
    for _ in range(_INTERVAL_ROUNDS):
        s = iv_sign(_interval_eval(p, a.interval, b.interval))
        if s is not None:
            return s
        a.refine_step()
        b.refine_step()
        if isinstance(p.field, ExtensionField):
            p.field.generator.refine_step()
    # exact route: one field containing the coefficients and both coordinates
    f1, map_base, a_elem = join_field_with_algebraic(p.field, a)
    f2, map_f1, b_elem = join_field_with_algebraic(f1, b)
    value = p.map_coeffs(lambda c: map_f1(map_base(c)), f2).evaluate(map_f1(a_elem), b_elem)
    if getattr(f2, "is_rational", False):
        return 0 if not value else (1 if value > 0 else -1)
    return f2.sign(value)
