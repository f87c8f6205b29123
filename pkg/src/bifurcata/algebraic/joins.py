"""Joining real algebraic numbers into one simple extension field.

Given a, b real algebraic, find gamma = a + k*b whose field contains both,
by eliminating y from {m_b(y) = 0, m_a(t - k*y) = 0}.  A candidate k is
certified by the classic gcd test: over Q(gamma), gcd(m_b(y), m_a(gamma - k*y))
must be linear, and its root is b.  Only finitely many k fail.
"""

from __future__ import annotations

from typing import Callable, Tuple, Union

from gmpy2 import mpq

from ..errors import InternalInvariantError
from ..polycore.poly import BiPoly, QQ, UniPoly
from ..polycore.resultants import resultant_bivariate
from ..polycore.roots import isolate_real_roots_sqfree, root_in_closed
from .extension import ExtensionElement, ExtensionField, embed_rational_poly
from .intervals import iv_add, iv_scale
from .numbers import AlgebraicNumber

FieldLike = Union[type(QQ), ExtensionField]


def compose_unipoly_bipoly(p: UniPoly, inner: BiPoly) -> BiPoly:
    """p(inner) for rational p; Horner over BiPoly."""
    acc = BiPoly.zero(inner.vars, inner.field)
    for c in reversed(p.coeffs):
        acc = acc * inner + BiPoly.constant(c, inner.vars, inner.field)
    return acc


def join_algebraic(a: AlgebraicNumber, b: AlgebraicNumber):
    """Smallest practical field containing both; returns (field, a_elem, b_elem).

    `field` is QQ when both are rational; elements are mpq in that case.
    """
    if a.is_rational() and b.is_rational():
        return QQ, a.rational_value(), b.rational_value()
    if a.is_rational():
        field = ExtensionField(b, "g")
        return field, field.from_q(a.rational_value()), field.alpha
    if b.is_rational():
        field = ExtensionField(a, "g")
        return field, field.alpha, field.from_q(b.rational_value())
    if a.equals(b):
        field = ExtensionField(a, "g")
        return field, field.alpha, field.alpha

    m_a, m_b = a.minpoly, b.minpoly
    k = 1
    while True:
        inner = BiPoly({(0, 1): mpq(1), (1, 0): mpq(-k)}, ("y", "t"), QQ)
        shifted = compose_unipoly_bipoly(m_a, inner)
        m_b_y = BiPoly.from_unipoly(m_b.map_coeffs(lambda c: c, QQ, "y"), ("y", "t"), QQ)
        elim = resultant_bivariate(m_b_y, shifted, "y").squarefree_part()
        isolation = isolate_real_roots_sqfree(elim)
        while True:
            lo, hi = iv_add(a.interval, iv_scale(b.interval, mpq(k)))
            hits = [iv for iv in isolation if root_in_closed(elim, iv, lo, hi)]
            if len(hits) == 1:
                break
            a.refine_step()
            b.refine_step()
        gamma = AlgebraicNumber.from_defining(elim, lo, hi)
        if gamma.degree >= 2:
            field = ExtensionField(gamma, "g")
            g = embed_rational_poly(m_b.map_coeffs(lambda c: c, QQ, "y"), field).gcd(
                embed_rational_poly(m_a, field).compose(
                    UniPoly((field.alpha, field.from_q(-k)), "y", field)
                )
            )
            if g.degree == 1:
                b_elem = -g.coeffs[0]
                a_elem = field.alpha - field.from_q(k) * b_elem
                if embed_rational_poly(m_a, field).evaluate(a_elem) or embed_rational_poly(
                    m_b, field
                ).evaluate(b_elem):
                    raise InternalInvariantError("join certificate failed")
                return field, a_elem, b_elem
        k += 1


def element_into(value, target_field, generator_image=None):
    """Map a field element into `target_field`.

    mpq values embed directly; ExtensionElement values need the image of
    their generator inside the target field.
    """
    if isinstance(value, ExtensionElement):
        if generator_image is None:
            raise ValueError("generator image required to map extension elements")
        return embed_rational_poly(value.rep_poly(), target_field).evaluate(generator_image)
    if getattr(target_field, "is_rational", False):
        return mpq(value)
    return target_field.from_q(mpq(value))


def join_field_with_algebraic(base_field, lam: AlgebraicNumber):
    """Join a coefficient field with one more algebraic number.

    Returns (field, map_base, lam_elem) where map_base sends base-field
    elements into the joined field.
    """
    if getattr(base_field, "is_rational", False):
        if lam.is_rational():
            v = lam.rational_value()
            return QQ, (lambda c: mpq(c)), v
        field = ExtensionField(lam, "g")
        return field, (lambda c: field.from_q(mpq(c))), field.alpha
    if lam.is_rational():
        v = base_field.from_q(lam.rational_value())
        return base_field, (lambda c: c), v
    field, alpha_img, lam_elem = join_algebraic(base_field.generator, lam)
    if getattr(field, "is_rational", False):
        raise InternalInvariantError("join of irrational numbers cannot be rational")
    return field, (lambda c: element_into(c, field, alpha_img)), lam_elem


def field_of(number: AlgebraicNumber):
    """QQ for rational numbers, ExtensionField otherwise; with the element."""
    if number.is_rational():
        return QQ, number.rational_value()
    field = ExtensionField(number, "g")
    return field, field.alpha
