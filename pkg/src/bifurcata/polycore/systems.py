"""Complete real solving of zero-dimensional bivariate systems.

Strategy: eliminate y by a resultant, isolate the real x-candidates, and for
each one pass to the fiber gcd(p(a, .), q(a, .)) over the extension field
Q(coefficients, a).  Fiber roots are common zeros by construction, so every
reported pair carries an exact certificate, and completeness follows from the
resultant's projection property.
"""

from __future__ import annotations

from typing import List, Tuple

from gmpy2 import mpq

from ..algebraic.extension import (
    ExtensionField,
    extension_root_to_algebraic,
    isolate_real_roots_extension,
)
from ..algebraic.joins import join_field_with_algebraic
from ..algebraic.numbers import AlgebraicNumber, sort_unique, _CompareKey
from ..errors import DegenerateGeometryError
from .poly import BiPoly, QQ, UniPoly
from .resultants import gcd_bivariate, resultant_bivariate
from .roots import isolate_real_roots_sqfree

Solution = Tuple[AlgebraicNumber, AlgebraicNumber]


def isolate_any(field, p: UniPoly) -> List[Tuple[mpq, mpq]]:
    """Real-root isolation dispatching on the coefficient field."""
    if getattr(field, "is_rational", False):
        return isolate_real_roots_sqfree(p.squarefree_part())
    return isolate_real_roots_extension(field, p)


def root_to_algebraic(field, p: UniPoly, iv: Tuple[mpq, mpq]) -> AlgebraicNumber:
    lo, hi = iv
    if lo == hi:
        return AlgebraicNumber.from_rational(lo)
    if getattr(field, "is_rational", False):
        return AlgebraicNumber.from_defining(p.squarefree_part(), lo, hi)
    return extension_root_to_algebraic(field, p, iv)


def real_roots_of(field, p: UniPoly) -> List[AlgebraicNumber]:
    """All real roots of a univariate polynomial, as algebraic numbers."""
    return [root_to_algebraic(field, p, iv) for iv in isolate_any(field, p)]


def solve_real_system(p: BiPoly, q: BiPoly) -> List[Solution]:
    """The finite set of real common zeros of {p = 0, q = 0}.

    Raises DegenerateGeometryError when the two curves share a component.
    Output is sorted lexicographically and exact.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("system polynomials must be nonzero")
    field = p.field
    if p.is_constant() or q.is_constant():
        return []
    common = gcd_bivariate(p, q)
    if common.total_degree > 0:
        raise DegenerateGeometryError("system has a positive-dimensional common component")

    xvar, yvar = p.vars
    if p.degree_in(yvar) == 0 and q.degree_in(yvar) == 0:
        # two univariate-in-x polynomials with trivial gcd: no common zeros
        return []
    if p.degree_in(xvar) == 0 and q.degree_in(xvar) == 0:
        return []

    eliminant = resultant_bivariate(p, q, yvar)
    if eliminant.is_zero():
        raise DegenerateGeometryError("resultant vanished despite trivial gcd")

    solutions: List[Solution] = []
    for iv in isolate_any(field, eliminant):
        a = root_to_algebraic(field, eliminant, iv)
        f_a, map_base, a_elem = join_field_with_algebraic(field, a)
        pa = p.map_coeffs(map_base, f_a).eval_var(xvar, a_elem)
        qa = q.map_coeffs(map_base, f_a).eval_var(xvar, a_elem)
        if pa.is_zero() and qa.is_zero():
            raise DegenerateGeometryError("both curves contain a vertical line")
        if pa.is_zero():
            fiber = qa
        elif qa.is_zero():
            fiber = pa
        else:
            fiber = pa.gcd(qa)
        if fiber.degree < 1:
            continue
        for iv_y in isolate_any(f_a, fiber):
            b = root_to_algebraic(f_a, fiber, iv_y)
            solutions.append((a, b))
    solutions.sort(key=lambda s: (_CompareKey(s[0]), _CompareKey(s[1])))
    return solutions
