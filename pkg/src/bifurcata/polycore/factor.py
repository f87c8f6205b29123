"""Univariate factorisation over the rationals, delegated to sympy.

Rational factorisation is classic infrastructure with excellent library
support; everything downstream only consumes the irreducible factor list.
"""

from __future__ import annotations

from typing import List, Tuple

import sympy
from gmpy2 import mpq

from .poly import QQ, UniPoly

_X = sympy.Symbol("x")


def _to_sympy(p: UniPoly) -> sympy.Poly:
    return sympy.Poly(
        {(k,): sympy.Rational(int(c.numerator), int(c.denominator)) for k, c in enumerate(p.coeffs)},
        _X,
        domain="QQ",
    )


def _from_sympy(sp: sympy.Poly, var: str) -> UniPoly:
    coeffs = [mpq(0)] * (sp.degree() + 1)
    for (k,), c in sp.terms():
        c = sympy.Rational(c)
        coeffs[k] = mpq(int(c.p), int(c.q))
    return UniPoly(coeffs, var, QQ)


def factor_rational(p: UniPoly) -> List[Tuple[UniPoly, int]]:
    """Irreducible factors with multiplicities; factors are integer-primitive
    with positive leading coefficient."""
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree == 0:
        return []
    _, factors = _to_sympy(p).factor_list()
    out = []
    for f, mult in factors:
        u = _from_sympy(sympy.Poly(f, _X), p.var)
        u = normalize_primitive(u)
        out.append((u, int(mult)))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out


def normalize_primitive(p: UniPoly) -> UniPoly:
    """Integer-primitive representative with positive leading coefficient."""
    ints = p.integer_coefficients()
    if ints and ints[-1] < 0:
        ints = [-c for c in ints]
    return UniPoly.from_int_coeffs(ints, p.var)


def is_irreducible(p: UniPoly) -> bool:
    factors = factor_rational(p)
    return len(factors) == 1 and factors[0][1] == 1
