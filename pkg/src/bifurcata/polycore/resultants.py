"""Resultants, bivariate gcds and squarefree parts over a coefficient field.

Bivariate resultants use evaluation + Newton interpolation: specialise the
surviving variable at rational nodes where neither leading coefficient
vanishes, take exact univariate resultants and interpolate.  This sidesteps
the coefficient explosion of a naive Sylvester expansion and stays correct
over extension fields.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from gmpy2 import mpq

from ..errors import InternalInvariantError
from .poly import BiPoly, UniPoly


def _fpow(c, n: int, field):
    out = field.one
    for _ in range(n):
        out = out * c
    return out


def resultant_univariate(p: UniPoly, q: UniPoly):
    """Sylvester resultant of two univariate polynomials; field element.

    Computed by a Euclidean remainder sequence with the standard degree and
    sign bookkeeping; exact over any field.
    """
    f = p.field
    if p.is_zero() or q.is_zero():
        return f.zero
    m, n = p.degree, q.degree
    if m == 0 and n == 0:
        raise ValueError("resultant requires a nonconstant input")
    if m == 0:
        return _fpow(p.leading_coefficient(), n, f)
    if n == 0:
        return _fpow(q.leading_coefficient(), m, f)
    sign = 1
    total = f.one
    a, b = p, q
    while True:
        m, n = a.degree, b.degree
        r = a % b
        if r.is_zero():
            return f.zero
        k = r.degree
        if (m * n) % 2:
            sign = -sign
        total = total * _fpow(b.leading_coefficient(), m - k, f)
        a, b = b, r
        if k == 0:
            total = total * _fpow(b.leading_coefficient(), a.degree, f)
            break
    return total if sign > 0 else -total


def interpolate(nodes: Sequence, values: Sequence, var: str, field) -> UniPoly:
    """Newton-form interpolation through (nodes[i], values[i]); exact."""
    n = len(nodes)
    if n == 0:
        return UniPoly.zero(var, field)
    # divided differences
    table = list(values)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (nodes[i] - nodes[i - level])
    poly = UniPoly.constant(table[n - 1], var, field)
    for i in range(n - 2, -1, -1):
        shifted = UniPoly((-nodes[i], field.one), var, field)
        poly = poly * shifted + UniPoly.constant(table[i], var, field)
    return poly


def _rational_nodes(field):
    """0, 1, -1, 2, -2, ... as field elements."""
    yield field.from_q(mpq(0))
    k = 1
    while True:
        yield field.from_q(mpq(k))
        yield field.from_q(mpq(-k))
        k += 1


def resultant_bivariate(p: BiPoly, q: BiPoly, var: str) -> UniPoly:
    """Res_var(p, q) as a univariate polynomial in the surviving variable."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    if p.vars != q.vars:
        raise ValueError("variable mismatch")
    field = p.field
    other = p.vars[1 - p.vars.index(var)]
    mp, mq = p.degree_in(var), q.degree_in(var)
    if mp == 0 and mq == 0:
        raise ValueError("resultant requires an input nonconstant in " + var)
    if mp == 0:
        base = next(iter(p.as_coeff_polys(var).values()))
        out = UniPoly.constant(field.one, other, field)
        for _ in range(mq):
            out = out * base
        return out
    if mq == 0:
        base = next(iter(q.as_coeff_polys(var).values()))
        out = UniPoly.constant(field.one, other, field)
        for _ in range(mp):
            out = out * base
        return out
    bound = p.degree_in(other) * mq + q.degree_in(other) * mp
    lp = p.as_coeff_polys(var)[mp]
    lq = q.as_coeff_polys(var)[mq]
    nodes: List = []
    values: List = []
    for node in _rational_nodes(field):
        if not lp.evaluate(node) or not lq.evaluate(node):
            continue
        pu = p.eval_var(other, node)
        qu = q.eval_var(other, node)
        values.append(resultant_univariate(pu, qu))
        nodes.append(node)
        if len(nodes) == bound + 1:
            break
    return interpolate(nodes, values, other, field)


def resultant(p, q, var: str):
    """Public resultant: dispatches on UniPoly/BiPoly inputs."""
    if isinstance(p, UniPoly) and isinstance(q, UniPoly):
        if p.var != var or q.var != var:
            raise ValueError("variable mismatch")
        return resultant_univariate(p, q)
    if isinstance(p, BiPoly) and isinstance(q, BiPoly):
        return resultant_bivariate(p, q, var)
    raise TypeError("resultant expects two UniPoly or two BiPoly values")


# -- bivariate gcd (primitive PRS in the chosen main variable) ---------------


def _coeff_list(p: BiPoly, main: str) -> List[UniPoly]:
    other = p.vars[1 - p.vars.index(main)]
    if p.is_zero():
        return []
    polys = p.as_coeff_polys(main)
    deg = max(polys)
    zero = UniPoly.zero(other, p.field)
    return [polys.get(k, zero) for k in range(deg + 1)]


def _from_coeff_list(cs: List[UniPoly], main: str, vars: Tuple[str, str], field) -> BiPoly:
    return BiPoly.from_coeff_polys({k: c for k, c in enumerate(cs) if not c.is_zero()}, main, vars, field)


def _uni_gcd_many(polys: List[UniPoly]) -> UniPoly:
    g = None
    for p in polys:
        if p.is_zero():
            continue
        g = p if g is None else g.gcd(p)
        if g.degree == 0:
            break
    if g is None:
        raise ValueError("gcd of zero polynomials")
    return g.monic()


def content_in(p: BiPoly, main: str) -> UniPoly:
    """gcd of the coefficients of powers of `main`; a poly in the other var."""
    return _uni_gcd_many(_coeff_list(p, main))


def _prem(a: List[UniPoly], b: List[UniPoly]) -> List[UniPoly]:
    """Pseudo-remainder of coefficient lists (UniPoly coefficients).

    Scales by the divisor's leading coefficient once per cancellation step;
    the caller strips content afterwards, so the extra factors are harmless.
    """
    db = len(b) - 1
    lb = b[-1]
    rem = list(a)
    while rem and len(rem) - 1 >= db:
        k = len(rem) - 1 - db
        lead = rem[-1]
        rem = [c * lb for c in rem]
        for i in range(db + 1):
            rem[i + k] = rem[i + k] - lead * b[i]
        rem.pop()  # leading term cancels exactly
        while rem and rem[-1].is_zero():
            rem.pop()
    return rem


def gcd_bivariate(p: BiPoly, q: BiPoly) -> BiPoly:
    """gcd in K[v0, v1], normalised to monic leading univariate content."""
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    if p.vars != q.vars:
        raise ValueError("variable mismatch")
    field = p.field
    vars = p.vars
    main = vars[1]
    if p.degree_in(main) == 0 and q.degree_in(main) == 0:
        gp = _as_unipoly(p, vars[0])
        gq = _as_unipoly(q, vars[0])
        return BiPoly.from_unipoly(gp.gcd(gq), vars, field)
    cont_p = content_in(p, main)
    cont_q = content_in(q, main)
    cont = cont_p.gcd(cont_q)
    pp = _coeff_list(p.exact_div(BiPoly.from_unipoly(cont_p, vars, field)), main)
    qq = _coeff_list(q.exact_div(BiPoly.from_unipoly(cont_q, vars, field)), main)
    if len(pp) < len(qq):
        pp, qq = qq, pp
    while qq:
        if len(qq) == 1:
            # primitive univariate-in-main gcd reached a constant-in-main poly
            qq_poly = qq[0]
            if qq_poly.is_zero():
                break
            # primitive: content is 1, so gcd of primitive parts is trivial
            pp = [UniPoly.constant(field.one, qq_poly.var, field)]
            qq = []
            break
        r = _prem(pp, qq)
        if r:
            rc = _uni_gcd_many(r)
            r = [c.exact_div(rc) for c in r]
        pp, qq = qq, r
    g_prim = _from_coeff_list(pp, main, vars, field)
    # normalise: strip content of the primitive chain result
    gc = content_in(g_prim, main)
    g_prim = g_prim.exact_div(BiPoly.from_unipoly(gc, vars, field))
    g = g_prim * BiPoly.from_unipoly(cont, vars, field)
    # certify by trial division
    try:
        p.exact_div(g)
        q.exact_div(g)
    except InternalInvariantError:
        raise InternalInvariantError("bivariate gcd failed its division certificate")
    return g


def _as_unipoly(p: BiPoly, var: str) -> UniPoly:
    if p.degree_in(p.vars[1 - p.vars.index(var)]) > 0:
        raise ValueError("polynomial is not univariate in " + var)
    polys = p.as_coeff_polys(var)
    deg = max(polys) if polys else 0
    return UniPoly(
        tuple(polys.get(k, UniPoly.zero("t", p.field)).constant_coefficient() for k in range(deg + 1)),
        var,
        p.field,
    )


def squarefree_part_bivariate(p: BiPoly) -> BiPoly:
    """Product of the distinct irreducible factors of p (up to a constant)."""
    if p.is_zero():
        raise ValueError("squarefree part of zero polynomial")
    vars = p.vars
    field = p.field
    x, y = vars
    if p.degree_in(x) == 0:
        return BiPoly.from_unipoly(_as_unipoly(p, y).squarefree_part(), vars, field)
    if p.degree_in(y) == 0:
        return BiPoly.from_unipoly(_as_unipoly(p, x).squarefree_part(), vars, field)
    cont = content_in(p, x)  # poly in y: carries every x-free factor
    pp = p.exact_div(BiPoly.from_unipoly(cont, vars, field))
    if pp.degree_in(x) > 0:
        g = gcd_bivariate(pp, pp.partial(x))
        pp_sf = pp.exact_div(g)
    else:
        pp_sf = pp
    out = pp_sf * BiPoly.from_unipoly(cont.squarefree_part(), vars, field)
    return out


def squarefree_part(p):
    """Squarefree part of a UniPoly or BiPoly (content-normalised)."""
    if isinstance(p, UniPoly):
        if p.is_zero():
            raise ValueError("squarefree part of zero polynomial")
        return p.squarefree_part()
    if isinstance(p, BiPoly):
        return squarefree_part_bivariate(p)
    raise TypeError("squarefree_part expects UniPoly or BiPoly")
