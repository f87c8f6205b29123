"""Arithmetic in a simple real extension field Q(alpha).

Elements are residues modulo the generator's irreducible minimal polynomial.
Zero testing is therefore syntactic (the reduced representation is the zero
tuple), and the sign of a nonzero element is obtained by evaluating its
representation over the generator's interval and refining the generator until
the enclosure excludes zero -- which must happen, because a nonzero residue of
degree below the minimal polynomial cannot vanish at alpha.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from gmpy2 import mpq

from ..errors import InternalInvariantError
from ..polycore.factor import factor_rational, is_irreducible
from ..polycore.poly import QQ, UniPoly
from ..polycore.roots import isolate_real_roots_sqfree, root_in_closed
from .intervals import IV, iv_horner, iv_point, iv_sign, iv_width
from .modfield import ExtensionElement, ModularFieldBase
from .numbers import AlgebraicNumber

__all__ = [
    "ExtensionElement",
    "ExtensionField",
    "embed_rational_poly",
    "extension_root_to_algebraic",
    "field_sign_at",
    "isolate_real_roots_extension",
    "refine_extension_root",
    "sturm_chain",
]


class ExtensionField(ModularFieldBase):
    """Q(alpha) for a real algebraic generator with irreducible minpoly."""

    def __init__(self, generator: AlgebraicNumber, name: str = "a"):
        if generator.degree < 2:
            raise ValueError("generator must be irrational; use QQ otherwise")
        if not is_irreducible(generator.minpoly):
            raise InternalInvariantError("generator minimal polynomial must be irreducible")
        super().__init__(generator.minpoly.monic(), name)
        self.generator = generator

    # -- analysis ------------------------------------------------------------------

    def interval(self, a: ExtensionElement, width: Optional[mpq] = None) -> IV:
        """Rational enclosure of the real value of `a`; optionally refined."""
        coeff_ivs = [iv_point(c) for c in a.coeffs]
        enc = iv_horner(coeff_ivs, self.generator.interval)
        if width is not None:
            while iv_width(enc) > width:
                self.generator.refine_step()
                enc = iv_horner(coeff_ivs, self.generator.interval)
        return enc

    def sign(self, a: ExtensionElement) -> int:
        if not a:
            return 0
        if a.is_rational():
            return 1 if a.coeffs[0] > 0 else -1
        coeff_ivs = [iv_point(c) for c in a.coeffs]
        while True:
            s = iv_sign(iv_horner(coeff_ivs, self.generator.interval))
            if s is not None:
                return s
            self.generator.refine_step()

    def to_algebraic(self, a: ExtensionElement) -> AlgebraicNumber:
        """The element as an algebraic number over Q (norm + isolation)."""
        if a.is_rational():
            return AlgebraicNumber.from_rational(a.coeffs[0])
        norm = self.element_norm_poly(a)
        isolation = isolate_real_roots_sqfree(norm)
        while True:
            lo, hi = self.interval(a)
            inside = [iv for iv in isolation if root_in_closed(norm, iv, lo, hi)]
            if len(inside) == 1:
                return AlgebraicNumber.from_defining(norm, lo, hi)
            self.generator.refine_step()

    def __repr__(self):
        return f"Q({self.generator_name}|{self.generator.minpoly_string()})"


def embed_rational_poly(p: UniPoly, field) -> UniPoly:
    """Lift a rational UniPoly into the given coefficient field."""
    if getattr(field, "is_rational", False):
        return p
    return p.map_coeffs(field.from_q, field, p.var)


# -- real root isolation over Q(alpha) via Sturm sequences -----------------------


def field_sign_at(field, p: UniPoly, t: mpq) -> int:
    v = p.evaluate(field.from_q(t))
    return field.sign(v)


def sturm_chain(p: UniPoly) -> List[UniPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _variations(chain: Sequence[UniPoly], t: mpq, field) -> int:
    signs = [s for s in (field_sign_at(field, p, t) for p in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _cauchy_bound(field, p: UniPoly) -> mpq:
    lead_iv = field.interval(p.leading_coefficient())
    while iv_sign(lead_iv) is None:
        field.generator.refine_step()
        lead_iv = field.interval(p.leading_coefficient())
    lead_low = min(abs(lead_iv[0]), abs(lead_iv[1]))
    top = mpq(0)
    for c in p.coeffs:
        iv = field.interval(c)
        top = max(top, abs(iv[0]), abs(iv[1]))
    return 1 + top / lead_low


def _rational_roots(field, p: UniPoly) -> List[mpq]:
    """All rational roots of p over Q(alpha), found via the norm polynomial."""
    roots = []
    for factor, _ in factor_rational(field.norm_poly(p)):
        if factor.degree == 1:
            cand = -factor.coeffs[0] / factor.coeffs[1]
            if not p.evaluate(field.from_q(cand)):
                roots.append(cand)
    return sorted(set(roots))


def isolate_real_roots_extension(field, p: UniPoly) -> List[Tuple[mpq, mpq]]:
    """Isolating rational intervals for the real roots of p over Q(alpha).

    The squarefree part is taken internally.  Exact rational roots come back
    as point intervals; every open interval has rational endpoints that are
    provably not roots, so downstream sign bisection is safe.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    p = p.squarefree_part()
    if p.degree < 1:
        return []
    rational = _rational_roots(field, p)
    reduced = p
    for r in rational:
        reduced = reduced.exact_div(UniPoly((-field.from_q(r), field.one), p.var, field))
    points = [(r, r) for r in rational]
    if reduced.degree < 1:
        return sorted(points, key=lambda iv: iv[0])

    chain = sturm_chain(reduced)
    bound = _cauchy_bound(field, reduced)
    out: List[Tuple[mpq, mpq]] = []

    def var_at(t: mpq) -> int:
        return _variations(chain, t, field)

    def recurse(lo: mpq, hi: mpq, vlo: int, vhi: int) -> None:
        n = vlo - vhi
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        vmid = var_at(mid)
        recurse(lo, mid, vlo, vmid)
        recurse(mid, hi, vmid, vhi)

    recurse(-bound, bound, var_at(-bound), var_at(bound))

    # keep rational point roots out of the open intervals
    final: List[Tuple[mpq, mpq]] = list(points)
    for lo, hi in out:
        for r in rational:
            if lo < r < hi:
                if var_at(lo) - var_at(r) == 1:
                    hi = r
                else:
                    lo = r
        final.append((lo, hi))
    final.sort(key=lambda iv: iv[0])
    return final


def refine_extension_root(field, p: UniPoly, iv: Tuple[mpq, mpq], width: mpq) -> Tuple[mpq, mpq]:
    """Shrink an isolating interval (endpoints never roots) by sign bisection."""
    lo, hi = iv
    if lo == hi:
        return iv
    slo = field_sign_at(field, p, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = field_sign_at(field, p, mid)
        if sm == 0:
            raise InternalInvariantError("unexpected exact root at bisection point")
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return (lo, hi)


def extension_root_to_algebraic(field, p: UniPoly, iv: Tuple[mpq, mpq]) -> AlgebraicNumber:
    """Convert an isolated root of p over Q(alpha) into an AlgebraicNumber."""
    lo, hi = iv
    if lo == hi:
        return AlgebraicNumber.from_rational(lo)
    sqf = p.squarefree_part()
    norm = field.norm_poly(sqf).squarefree_part()
    isolation = isolate_real_roots_sqfree(norm)
    while True:
        inside = [j for j in isolation if root_in_closed(norm, j, lo, hi)]
        if len(inside) == 1:
            return AlgebraicNumber.from_defining(norm, lo, hi)
        lo, hi = refine_extension_root(field, sqf, (lo, hi), (hi - lo) / 4)
