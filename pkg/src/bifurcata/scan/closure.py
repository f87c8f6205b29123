"""Exact complex algebraic numbers over Q, for branch-coefficient arithmetic.

A value is (irreducible minimal polynomial, certified disk): the disk has
rational center and radius, contains exactly one root of the polynomial, and
its radius stays below a quarter of a proven root-separation bound.  Under
that invariant, equality of two values sharing a minimal polynomial is a
single disk-overlap test, and re-identification after refining numerics is
unambiguous.  Numeric root approximations come from mpmath; every certificate
(radius bounds, disjointness, separation) is exact rational arithmetic.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

import mpmath
from gmpy2 import mpq, mpz

from ..algebraic.intervals import IV, iv_add, iv_mul, iv_point, iv_scale, iv_sub
from ..algebraic.modfield import ExtensionElement, ModularFieldBase
from ..algebraic.numbers import AlgebraicNumber
from ..errors import InternalInvariantError
from ..polycore.factor import factor_rational, normalize_primitive
from ..polycore.poly import BiPoly, QQ, UniPoly
from ..polycore.rational import nth_root_upper, sqrt_lower, sqrt_upper
from ..polycore.resultants import resultant_bivariate, resultant_univariate
from ..polycore.roots import isolate_real_roots_sqfree

QPoint = Tuple[mpq, mpq]

# -- complex rectangle enclosures ---------------------------------------------

CBox = Tuple[IV, IV]


def cbox_point(re: mpq, im: mpq = mpq(0)) -> CBox:
    return (iv_point(re), iv_point(im))


def cbox_add(a: CBox, b: CBox) -> CBox:
    return (iv_add(a[0], b[0]), iv_add(a[1], b[1]))


def cbox_sub(a: CBox, b: CBox) -> CBox:
    return (iv_sub(a[0], b[0]), iv_sub(a[1], b[1]))


def cbox_mul(a: CBox, b: CBox) -> CBox:
    re = iv_sub(iv_mul(a[0], b[0]), iv_mul(a[1], b[1]))
    im = iv_add(iv_mul(a[0], b[1]), iv_mul(a[1], b[0]))
    return (re, im)


def cbox_scale(a: CBox, c: mpq) -> CBox:
    return (iv_scale(a[0], c), iv_scale(a[1], c))


def cbox_horner(coeffs: Sequence[CBox], x: CBox) -> CBox:
    acc = cbox_point(mpq(0))
    for c in reversed(coeffs):
        acc = cbox_add(cbox_mul(acc, x), c)
    return acc


def _disk_to_cbox(center: QPoint, radius: mpq) -> CBox:
    return (
        (center[0] - radius, center[0] + radius),
        (center[1] - radius, center[1] + radius),
    )


def _disk_meets_cbox(center: QPoint, radius: mpq, box: CBox) -> bool:
    (re_lo, re_hi), (im_lo, im_hi) = box
    dx = max(re_lo - center[0], mpq(0), center[0] - re_hi)
    dy = max(im_lo - center[1], mpq(0), center[1] - im_hi)
    return dx * dx + dy * dy <= radius * radius


# -- exact complex evaluation ----------------------------------------------------


def _cpx_eval(p: UniPoly, z: QPoint) -> QPoint:
    """p(z) for rational p at an exact rational complex point."""
    re, im = mpq(0), mpq(0)
    zre, zim = z
    for c in reversed(p.coeffs):
        re, im = re * zre - im * zim + c, re * zim + im * zre
    return (re, im)


def _mpf_to_mpq(x) -> mpq:
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return mpq(0)
    v = mpq(man) * (mpq(2) ** exp if exp >= 0 else mpq(1, mpz(1) << (-exp)))
    return -v if sign else v


# -- separation bound --------------------------------------------------------------


def _sep4_bound(m: UniPoly) -> mpq:
    """Rational lower bound of (minimal root distance of m) / 4.

    Mahler's bound for a squarefree integer polynomial:
    sep(m) > sqrt(3 |disc|) / (d^((d+2)/2) * ||m||_2^(d-1)).
    """
    d = m.degree
    if d <= 1:
        return mpq(1)
    disc = resultant_univariate(m, m.derivative()) / m.leading_coefficient()
    if not disc:
        raise InternalInvariantError("separation bound needs a squarefree polynomial")
    num = sqrt_lower(3 * abs(disc))
    den1 = sqrt_upper(mpq(d) ** (d + 2))
    norm2sq = sum(c * c for c in m.coeffs)
    den2 = sqrt_upper(norm2sq ** (d - 1))
    sep = num / (den1 * den2)
    return sep / 4


# -- certified roots -----------------------------------------------------------------


class ComplexRoot:
    """One root of an irreducible rational polynomial, held by a certified disk."""

    __slots__ = ("minpoly", "center", "radius", "sep4", "_prec", "real_source")

    def __init__(self, minpoly: UniPoly, center: QPoint, radius: mpq, sep4: mpq,
                 prec: int = 64, real_source: Optional[AlgebraicNumber] = None):
        self.minpoly = minpoly
        self.center = center
        self.radius = radius
        self.sep4 = sep4
        self._prec = prec
        self.real_source = real_source

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def is_rational_value(self) -> bool:
        return self.degree == 1

    def rational_value(self) -> mpq:
        return -self.minpoly.coeffs[0] / self.minpoly.coeffs[1]

    def box(self) -> CBox:
        return _disk_to_cbox(self.center, self.radius)

    def conjugate(self) -> "ComplexRoot":
        src = self.real_source
        return ComplexRoot(self.minpoly, (self.center[0], -self.center[1]), self.radius,
                           self.sep4, self._prec, src)

    def refine(self) -> None:
        if self.real_source is not None:
            self.real_source.refine_step()
            lo, hi = self.real_source.interval
            self.center = ((lo + hi) / 2, mpq(0))
            self.radius = (hi - lo) / 2
            return
        if self.degree == 1 or self.radius == 0:
            return
        prec = self._prec * 2
        while True:
            disks = _certified_disks(self.minpoly, prec)
            if disks is not None:
                hits = [
                    (c, r)
                    for c, r in disks
                    if _dist_sq(c, self.center) <= (r + self.radius) ** 2
                ]
                if len(hits) == 1:
                    self.center, self.radius = hits[0]
                    self._prec = prec
                    return
                raise InternalInvariantError("root re-identification was ambiguous")
            prec *= 2

    def same_root(self, other: "ComplexRoot") -> bool:
        if self.minpoly != other.minpoly:
            return False
        return _dist_sq(self.center, other.center) <= (self.radius + other.radius) ** 2

    def is_real(self) -> bool:
        return self.as_real_algebraic() is not None

    def as_real_algebraic(self) -> Optional[AlgebraicNumber]:
        """The value as a real AlgebraicNumber, or None when not real."""
        if self.real_source is not None:
            return self.real_source
        if self.degree == 1:
            return AlgebraicNumber.from_rational(self.rational_value())
        real_ivs = isolate_real_roots_sqfree(self.minpoly)
        while True:
            if abs(self.center[1]) > self.radius:
                return None
            for lo, hi in real_ivs:
                from ..polycore.roots import refine_interval

                while (hi - lo) / 2 > self.sep4:
                    lo, hi = refine_interval(self.minpoly, lo, hi, (hi - lo) / 4)
                mid, halfw = (lo + hi) / 2, (hi - lo) / 2
                if _dist_sq(self.center, (mid, mpq(0))) <= (self.radius + halfw) ** 2:
                    number = AlgebraicNumber(self.minpoly, (lo, hi), _trusted=True)
                    self.real_source = number
                    return number
            self.refine()

    def __repr__(self):
        return f"ComplexRoot({self.minpoly_string()}, ~({float(self.center[0]):.4f}, {float(self.center[1]):.4f}))"

    def minpoly_string(self) -> str:
        return str(self.minpoly).replace(" ", "")


def _dist_sq(a: QPoint, b: QPoint) -> mpq:
    dx, dy = a[0] - b[0], a[1] - b[1]
    return dx * dx + dy * dy


def complex_root_from_rational(r: mpq) -> ComplexRoot:
    m = normalize_primitive(UniPoly((-mpq(r), mpq(1)), "x", QQ))
    return ComplexRoot(m, (mpq(r), mpq(0)), mpq(0), mpq(1))


def complex_root_from_real(a: AlgebraicNumber) -> ComplexRoot:
    if a.is_rational():
        root = complex_root_from_rational(a.rational_value())
        root.real_source = a
        return root
    sep4 = _sep4_bound(a.minpoly)
    while True:
        lo, hi = a.interval
        if (hi - lo) / 2 <= sep4:
            break
        a.refine_step()
    lo, hi = a.interval
    return ComplexRoot(a.minpoly, ((lo + hi) / 2, mpq(0)), (hi - lo) / 2, sep4, real_source=a)


def _certified_disks(m: UniPoly, prec: int) -> Optional[List[Tuple[QPoint, mpq]]]:
    """Pairwise-disjoint disks, one exact root each; None if `prec` too low."""
    d = m.degree
    ints = m.integer_coefficients()
    lc = mpq(ints[-1])
    sep4 = _sep4_bound(m)
    try:
        with mpmath.workprec(prec):
            approx = mpmath.polyroots([int(c) for c in reversed(ints)], maxsteps=150, extraprec=prec)
    except (mpmath.libmp.NoConvergence, ZeroDivisionError):
        return None
    disks: List[Tuple[QPoint, mpq]] = []
    for z in approx:
        z = mpmath.mpc(z)
        center = (_mpf_to_mpq(z.real), _mpf_to_mpq(z.imag))
        val = _cpx_eval(m, center)
        mag2 = val[0] * val[0] + val[1] * val[1]
        radius = nth_root_upper(mag2 / (lc * lc), 2 * d)
        if radius >= sep4:
            return None
        disks.append((center, radius))
    for i in range(d):
        for j in range(i + 1, d):
            ci, ri = disks[i]
            cj, rj = disks[j]
            if _dist_sq(ci, cj) <= (ri + rj) ** 2:
                return None
    return disks


def complex_roots_of_irreducible(m: UniPoly, prec: int = 64) -> List[ComplexRoot]:
    if m.degree == 1:
        return [complex_root_from_rational(-m.coeffs[0] / m.coeffs[1])]
    sep4 = _sep4_bound(m)
    while True:
        disks = _certified_disks(m, prec)
        if disks is not None:
            return [ComplexRoot(m, c, r, sep4, prec) for c, r in disks]
        prec *= 2
        if prec > 1 << 20:
            raise InternalInvariantError("root certification failed to converge")


def complex_roots_of_rational_poly(p: UniPoly) -> List[ComplexRoot]:
    """All distinct complex roots of a rational polynomial."""
    out: List[ComplexRoot] = []
    for factor, _ in factor_rational(p):
        if factor.degree >= 1:
            out.extend(complex_roots_of_irreducible(factor))
    return out


# -- the working field Q(theta) -------------------------------------------------------


class ComplexField(ModularFieldBase):
    """Q(theta) for a certified complex root theta; exact residue arithmetic."""

    def __init__(self, generator: ComplexRoot, name: str = "th"):
        super().__init__(generator.minpoly.monic(), name)
        self.generator = generator

    def box(self, a: ExtensionElement) -> CBox:
        coeffs = [cbox_point(c) for c in a.coeffs]
        return cbox_horner(coeffs, self.generator.box())

    def refine(self) -> None:
        self.generator.refine()

    def element_to_root(self, a: ExtensionElement) -> ComplexRoot:
        """Identify the element's value as a certified ComplexRoot."""
        if a.is_rational():
            return complex_root_from_rational(a.coeffs[0])
        norm = self.element_norm_poly(a)
        candidates = complex_roots_of_rational_poly(norm)
        while True:
            box = self.box(a)
            hits = [r for r in candidates if _disk_meets_cbox(r.center, r.radius, box)]
            if len(hits) == 1:
                return hits[0]
            if not hits:
                raise InternalInvariantError("element value missed every candidate root")
            for r in hits:
                r.refine()
            self.refine()

    def is_real_field(self) -> bool:
        return self.generator.real_source is not None or self.generator.is_rational_value()


def identify_root_among(candidates: List[ComplexRoot], box_fn) -> ComplexRoot:
    """Shrink until exactly one candidate disk meets the (refinable) box.

    `box_fn(refine: bool) -> CBox` returns the current enclosure, refining
    its inputs when asked.  The true value must be among the candidates.
    """
    box = box_fn(False)
    while True:
        hits = [r for r in candidates if _disk_meets_cbox(r.center, r.radius, box)]
        if len(hits) == 1:
            return hits[0]
        if not hits:
            raise InternalInvariantError("value escaped every candidate disk")
        for r in hits:
            r.refine()
        box = box_fn(True)


def join_complex(a: ComplexRoot, b: ComplexRoot):
    """One field containing both roots: (ComplexField, a_elem, b_elem)."""
    if b.is_rational_value():
        a, b = b, a
    if a.is_rational_value():
        if b.is_rational_value():
            raise ValueError("join of two rational values needs no field")
        field = ComplexField(b)
        return field, field.from_q(a.rational_value()), field.alpha
    if a.same_root(b):
        field = ComplexField(a)
        return field, field.alpha, field.alpha

    m_a, m_b = a.minpoly, b.minpoly
    k = 1
    while True:
        inner = BiPoly({(0, 1): mpq(1), (1, 0): mpq(-k)}, ("y", "t"), QQ)
        shifted = _compose_unipoly_bipoly(m_a, inner)
        m_b_y = BiPoly.from_unipoly(m_b.map_coeffs(lambda c: c, QQ, "y"), ("y", "t"), QQ)
        elim = resultant_bivariate(m_b_y, shifted, "y").squarefree_part()
        candidates = complex_roots_of_rational_poly(elim)

        def gamma_box(refine: bool) -> CBox:
            if refine:
                a.refine()
                b.refine()
            return cbox_add(a.box(), cbox_scale(b.box(), mpq(k)))

        gamma = identify_root_among(candidates, gamma_box)
        if gamma.degree >= 2:
            field = ComplexField(gamma)
            m_b_f = m_b.map_coeffs(field.from_q, field, "y")
            inner_f = UniPoly((field.alpha, field.from_q(-k)), "y", field)
            m_a_f = m_a.map_coeffs(field.from_q, field, "y").compose(inner_f)
            g = m_b_f.gcd(m_a_f)
            if g.degree == 1:
                b_elem = -g.coeffs[0]
                a_elem = field.alpha - field.from_q(k) * b_elem
                if m_a.map_coeffs(field.from_q, field).evaluate(a_elem) or m_b.map_coeffs(
                    field.from_q, field
                ).evaluate(b_elem):
                    raise InternalInvariantError("complex join certificate failed")
                return field, a_elem, b_elem
        k += 1


def _compose_unipoly_bipoly(p: UniPoly, inner: BiPoly) -> BiPoly:
    acc = BiPoly.zero(inner.vars, inner.field)
    for c in reversed(p.coeffs):
        acc = acc * inner + BiPoly.constant(c, inner.vars, inner.field)
    return acc
