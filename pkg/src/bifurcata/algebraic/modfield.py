"""Shared residue-ring arithmetic for Q[x]/(m), m monic irreducible over Q.

Both the real extension field and the complex number-field engine used by the
branch expansion are this ring plus an embedding choice (which root of m the
generator denotes); the modular arithmetic itself is identical.
"""

from __future__ import annotations

from typing import List, Tuple

from gmpy2 import mpq

from ..errors import InternalInvariantError
from ..polycore.poly import BiPoly, QQ, UniPoly
from ..polycore.resultants import resultant_bivariate


class ExtensionElement:
    """Residue of a rational polynomial modulo the field's minimal polynomial."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "ModularFieldBase", coeffs: Tuple[mpq, ...]):
        self.field = field
        self.coeffs = coeffs

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, ExtensionElement):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, mpq)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = self.field.coerce(other)
        return ExtensionElement(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self.field.coerce(other)
        return ExtensionElement(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self.field.coerce(other).__sub__(self)

    def __neg__(self):
        return ExtensionElement(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self.field.coerce(other)
        return self.field._mul(self, other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        other = self.field.coerce(other)
        return self.field._mul(self, self.field.invert(other))

    def __rtruediv__(self, other):
        return self.field.coerce(other).__truediv__(self)

    def rep_poly(self, var: str = "x") -> UniPoly:
        return UniPoly(self.coeffs, var, QQ)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> mpq:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def __repr__(self):
        return f"<{self.field.to_str(self)}>"


class ModularFieldBase:
    """Arithmetic of Q[x]/(m) for a monic irreducible modulus m."""

    is_rational = False

    def __init__(self, modulus_monic: UniPoly, name: str = "a"):
        m = modulus_monic
        self.generator_name = name
        self.degree = d = m.degree
        self._modulus = m
        rows: List[Tuple[mpq, ...]] = []
        row = [-c for c in m.coeffs[:-1]]
        rows.append(tuple(row))
        for _ in range(d - 2):
            shifted = [mpq(0)] + row
            top = shifted.pop()
            row = [shifted[i] + top * rows[0][i] for i in range(d)]
            rows.append(tuple(row))
        self._power_rows = rows
        self.zero = ExtensionElement(self, (mpq(0),) * d)
        self.one = ExtensionElement(self, (mpq(1),) + (mpq(0),) * (d - 1))
        self.alpha = ExtensionElement(self, tuple(mpq(1 if i == 1 else 0) for i in range(d)))

    @property
    def modulus(self) -> UniPoly:
        return self._modulus

    # -- construction ----------------------------------------------------------

    def from_q(self, value) -> ExtensionElement:
        value = mpq(value)
        return ExtensionElement(self, (value,) + (mpq(0),) * (self.degree - 1))

    def coerce(self, value) -> ExtensionElement:
        if isinstance(value, ExtensionElement):
            if value.field is not self:
                raise ValueError("element from a different extension field")
            return value
        return self.from_q(value)

    def from_rep(self, rep: UniPoly) -> ExtensionElement:
        if rep.degree >= self.degree:
            rep = rep % self._modulus.map_coeffs(lambda c: c, QQ, rep.var)
        coeffs = list(rep.coeffs) + [mpq(0)] * (self.degree - len(rep.coeffs))
        return ExtensionElement(self, tuple(coeffs))

    # -- field operations --------------------------------------------------------

    def _mul(self, a: ExtensionElement, b: ExtensionElement) -> ExtensionElement:
        d = self.degree
        prod = [mpq(0)] * (2 * d - 1)
        for i, ca in enumerate(a.coeffs):
            if not ca:
                continue
            for j, cb in enumerate(b.coeffs):
                if cb:
                    prod[i + j] += ca * cb
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                row = self._power_rows[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return ExtensionElement(self, tuple(out))

    def invert(self, a: ExtensionElement) -> ExtensionElement:
        if not a:
            raise ZeroDivisionError("division by zero in extension field")
        r0, r1 = self._modulus, a.rep_poly()
        s0 = UniPoly.zero("x", QQ)
        s1 = UniPoly.constant(mpq(1), "x", QQ)
        while r1.degree > 0:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r1.is_zero():
            raise InternalInvariantError("element representation shares a factor with the modulus")
        inv = s1.scale(mpq(1) / r1.coeffs[0])
        return self.from_rep(inv)

    # -- formal elimination (valid for any embedding of the generator) -----------

    def norm_poly(self, p: UniPoly) -> UniPoly:
        """Res_a(m(a), lift(p)) in Q[y]: nonzero, vanishes at every root of p."""
        lift: dict = {}
        for k, c in enumerate(p.coeffs):
            for i, ci in enumerate(c.coeffs):
                if ci:
                    lift[(i, k)] = ci
        lifted = BiPoly(lift, ("A", "y"), QQ)
        m_a = BiPoly.from_unipoly(self._modulus.map_coeffs(lambda c: c, QQ, "A"), ("A", "y"), QQ)
        norm = resultant_bivariate(m_a, lifted, "A").map_coeffs(lambda c: c, QQ, p.var)
        if norm.is_zero():
            raise InternalInvariantError("norm of a nonzero polynomial vanished")
        return norm

    def element_norm_poly(self, a: ExtensionElement) -> UniPoly:
        """Squarefree rational polynomial vanishing at the element's value."""
        rep = a.rep_poly("A")
        bivar = BiPoly({(0, 1): mpq(1)}, ("A", "t"), QQ) - BiPoly.from_unipoly(rep, ("A", "t"), QQ)
        m_a = BiPoly.from_unipoly(self._modulus.map_coeffs(lambda c: c, QQ, "A"), ("A", "t"), QQ)
        return resultant_bivariate(m_a, bivar, "A").squarefree_part()

    def to_str(self, a: ExtensionElement) -> str:
        if not a:
            return "0"
        return str(a.rep_poly(self.generator_name))
