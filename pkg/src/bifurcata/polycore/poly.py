"""Dense/sparse exact polynomial types over a pluggable coefficient field.

`UniPoly` is a dense coefficient tuple, `BiPoly` a sparse exponent map and
`TriPoly` a sparse homogeneous form.  Coefficients live in a field object:
either the rational singleton `QQ` or a real algebraic extension
(`bifurcata.algebraic.ExtensionField`).  Field elements must support
`+ - * / ==` and truthiness (zero test); that keeps every algorithm here
generic across both fields.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from gmpy2 import mpq, mpz

from ..errors import InternalInvariantError
from .rational import QONE, QZERO


class RationalField:
    """The field of rational numbers; elements are `gmpy2.mpq`."""

    is_rational = True

    zero = QZERO
    one = QONE

    def from_q(self, value) -> mpq:
        return mpq(value)

    def to_str(self, value) -> str:
        return str(value)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def _field_eq(f1, f2) -> bool:
    return f1 is f2 or (getattr(f1, "is_rational", False) and getattr(f2, "is_rational", False))


class UniPoly:
    """Univariate polynomial; coefficients ascending by exponent."""

    __slots__ = ("coeffs", "var", "field")

    def __init__(self, coeffs: Sequence, var: str = "x", field=QQ):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var
        self.field = field

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(var: str = "x", field=QQ) -> "UniPoly":
        return UniPoly((), var, field)

    @staticmethod
    def constant(c, var: str = "x", field=QQ) -> "UniPoly":
        return UniPoly((c,), var, field)

    @staticmethod
    def variable(var: str = "x", field=QQ) -> "UniPoly":
        return UniPoly((field.zero, field.one), var, field)

    @staticmethod
    def from_int_coeffs(coeffs: Sequence[int], var: str = "x") -> "UniPoly":
        return UniPoly(tuple(mpq(c) for c in coeffs), var, QQ)

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading_coefficient(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def constant_coefficient(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[0]

    def coefficient(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.coeffs == other.coeffs
            and _field_eq(self.field, other.field)
        )

    def __hash__(self):
        return hash((self.coeffs, id(self.field) if not getattr(self.field, "is_rational", False) else 0))

    # -- arithmetic --------------------------------------------------------

    def _spawn(self, coeffs) -> "UniPoly":
        return UniPoly(coeffs, self.var, self.field)

    def __neg__(self):
        return self._spawn(tuple(-c for c in self.coeffs))

    def __add__(self, other: "UniPoly"):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self._spawn(out)

    def __sub__(self, other: "UniPoly"):
        return self + (-other)

    def __mul__(self, other: "UniPoly"):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(self.var, self.field)
        zero = self.field.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return self._spawn(out)

    def scale(self, c) -> "UniPoly":
        if not c:
            return UniPoly.zero(self.var, self.field)
        return self._spawn(tuple(c * a for a in self.coeffs))

    def shift_exponents(self, k: int) -> "UniPoly":
        """Multiply by var**k."""
        if not self.coeffs:
            return self
        return self._spawn((self.field.zero,) * k + self.coeffs)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly.constant(self.field.one, self.var, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        """Euclidean division; requires a field and nonzero divisor."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly.zero(self.var, self.field), self
        quo = [self.field.zero] * (dq + 1)
        dlc = other.coeffs[-1]
        dn = len(other.coeffs) - 1
        for k in range(dq, -1, -1):
            c = rem[dn + k]
            if c:
                factor = c / dlc
                quo[k] = factor
                for i, dc in enumerate(other.coeffs):
                    rem[i + k] = rem[i + k] - factor * dc
        return self._spawn(quo), self._spawn(rem)

    def __mod__(self, other: "UniPoly"):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InternalInvariantError("expected exact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lc = self.coeffs[-1]
        return self._spawn(tuple(c / lc for c in self.coeffs))

    def derivative(self) -> "UniPoly":
        if len(self.coeffs) <= 1:
            return UniPoly.zero(self.var, self.field)
        f = self.field
        return self._spawn(tuple(f.from_q(mpq(i)) * c for i, c in enumerate(self.coeffs) if i))

    def evaluate(self, value):
        """Horner evaluation; `value` must live in (or coerce into) the field."""
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly.zero(inner.var, self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly.constant(c, inner.var, self.field)
        return acc

    def shift(self, a) -> "UniPoly":
        """p(x + a) by repeated synthetic division."""
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                cs[k] = cs[k] + a * cs[k + 1]
        return self._spawn(cs)

    def reverse(self) -> "UniPoly":
        return self._spawn(tuple(reversed(self.coeffs)))

    def map_coeffs(self, fn: Callable, field=None, var: str | None = None) -> "UniPoly":
        return UniPoly(tuple(fn(c) for c in self.coeffs), var or self.var, field or self.field)

    # -- gcd / squarefree --------------------------------------------------

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd over the coefficient field."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, (a % b)
            if not b.is_zero():
                b = b.monic()
        if a.is_zero():
            return a
        return a.monic()

    def squarefree_part(self) -> "UniPoly":
        if self.is_zero():
            raise ValueError("squarefree part of zero polynomial")
        if self.degree == 0:
            return UniPoly.constant(self.field.one, self.var, self.field)
        g = self.gcd(self.derivative())
        return self.exact_div(g).monic()

    # -- rational-only helpers ----------------------------------------------

    def integer_coefficients(self) -> List[int]:
        """Clear denominators and content; rational field only."""
        if not getattr(self.field, "is_rational", False):
            raise TypeError("integer_coefficients needs rational coefficients")
        if not self.coeffs:
            return []
        den = mpz(1)
        for c in self.coeffs:
            den = den * c.denominator // gmpy2_gcd(den, c.denominator)
        ints = [mpz(c * den) for c in self.coeffs]
        g = mpz(0)
        for v in ints:
            g = gmpy2_gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        return [int(v) for v in ints]

    # -- printing ------------------------------------------------------------

    def __str__(self):
        return format_unipoly(self)

    def __repr__(self):
        return f"UniPoly({self})"


import gmpy2 as _gmpy2


def gmpy2_gcd(a, b):
    return _gmpy2.gcd(mpz(a), mpz(b))


def format_coeff(c, field) -> str:
    return str(c) if getattr(field, "is_rational", False) else field.to_str(c)


def format_unipoly(p: UniPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if not c:
            continue
        parts.append((k, c))
    return _join_terms(parts, lambda k: _power_str(p.var, k), p.field)


def _power_str(var: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def _join_terms(terms, mono_of, field) -> str:
    out = []
    rational = getattr(field, "is_rational", False)
    for key, c in terms:
        mono = mono_of(key)
        if rational:
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
        else:
            sign = "+"
            cs = field.to_str(c)
            if mono and cs == "1":
                body = mono
            elif mono:
                body = f"({cs})*{mono}" if any(op in cs for op in "+-") and len(cs) > 1 else f"{cs}*{mono}"
            else:
                body = cs
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


class BiPoly:
    """Bivariate polynomial as a map (i, j) -> coefficient of v0^i * v1^j."""

    __slots__ = ("coeffs", "vars", "field")

    def __init__(self, coeffs: Dict[Tuple[int, int], object], vars: Tuple[str, str] = ("x", "y"), field=QQ):
        self.coeffs = {e: c for e, c in coeffs.items() if c}
        self.vars = tuple(vars)
        self.field = field

    @staticmethod
    def zero(vars=("x", "y"), field=QQ) -> "BiPoly":
        return BiPoly({}, vars, field)

    @staticmethod
    def constant(c, vars=("x", "y"), field=QQ) -> "BiPoly":
        return BiPoly({(0, 0): c}, vars, field)

    @staticmethod
    def variable(name: str, vars=("x", "y"), field=QQ) -> "BiPoly":
        idx = vars.index(name)
        e = (1, 0) if idx == 0 else (0, 1)
        return BiPoly({e: field.one}, vars, field)

    def _spawn(self, coeffs) -> "BiPoly":
        return BiPoly(coeffs, self.vars, self.field)

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def total_degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(i + j for (i, j) in self.coeffs)

    def degree_in(self, var: str) -> int:
        if not self.coeffs:
            return -1
        idx = self.vars.index(var)
        return max(e[idx] for e in self.coeffs)

    def coefficient(self, e: Tuple[int, int]):
        return self.coeffs.get(e, self.field.zero)

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, BiPoly)
            and self.vars == other.vars
            and _field_eq(self.field, other.field)
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((tuple(sorted(self.coeffs.items(), key=lambda t: t[0])), self.vars))

    # -- arithmetic ------------------------------------------------------------

    def __neg__(self):
        return self._spawn({e: -c for e, c in self.coeffs.items()})

    def __add__(self, other: "BiPoly"):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return self._spawn(out)

    def __sub__(self, other: "BiPoly"):
        return self + (-other)

    def __mul__(self, other: "BiPoly"):
        out: Dict[Tuple[int, int], object] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                e = (i1 + i2, j1 + j2)
                p = c1 * c2
                s = out.get(e)
                out[e] = p if s is None else s + p
        return self._spawn(out)

    def scale(self, c) -> "BiPoly":
        if not c:
            return BiPoly.zero(self.vars, self.field)
        return self._spawn({e: c * a for e, a in self.coeffs.items()})

    def __pow__(self, n: int):
        result = BiPoly.constant(self.field.one, self.vars, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def partial(self, var: str) -> "BiPoly":
        idx = self.vars.index(var)
        out = {}
        f = self.field
        for (i, j), c in self.coeffs.items():
            k = (i, j)[idx]
            if k == 0:
                continue
            e = (i - 1, j) if idx == 0 else (i, j - 1)
            term = f.from_q(mpq(k)) * c
            s = out.get(e)
            out[e] = term if s is None else s + term
        return self._spawn(out)

    # -- conversions -----------------------------------------------------------

    def eval_var(self, var: str, value) -> UniPoly:
        """Substitute one variable by a field value; returns UniPoly in the other."""
        idx = self.vars.index(var)
        other = self.vars[1 - idx]
        f = self.field
        deg_other = 0 if not self.coeffs else max(e[1 - idx] for e in self.coeffs)
        # group by power of the substituted variable to share Horner work
        by_sub: Dict[int, List] = {}
        for (i, j), c in self.coeffs.items():
            k = (i, j)[idx]
            m = (i, j)[1 - idx]
            by_sub.setdefault(k, []).append((m, c))
        out = [f.zero] * (deg_other + 1)
        power = f.one
        for k in range(0, (max(by_sub) + 1) if by_sub else 0):
            if k:
                power = power * value
            for m, c in by_sub.get(k, ()):
                out[m] = out[m] + c * power
        return UniPoly(out, other, f)

    def evaluate(self, v0, v1):
        return self.eval_var(self.vars[0], v0).evaluate(v1)

    def as_coeff_polys(self, main: str) -> Dict[int, UniPoly]:
        """View as polynomial in `main` with UniPoly coefficients in the other var."""
        idx = self.vars.index(main)
        other = self.vars[1 - idx]
        grouped: Dict[int, Dict[int, object]] = {}
        for (i, j), c in self.coeffs.items():
            k = (i, j)[idx]
            m = (i, j)[1 - idx]
            grouped.setdefault(k, {})[m] = c
        out = {}
        for k, mono in grouped.items():
            deg = max(mono)
            out[k] = UniPoly(tuple(mono.get(t, self.field.zero) for t in range(deg + 1)), other, self.field)
        return out

    @staticmethod
    def from_coeff_polys(polys: Dict[int, UniPoly], main: str, vars: Tuple[str, str], field) -> "BiPoly":
        idx = vars.index(main)
        out: Dict[Tuple[int, int], object] = {}
        for k, p in polys.items():
            for m, c in enumerate(p.coeffs):
                if not c:
                    continue
                e = (k, m) if idx == 0 else (m, k)
                out[e] = c
        return BiPoly(out, vars, field)

    @staticmethod
    def from_unipoly(p: UniPoly, vars: Tuple[str, str], field=None) -> "BiPoly":
        field = field or p.field
        idx = vars.index(p.var)
        out = {}
        for k, c in enumerate(p.coeffs):
            if c:
                out[(k, 0) if idx == 0 else (0, k)] = c
        return BiPoly(out, vars, field)

    def translate(self, var: str, a) -> "BiPoly":
        """Substitute var -> var + a (a in the field)."""
        idx = self.vars.index(var)
        coeff_polys = self.as_coeff_polys(var)
        # Horner in (var + a): rebuild as sum c_k(other) * (var + a)^k
        out = BiPoly.zero(self.vars, self.field)
        shifted = BiPoly({(0, 0): a, ((1, 0) if idx == 0 else (0, 1)): self.field.one}, self.vars, self.field)
        deg = max(coeff_polys) if coeff_polys else 0
        for k in range(deg, -1, -1):
            out = out * shifted
            if k in coeff_polys:
                out = out + BiPoly.from_unipoly(coeff_polys[k], self.vars, self.field)
        return out

    def exact_div(self, divisor: "BiPoly") -> "BiPoly":
        """Exact division (graded-lex trial division); raises if not divisible."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self.coeffs)
        quo: Dict[Tuple[int, int], object] = {}
        key = lambda e: (e[0] + e[1], e)
        dlm = max(divisor.coeffs, key=key)
        dlc = divisor.coeffs[dlm]
        while rem:
            rlm = max(rem, key=key)
            if rlm[0] < dlm[0] or rlm[1] < dlm[1]:
                raise InternalInvariantError("expected exact bivariate division")
            e = (rlm[0] - dlm[0], rlm[1] - dlm[1])
            c = rem[rlm] / dlc
            quo[e] = quo.get(e, self.field.zero) + c
            for de, dc in divisor.coeffs.items():
                t = (e[0] + de[0], e[1] + de[1])
                nv = rem.get(t, self.field.zero) - c * dc
                if nv:
                    rem[t] = nv
                elif t in rem:
                    del rem[t]
        return self._spawn(quo)

    def map_coeffs(self, fn: Callable, field=None, vars=None) -> "BiPoly":
        return BiPoly({e: fn(c) for e, c in self.coeffs.items()}, vars or self.vars, field or self.field)

    def rename(self, vars: Tuple[str, str]) -> "BiPoly":
        return BiPoly(dict(self.coeffs), vars, self.field)

    def swap_vars(self) -> "BiPoly":
        return BiPoly({(j, i): c for (i, j), c in self.coeffs.items()}, (self.vars[1], self.vars[0]), self.field)

    def homogeneous_part(self, d: int) -> "BiPoly":
        return self._spawn({e: c for e, c in self.coeffs.items() if e[0] + e[1] == d})

    def homogenize(self, zvar: str = "z") -> "TriPoly":
        if self.is_zero():
            raise ValueError("cannot homogenize the zero polynomial")
        d = self.total_degree
        out = {}
        for (i, j), c in self.coeffs.items():
            out[(i, j, d - i - j)] = c
        return TriPoly(out, self.vars + (zvar,), self.field)

    def __str__(self):
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(), key=lambda t: (-(t[0][0] + t[0][1]), (-t[0][0], -t[0][1])))

        def mono(e):
            i, j = e
            parts = []
            if i:
                parts.append(_power_str(self.vars[0], i))
            if j:
                parts.append(_power_str(self.vars[1], j))
            return "*".join(parts)

        return _join_terms(items, mono, self.field)

    def __repr__(self):
        return f"BiPoly({self})"


class TriPoly:
    """Homogeneous trivariate polynomial (sparse exponent map)."""

    __slots__ = ("coeffs", "vars", "field", "degree")

    def __init__(self, coeffs: Dict[Tuple[int, int, int], object], vars=("x", "y", "z"), field=QQ):
        self.coeffs = {e: c for e, c in coeffs.items() if c}
        self.vars = tuple(vars)
        self.field = field
        degs = {sum(e) for e in self.coeffs}
        if len(degs) > 1:
            raise ValueError("TriPoly requires homogeneous input")
        self.degree = degs.pop() if degs else -1

    def set_var_to_one(self, var: str) -> BiPoly:
        idx = self.vars.index(var)
        keep = tuple(k for k in range(3) if k != idx)
        out: Dict[Tuple[int, int], object] = {}
        for e, c in self.coeffs.items():
            key = (e[keep[0]], e[keep[1]])
            s = out.get(key)
            out[key] = c if s is None else s + c
        return BiPoly(out, (self.vars[keep[0]], self.vars[keep[1]]), self.field)

    def evaluate(self, v0, v1, v2):
        f = self.field
        total = f.zero
        for (i, j, k), c in self.coeffs.items():
            term = c
            for _ in range(i):
                term = term * v0
            for _ in range(j):
                term = term * v1
            for _ in range(k):
                term = term * v2
            total = total + term
        return total

    def __eq__(self, other):
        return (
            isinstance(other, TriPoly)
            and self.vars == other.vars
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items(), key=lambda t: t[0])))

    def __str__(self):
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(), key=lambda t: (-t[0][0], -t[0][1], -t[0][2]))

        def mono(e):
            parts = []
            for v, k in zip(self.vars, e):
                if k:
                    parts.append(_power_str(v, k))
            return "*".join(parts)

        return _join_terms(items, mono, self.field)

    def __repr__(self):
        return f"TriPoly({self})"
