"""Univariate polynomials over an exact field, with exact division and gcd.

Coefficients are stored in ascending degree order with the trailing (leading)
coefficient nonzero; the zero polynomial is the empty tuple and its degree is
None rather than -1, so degree arithmetic can never silently go negative.
"""

from __future__ import annotations

from .field import FieldElement


class UniPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def from_roots(cls, field, roots):
        out = cls.constant(field, 1)
        for r in roots:
            out = out * cls(field, (-field(r), field.one))
        return out

    def degree(self):
        """Degree as an int, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if i < len(self.coeffs) else self.field.zero

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def monic(self) -> "UniPoly":
        if self.is_zero() or self.is_monic():
            return self
        inv = self.coeffs[-1].inverse()
        return UniPoly(self.field, [c * inv for c in self.coeffs])

    def _check(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise ValueError("field mismatch between polynomials")
            return other
        return UniPoly.constant(self.field, other)

    def __add__(self, other):
        o = self._check(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self.field, [self.coeff(i) + o.coeff(i) for i in range(n)])

    def __sub__(self, other):
        o = self._check(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self.field, [self.coeff(i) - o.coeff(i) for i in range(n)])

    def __neg__(self):
        return UniPoly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            c = self.field(other)
            return UniPoly(self.field, [a * c for a in self.coeffs])
        o = self._check(other)
        if self.is_zero() or o.is_zero():
            return UniPoly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, den):
        den = self._check(den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        num = list(self.coeffs)
        dd = den.degree()
        inv_lead = den.leading().inverse()
        q = [self.field.zero] * max(len(num) - dd, 0)
        while len(num) - 1 >= dd and num:
            k = len(num) - 1 - dd
            c = num[-1] * inv_lead
            q[k] = c
            for i in range(dd + 1):
                num[k + i] = num[k + i] - c * den.coeffs[i]
            while num and num[-1].is_zero():
                num.pop()
        return UniPoly(self.field, q), UniPoly(self.field, num)

    def __floordiv__(self, den):
        return divmod(self, den)[0]

    def __mod__(self, den):
        return divmod(self, den)[1]

    def __call__(self, x) -> FieldElement:
        x = self.field(x)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(self.field, [self.coeffs[i] * i for i in range(1, len(self.coeffs))])

    def compose_linear(self, c) -> "UniPoly":
        """self(x + c), by Horner over the polynomial ring."""
        c = self.field(c)
        shift = UniPoly(self.field, (c, self.field.one))
        acc = UniPoly.zero(self.field)
        for a in reversed(self.coeffs):
            acc = acc * shift + UniPoly.constant(self.field, a)
        return acc

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("x" if c == self.field.one else f"{c}*x")
            else:
                parts.append(f"x^{i}" if c == self.field.one else f"{c}*x^{i}")
        return " + ".join(reversed(parts))

    def __repr__(self):
        return f"UniPoly({self})"


def poly_divmod(num: UniPoly, den: UniPoly):
    """Quotient and remainder with num = q*den + r and deg r < deg den."""
    return divmod(num, den)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (the zero polynomial if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: UniPoly, b: UniPoly):
    """(g, s, t) with g = s*a + t*b and g the monic gcd."""
    field = a.field
    r0, r1 = a, b
    s0, s1 = UniPoly.constant(field, 1), UniPoly.zero(field)
    t0, t1 = UniPoly.zero(field), UniPoly.constant(field, 1)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = r0.leading().inverse()
    return r0 * inv, s0 * inv, t0 * inv
