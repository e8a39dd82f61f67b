"""Exact field arithmetic: prime fields F_p (p an odd prime) and the rationals.

Elements are immutable and always stored in canonical form (least nonnegative
residue for F_p, reduced fraction for Q), so equality and hashing never need a
normalisation pass and printed output is bit-exact across runs.
"""

from __future__ import annotations

from fractions import Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24, far beyond any use here)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldElement:
    """A canonical field element; all operators are exact."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.field.add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.field.sub(self, o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.field.sub(o, self)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.field.mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.field.div(self, o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.field.div(o, self)

    def __neg__(self):
        return self.field.neg(self)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return self.field.pow(self, n)

    def inverse(self):
        return self.field.inv(self)

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.value}"


class PrimeField:
    """F_p for an odd prime p, with least-nonnegative-residue representatives."""

    __slots__ = ("p", "_zero", "_one")

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        self.p = p
        self._zero = FieldElement(self, 0)
        self._one = FieldElement(self, 1)

    def __call__(self, v) -> FieldElement:
        if isinstance(v, FieldElement):
            if v.field != self:
                raise ValueError(f"field mismatch: {self} vs {v.field}")
            return v
        if isinstance(v, int):
            return FieldElement(self, v % self.p)
        if isinstance(v, Fraction):
            den = v.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {v} vanishes mod {self.p}")
            return FieldElement(self, v.numerator * pow(den, self.p - 2, self.p) % self.p)
        raise TypeError(f"cannot coerce {v!r} into {self}")

    @property
    def zero(self) -> FieldElement:
        return self._zero

    @property
    def one(self) -> FieldElement:
        return self._one

    @property
    def characteristic(self) -> int:
        return self.p

    def elements(self):
        """All field elements in canonical order (small fields only)."""
        return [FieldElement(self, v) for v in range(self.p)]

    def add(self, a, b):
        return FieldElement(self, (a.value + b.value) % self.p)

    def sub(self, a, b):
        return FieldElement(self, (a.value - b.value) % self.p)

    def mul(self, a, b):
        return FieldElement(self, a.value * b.value % self.p)

    def neg(self, a):
        return FieldElement(self, -a.value % self.p)

    def inv(self, a):
        if a.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return FieldElement(self, pow(a.value, self.p - 2, self.p))

    def div(self, a, b):
        if b.value == 0:
            raise ZeroDivisionError("division by zero")
        return FieldElement(self, a.value * pow(b.value, self.p - 2, self.p) % self.p)

    def pow(self, a, n: int):
        return FieldElement(self, pow(a.value, n, self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F_{self.p}"


class RationalField:
    """The rational numbers with exact Fraction representatives."""

    __slots__ = ()

    def __call__(self, v) -> FieldElement:
        if isinstance(v, FieldElement):
            if v.field != self:
                raise ValueError(f"field mismatch: {self} vs {v.field}")
            return v
        if isinstance(v, (int, Fraction)):
            return FieldElement(self, Fraction(v))
        raise TypeError(f"cannot coerce {v!r} into {self}")

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, Fraction(0))

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, Fraction(1))

    @property
    def characteristic(self) -> int:
        return 0

    def add(self, a, b):
        return FieldElement(self, a.value + b.value)

    def sub(self, a, b):
        return FieldElement(self, a.value - b.value)

    def mul(self, a, b):
        return FieldElement(self, a.value * b.value)

    def neg(self, a):
        return FieldElement(self, -a.value)

    def inv(self, a):
        if a.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return FieldElement(self, 1 / a.value)

    def div(self, a, b):
        if b.value == 0:
            raise ZeroDivisionError("division by zero")
        return FieldElement(self, a.value / b.value)

    def pow(self, a, n: int):
        return FieldElement(self, a.value**n)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "Q"


QQ = RationalField()
