"""Genus-2 curves y^2 = f(x) with a monic squarefree quintic f and three
marked rational Weierstrass roots.

The marked roots drive the whole eight-chart construction: their order is
user-supplied and fixed, and determines the edge directions of the cube
deterministically.  Recentering f at a root, and the matrix/vector form of
that coefficient transform, also live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb

from .field import QQ, FieldElement, PrimeField, RationalField
from .unipoly import UniPoly, poly_gcd


@dataclass(frozen=True)
class Genus2Curve:
    field: object
    a: tuple  # (a0, a1, a2, a3, a4) of f = x^5 + a4 x^4 + ... + a0
    marked_roots: tuple  # (rho1, rho2, rho3), distinct roots of f

    def __post_init__(self):
        if self.field.characteristic == 2:
            raise ValueError("characteristic 2 is not supported")
        if len(self.a) != 5 or len(self.marked_roots) != 3:
            raise ValueError("need 5 coefficients and 3 marked roots")
        f = self.f_poly
        for rho in self.marked_roots:
            if not f(rho).is_zero():
                raise ValueError(f"marked value {rho} is not a root of f")
        g = poly_gcd(f, f.derivative())
        if g.degree() != 0:
            raise ValueError("f has repeated roots")
        if len({r.value for r in self.marked_roots}) != 3:
            raise ValueError("marked roots must be pairwise distinct")

    @cached_property
    def f_poly(self) -> UniPoly:
        return UniPoly(self.field, tuple(self.a) + (self.field.one,))

    def __repr__(self):
        return f"Genus2Curve({self.field}, a={list(self.a)}, roots={list(self.marked_roots)})"


def curve_from_coeffs(field, a, marked_roots) -> Genus2Curve:
    """Validate and build a curve from raw coefficient / root values."""
    return Genus2Curve(field, tuple(field(c) for c in a), tuple(field(r) for r in marked_roots))


@dataclass(frozen=True)
class RecenteredCoeffs:
    """Coefficients of f in the basis (x - rho)^i; a'_5 = 1 stays implicit."""

    rho: FieldElement
    aprime: tuple


def recenter(curve: Genus2Curve, rho) -> RecenteredCoeffs:
    """Expand f around rho: f(x) = (x-rho)^5 + sum a'_i (x-rho)^i.

    Computed operationally as the Taylor coefficients of f(y + rho), so the
    result is convention-free; the matrix form is derived from this, not the
    other way round.
    """
    rho = curve.field(rho)
    shifted = curve.f_poly.compose_linear(rho)  # f(x + rho): coeff i is a'_i
    aprime = tuple(shifted.coeff(i) for i in range(5))
    return RecenteredCoeffs(rho, aprime)


def transform_matrices(field, rho):
    """The (A(rho), b(rho)) pair with a' = a . A(rho) + b(rho) on row vectors.

    A is lower triangular with A[i][j] = C(i,j) rho^(i-j); b[j] = C(5,j) rho^(5-j)
    carries the monic leading term.  A(rho) . A(-rho) is the identity.
    """
    rho = field(rho)
    powers = [field.one]
    for _ in range(5):
        powers.append(powers[-1] * rho)
    A = tuple(
        tuple(field(comb(i, j)) * powers[i - j] if i >= j else field.zero for j in range(5))
        for i in range(5)
    )
    b = tuple(field(comb(5, j)) * powers[5 - j] for j in range(5))
    return A, b


def apply_transform(A, b, a):
    """Row-vector action: (a . A + b)_j = sum_i a_i A[i][j] + b[j]."""
    out = []
    for j in range(len(b)):
        acc = b[j]
        for i in range(len(b)):
            acc = acc + a[i] * A[i][j]
        out.append(acc)
    return tuple(out)


def _divisors(n: int):
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def weierstrass_points(curve: Genus2Curve):
    """x-coordinates of all affine Weierstrass points found over the base field.

    Over F_p this is an exhaustive scan, so the list is complete.  Over Q a
    rational-root scan is used and the marked roots are always included.
    """
    f = curve.f_poly
    field = curve.field
    if isinstance(field, PrimeField):
        roots = [field(x) for x in range(field.p) if f(field(x)).is_zero()]
        return sorted(roots, key=lambda r: r.value)
    # Rational roots s/t with t | lead and s | constant of the cleared form.
    found = {r.value for r in curve.marked_roots}
    coeffs = [c.value for c in f.coeffs]
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // _gcd_int(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    while ints and ints[0] == 0:  # x = 0 root; deflate and keep scanning
        found.add(Fraction(0))
        ints = ints[1:]
    if ints:
        c0, clead = ints[0], ints[-1]
        for s in _divisors(c0):
            for t in _divisors(clead):
                for cand in (Fraction(s, t), Fraction(-s, t)):
                    if f(field(cand)).is_zero():
                        found.add(cand)
    return [field(v) for v in sorted(found)]


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1


# Curve config files: line-oriented `key = value` text with keys field/a/roots.

def parse_scalar(text: str):
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return int(text)


def load_curve_config(text: str) -> Genus2Curve:
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        entries[key] = value
    for key in ("field", "a", "roots"):
        if key not in entries:
            raise ValueError(f"config is missing '{key}'")
    spec = entries["field"]
    if spec == "Q":
        field = QQ
    elif spec.startswith("Fp:"):
        field = PrimeField(int(spec[3:]))
    else:
        raise ValueError(f"unknown field spec {spec!r} (use 'Fp:<p>' or 'Q')")
    a = [parse_scalar(v) for v in entries["a"].split()]
    roots = [parse_scalar(v) for v in entries["roots"].split()]
    if len(a) != 5:
        raise ValueError("'a' must list the 5 coefficients a0..a4")
    if len(roots) != 3:
        raise ValueError("'roots' must list the 3 marked roots")
    return curve_from_coeffs(field, a, roots)


def dump_curve_config(curve: Genus2Curve) -> str:
    """Canonical echo of a curve config; loading it back is the identity."""
    field = curve.field
    spec = "Q" if isinstance(field, RationalField) else f"Fp:{field.p}"
    a = " ".join(str(c) for c in curve.a)
    roots = " ".join(str(r) for r in curve.marked_roots)
    return f"field = {spec}\na = {a}\nroots = {roots}\n"
