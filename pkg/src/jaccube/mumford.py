"""Divisor-class arithmetic in Mumford form: (U, V) with U | f - V^2.

This module is the independent oracle for everything built on top of it.
Addition is full Cantor composition/reduction (gcd-based, so it also covers
doubling, common support and Weierstrass points), and class enumeration over
a small prime field is done twice, by unrelated methods, so each scan checks
the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import Genus2Curve, weierstrass_points
from .field import PrimeField
from .unipoly import UniPoly, poly_xgcd

ENUMERATION_LIMIT = 1000


@dataclass(frozen=True)
class MumfordDivisor:
    u: UniPoly
    v: UniPoly

    def degree(self) -> int:
        d = self.u.degree()
        return 0 if d is None else d

    def is_zero_class(self) -> bool:
        return self.degree() == 0

    def sort_key(self):
        return (
            self.degree(),
            tuple(self.u.coeff(i).value for i in range(3)),
            tuple(self.v.coeff(i).value for i in range(2)),
        )

    def __repr__(self):
        return f"({self.u}, {self.v})"


def make_divisor(curve: Genus2Curve, u: UniPoly, v: UniPoly) -> MumfordDivisor:
    """Validate the reduced-divisor invariants and freeze the pair."""
    if u.is_zero() or not u.is_monic():
        raise ValueError("U must be monic")
    du = u.degree()
    if du > 2:
        raise ValueError("reduced divisors have deg U <= 2")
    v = v % u if du > 0 else UniPoly.zero(curve.field)
    if not ((curve.f_poly - v * v) % u).is_zero():
        raise ValueError("U does not divide f - V^2")
    return MumfordDivisor(u, v)


def zero_divisor(curve: Genus2Curve) -> MumfordDivisor:
    return MumfordDivisor(UniPoly.constant(curve.field, 1), UniPoly.zero(curve.field))


def divisor_from_point(curve: Genus2Curve, x, y) -> MumfordDivisor:
    """The class of (x, y) - P_inf; requires (x, y) on the curve."""
    x, y = curve.field(x), curve.field(y)
    if curve.f_poly(x) != y * y:
        raise ValueError(f"({x}, {y}) is not on the curve")
    return MumfordDivisor(UniPoly(curve.field, (-x, 1)), UniPoly.constant(curve.field, y))


def divisor_from_pair(curve: Genus2Curve, p1, p2) -> MumfordDivisor:
    """The class of P1 + P2 - 2 P_inf for affine points with P1 != involute(P2)."""
    (x1, y1), (x2, y2) = p1, p2
    field = curve.field
    x1, y1, x2, y2 = field(x1), field(y1), field(x2), field(y2)
    for x, y in ((x1, y1), (x2, y2)):
        if curve.f_poly(x) != y * y:
            raise ValueError(f"({x}, {y}) is not on the curve")
    if x1 == x2 and y1 == -y2:
        raise ValueError("points are hyperelliptic involutes (or a doubled Weierstrass point)")
    u = UniPoly.from_roots(field, (x1, x2))
    if x1 != x2:
        slope = (y2 - y1) / (x2 - x1)
        v = UniPoly(field, (y1 - slope * x1, slope))
    else:
        # Tangent case: V(x1) = y1 and V'(x1) = f'(x1) / (2 y1).
        slope = curve.f_poly.derivative()(x1) / (y1 + y1)
        v = UniPoly(field, (y1 - slope * x1, slope))
    return make_divisor(curve, u, v)


def negate(curve: Genus2Curve, d: MumfordDivisor) -> MumfordDivisor:
    v = (-d.v) % d.u if d.degree() > 0 else UniPoly.zero(curve.field)
    return MumfordDivisor(d.u, v)


def mumford_add(curve: Genus2Curve, d1: MumfordDivisor, d2: MumfordDivisor) -> MumfordDivisor:
    """Cantor composition followed by reduction; total on valid inputs."""
    f = curve.f_poly
    u1, v1 = d1.u, d1.v
    u2, v2 = d2.u, d2.v
    g, e1, e2 = poly_xgcd(u1, u2)
    d, c1, c2 = poly_xgcd(g, v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u, r = divmod(u1 * u2, d * d)
    assert r.is_zero()
    num = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)
    v, r = divmod(num, d)
    assert r.is_zero()
    u = u.monic()
    v = v % u
    while u.degree() > 2:
        u_next, r = divmod(f - v * v, u)
        assert r.is_zero()
        u = u_next.monic()
        v = (-v) % u
    if u.degree() == 0:
        return zero_divisor(curve)
    return MumfordDivisor(u, v % u)


def is_on_theta(d: MumfordDivisor) -> bool:
    return d.degree() < 2


def w_poly(curve: Genus2Curve, d: MumfordDivisor) -> UniPoly:
    """W with f = V^2 + U W; a failing division signals a broken invariant."""
    w, r = divmod(curve.f_poly - d.v * d.v, d.u)
    if not r.is_zero():
        raise ValueError("U does not divide f - V^2")
    return w


@dataclass(frozen=True)
class ClassType:
    kind: str  # Zero | ThetaMarked | ThetaAffine | WithTwoMarked | WithMarked | Generic
    marked: tuple = ()

    def __str__(self):
        return f"{self.kind}{list(self.marked)}" if self.marked else self.kind


def classify(curve: Genus2Curve, d: MumfordDivisor) -> ClassType:
    """Tag a class by marked-Weierstrass support and theta membership."""
    deg = d.degree()
    if deg == 0:
        return ClassType("Zero")
    hits = tuple(
        i + 1 for i, rho in enumerate(curve.marked_roots) if d.u(rho).is_zero()
    )
    if deg == 1:
        return ClassType("ThetaMarked", hits) if hits else ClassType("ThetaAffine")
    if len(hits) == 2:
        return ClassType("WithTwoMarked", hits)
    if len(hits) == 1:
        return ClassType("WithMarked", hits)
    return ClassType("Generic")


def two_torsion(curve: Genus2Curve):
    """The 2-torsion subgroup generated by all rational Weierstrass roots.

    With five rational roots this is the full group of 16; with three it is
    the order-8 subgroup used for the cube (closure picks up classes whose U
    is an irreducible quadratic factor of f, e.g. the sum of all three).
    """
    gens = [
        MumfordDivisor(UniPoly(curve.field, (-rho, 1)), UniPoly.zero(curve.field))
        for rho in weierstrass_points(curve)
    ]
    group = {zero_divisor(curve)}
    frontier = list(group)
    while frontier:
        nxt = []
        for d in frontier:
            for g in gens:
                s = mumford_add(curve, d, g)
                if s not in group:
                    group.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(group, key=MumfordDivisor.sort_key)


# ---------------------------------------------------------------------------
# Exhaustive enumeration over F_p, two ways.


class _Fp2:
    """Minimal F_p^2 = F_p[t]/(t^2 - n) arithmetic on (a, b) pairs, used only
    by the pair-of-points enumeration to walk conjugate point orbits."""

    def __init__(self, p: int):
        self.p = p
        n = next(m for m in range(2, p) if pow(m, (p - 1) // 2, p) == p - 1)
        self.n = n

    def mul(self, x, y):
        a, b = x
        c, d = y
        p, n = self.p, self.n
        return ((a * c + n * b * d) % p, (a * d + b * c) % p)

    def poly_eval(self, int_coeffs, x):
        acc = (0, 0)
        for c in reversed(int_coeffs):
            acc = self.mul(acc, x)
            acc = ((acc[0] + c) % self.p, acc[1])
        return acc

    def sqrt_table(self):
        table = {}
        for a in range(self.p):
            for b in range(self.p):
                sq = self.mul((a, b), (a, b))
                table.setdefault(sq, []).append((a, b))
        return table


def _affine_points(curve: Genus2Curve):
    field = curve.field
    p = field.p
    sqrt = {}
    for y in range(p):
        sqrt.setdefault(y * y % p, []).append(y)
    pts = []
    for x in range(p):
        fx = curve.f_poly(field(x)).value
        for y in sqrt.get(fx, ()):
            pts.append((x, y))
    return pts


def _enumerate_by_pairs(curve: Genus2Curve):
    """Geometric enumeration: classes built from curve points over F_p and
    conjugate point orbits over F_p^2."""
    field = curve.field
    p = field.p
    out = [zero_divisor(curve)]
    pts = _affine_points(curve)
    for x, y in pts:
        out.append(divisor_from_point(curve, x, y))
    for i in range(len(pts)):
        for j in range(i, len(pts)):
            x1, y1 = pts[i]
            x2, y2 = pts[j]
            if x1 == x2 and (y1 + y2) % p == 0:
                continue  # involute pair or doubled Weierstrass point
            out.append(divisor_from_pair(curve, pts[i], pts[j]))
    ext = _Fp2(p)
    table = ext.sqrt_table()
    int_coeffs = [c.value for c in curve.f_poly.coeffs]
    for b in range(1, (p - 1) // 2 + 1):
        for a in range(p):
            fx = ext.poly_eval(int_coeffs, (a, b))
            # Monic minimal polynomial of a + b t over F_p.
            u = UniPoly(field, ((a * a - ext.n * b * b) % p, (-2 * a) % p, 1))
            if fx == (0, 0):
                out.append(make_divisor(curve, u, UniPoly.zero(field)))
                continue
            for c, d in table.get(fx, ()):
                # Interpolating V has coefficients in F_p: v1 = d/b, v0 = c - v1 a.
                v1 = field(d) / field(b)
                v0 = field(c) - v1 * field(a)
                out.append(make_divisor(curve, u, UniPoly(field, (v0, v1))))
    return sorted(out, key=MumfordDivisor.sort_key)


def _enumerate_by_scan(curve: Genus2Curve):
    """Raw algebraic enumeration: all (u0, u1, v0, v1) with U | f - V^2."""
    from .chart import eval_e  # local import; chart depends on mumford

    field = curve.field
    p = field.p
    out = [zero_divisor(curve)]
    for x, y in _affine_points(curve):
        out.append(divisor_from_point(curve, x, y))
    a = curve.a
    els = field.elements()
    for u0 in els:
        for u1 in els:
            for v0 in els:
                for v1 in els:
                    e0, e1 = eval_e(a, (u0, u1, v0, v1))
                    if e0.is_zero() and e1.is_zero():
                        u = UniPoly(field, (u0, u1, 1))
                        v = UniPoly(field, (v0, v1))
                        out.append(make_divisor(curve, u, v))
    return sorted(out, key=MumfordDivisor.sort_key)


def enumerate_classes(curve: Genus2Curve, method: str = "pairs"):
    """Every reduced divisor exactly once, in canonical order.

    `pairs` is the O(p^2) default; `scan` is the O(p^4) cross-check.
    """
    if not isinstance(curve.field, PrimeField):
        raise ValueError("class enumeration needs a prime field")
    if curve.field.p > ENUMERATION_LIMIT:
        raise ValueError(f"field too large for enumeration (p > {ENUMERATION_LIMIT})")
    if method == "pairs":
        return _enumerate_by_pairs(curve)
    if method == "scan":
        return _enumerate_by_scan(curve)
    raise ValueError(f"unknown enumeration method {method!r}")
