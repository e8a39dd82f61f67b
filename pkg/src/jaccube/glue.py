"""The nine glue polynomials linking the charts of a class X and of X + T for
a 2-torsion class T, plus the chart translation that moves a general
Weierstrass root to the origin.

The affine glue g1..g9 is stated for a curve with a Weierstrass point at
(0, 0), i.e. for recentered coefficients with a'_0 = 0 and a'_1 != 0.  For an
edge in direction of the root rho the coordinates of both endpoints are first
translated by M(rho) and the recentered coefficient vector is used.  The
bihomogeneous G1..G9 are produced programmatically by padding each monomial
with z / zh up to the maximal bidegree, never transcribed.
"""

from __future__ import annotations

from .chart import E0_AFFINE, E1_AFFINE, eval_e
from .curve import Genus2Curve, recenter
from .multipoly import MPoly

S_VARS = ("u0", "u1", "v0", "v1")
H_VARS = ("uh0", "uh1", "vh0", "vh1")
PROJ_S = S_VARS + ("z",)
PROJ_H = H_VARS + ("zh",)

_u0, _u1, _v0, _v1 = (MPoly.var(n) for n in S_VARS)
_uh0, _uh1, _vh0, _vh1 = (MPoly.var(n) for n in H_VARS)
_a1, _a2, _a3, _a4 = (MPoly.var(n) for n in ("a1", "a2", "a3", "a4"))

# The nine affine glue relations between s and s-hat.
G_AFFINE = {
    1: _u0 * _uh0 - _a1,
    2: _vh0 * _u0 + _v0 * _uh0,
    3: _v0 * _vh0 + _a1 * (_a4 - _u1 - _uh1),
    4: _uh0 * (_v1 + _vh1) + _vh0 * (_u1 - _uh1),
    5: _u0 * (_v1 + _vh1) + _v0 * (_uh1 - _u1),
    6: -_a1 * _a3 + _a1 * _uh0 + _a1 * _u0 + _a1 * _uh1 * _u1
       - 2 * _u1 * _vh0 * _v0 - 2 * _uh0 * _v0 * _v1,
    7: -_a1 * _a3 + _a1 * _uh0 + _a1 * _u0 + _a1 * _uh1 * _u1
       - 2 * _uh1 * _vh0 * _v0 - 2 * _u0 * _vh0 * _vh1,
    8: -_a1 * _vh0 + _a3 * _u0 * _vh0 - _u0**2 * _vh0 - 2 * _a4 * _u0 * _u1 * _vh0
       + 3 * _u0 * _u1**2 * _vh0 + _a1 * _u1 * _vh1 + _a1 * _u1 * _v1
       + 2 * _vh0 * _v0 * _v1,
    9: -_a1 * _v0 + _a3 * _uh0 * _v0 - _uh0**2 * _v0 - 2 * _a4 * _uh0 * _uh1 * _v0
       + 3 * _uh0 * _uh1**2 * _v0 + _a1 * _uh1 * _v1 + _a1 * _uh1 * _vh1
       + 2 * _v0 * _vh0 * _vh1,
}

G_PROJ = {i: g.bihomogenize(S_VARS, H_VARS, "z", "zh") for i, g in G_AFFINE.items()}

# Expected bidegrees of G1..G9, with the z-side graded first.
BIDEGREES = {1: (1, 1), 2: (1, 1), 3: (1, 1), 4: (1, 2), 5: (2, 1),
             6: (2, 1), 7: (1, 2), 8: (3, 1), 9: (1, 3)}

# Intermediates of the degree-lowering chain that produces g6..g9 from the
# chart equations; kept as first-class polynomials so the chain can be proved
# by exact expansion.
H0 = (-_a2 * _uh0 + _a4 * _uh0 * _u0 + _a3 * _uh0 * _u1 - 2 * _uh0 * _u0 * _u1
      - _a4 * _uh0 * _u1**2 + _uh0 * _u1**3 + _vh0 * _v0 + _uh0 * _v1**2)
H1 = (_a1 * _uh0 - _a3 * _uh0 * _u0 + _uh0 * _u0**2 + _a4 * _uh0 * _u0 * _u1
      - _uh0 * _u0 * _u1**2 - _u1 * _vh0 * _v0 - 2 * _uh0 * _v0 * _v1)
H2 = (-_a1 * _a3 + _a1 * _uh0 + _a1 * _u0 + _a1 * _a4 * _u1 - _a1 * _u1**2
      - _u1 * _vh0 * _v0 - 2 * _uh0 * _v0 * _v1)
I0 = _a4 * _u0**2 - _uh1 * _u0**2 - _u0**2 * _u1 - _v0**2
I1 = -_a2 + _uh1 * _u0 + _a3 * _u1 - _u0 * _u1 - _a4 * _u1**2 + _u1**3 + _v1**2
I2 = (-_a2 * _vh0 + _a3 * _u1 * _vh0 - _a4 * _u1**2 * _vh0 + _u1**3 * _vh0
      + _a1 * _vh1 + _a1 * _v1 + _vh0 * _v1**2)

# Chart equations with the distinguished root at the origin (a0 = 0).
E0_AT_ROOT = E0_AFFINE.subs({"a0": 0})
E1_AT_ROOT = E1_AFFINE.subs({"a0": 0})

_SWAP = dict(zip(S_VARS + H_VARS, H_VARS + S_VARS))
_SWAP_PROJ = {**_SWAP, "z": "zh", "zh": "z"}


def swap_sides(poly: MPoly, projective: bool = False) -> MPoly:
    """Exchange the hatted and unhatted variable groups."""
    return poly.rename(_SWAP_PROJ if projective else _SWAP)


_G_ORDER = ("a1", "a3", "a4") + S_VARS + H_VARS
_GP_ORDER = ("a1", "a3", "a4") + PROJ_S + PROJ_H
_g_eval = {i: g.evaluator(_G_ORDER) for i, g in G_AFFINE.items()}
_G_eval = {i: g.evaluator(_GP_ORDER) for i, g in G_PROJ.items()}


def glue_coeffs(curve: Genus2Curve, l: int):
    """(a'_1, a'_3, a'_4) recentered at marked root l in {1, 2, 3}."""
    rc = recenter(curve, curve.marked_roots[l - 1])
    a0p, a1p = rc.aprime[0], rc.aprime[1]
    if not a0p.is_zero():
        raise ValueError("recentered a'_0 must vanish at a root")
    if a1p.is_zero():
        raise ValueError("a'_1 = 0: the root is not simple")
    return (rc.aprime[1], rc.aprime[3], rc.aprime[4])


def eval_g(aprime, s, shat):
    """The nine affine glue residuals; aprime = (a1, a3, a4) with a1 != 0."""
    if aprime[0].is_zero():
        raise ValueError("glue requires a1 != 0")
    field = aprime[0].field
    vals = tuple(aprime) + tuple(s) + tuple(shat)
    return tuple(_g_eval[i](field, vals) for i in range(1, 10))


def eval_G(aprime, S, Shat):
    """The nine bihomogeneous glue residuals on 5-tuples S, Shat."""
    if aprime[0].is_zero():
        raise ValueError("glue requires a1 != 0")
    field = aprime[0].field
    vals = tuple(aprime) + tuple(S) + tuple(Shat)
    return tuple(_G_eval[i](field, vals) for i in range(1, 10))


def chart_translate(S, rho):
    """M(rho) on projective chart coordinates; inverse is M(-rho)."""
    u0, u1, v0, v1, z = S
    return (u0 + u1 * rho + z * rho * rho, u1 + 2 * z * rho, v0 + v1 * rho, v1, z)


def affine_translate(s, rho):
    """m(rho) on affine chart coordinates (the z = 1 slice of M(rho))."""
    u0, u1, v0, v1 = s
    return (u0 + u1 * rho + rho * rho, u1 + 2 * rho, v0 + v1 * rho, v1)


def eval_edge_glue(curve: Genus2Curve, l: int, S, Shat):
    """Glue residuals along a cube edge in direction l: both endpoint charts
    are translated by M(rho_l) and the recentered coefficients are used."""
    rho = curve.marked_roots[l - 1]
    return eval_G(glue_coeffs(curve, l), chart_translate(S, rho), chart_translate(Shat, rho))


def solve_neighbor(curve: Genus2Curve, l: int, s):
    """Chart coordinates of X + T_l from those of X, in closed form.

    Works in coordinates recentered at rho_l: g1 gives u-hat_0, g2 gives
    v-hat_0, g3 gives u-hat_1, g5 gives v-hat_1; the remaining equations are
    redundant and are checked separately.  Fails when the translated u0
    vanishes, i.e. when X or X + T_l lies on the theta divisor.
    """
    rho = curve.marked_roots[l - 1]
    a1p, _a3p, a4p = glue_coeffs(curve, l)
    u0, u1, v0, v1 = affine_translate(s, rho)
    if u0.is_zero():
        raise ValueError("translated u0 = 0: neighbour lies on the theta divisor")
    uh0 = a1p / u0
    vh0 = -(v0 * uh0) / u0
    uh1 = a4p - u1 + (v0 * vh0) / a1p
    vh1 = v0 * (u1 - uh1) / u0 - v1
    return affine_translate((uh0, uh1, vh0, vh1), -rho)


def verify_affine_pair(curve: Genus2Curve, l: int, s, shat):
    """All nine residuals for an affine pair along direction l, plus the two
    chart equations on each side (in original coordinates)."""
    rho = curve.marked_roots[l - 1]
    res = eval_g(glue_coeffs(curve, l), affine_translate(s, rho), affine_translate(shat, rho))
    return res + eval_e(curve.a, s) + eval_e(curve.a, shat)
