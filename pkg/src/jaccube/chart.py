"""The affine chart cut out by two polynomial equations in (u0, u1, v0, v1),
and its degree-4 projective closure in (u0, u1, v0, v1, z).

The two affine polynomials are not transcribed: they are derived here by
generically reducing f(x) - V(x)^2 modulo U(x) and reading off the linear
remainder.  The homogeneous pair is then produced by programmatic degree-4
homogenization (coefficient variables carry weight zero), which keeps a
single source of truth for every chart on every corner.
"""

from __future__ import annotations

from .multipoly import MPoly

COORD_VARS = ("u0", "u1", "v0", "v1")
PROJ_VARS = ("u0", "u1", "v0", "v1", "z")
COEFF_VARS = ("a0", "a1", "a2", "a3", "a4")


def _derive_affine_equations():
    """Remainder of f - V^2 mod U with symbolic coefficients: [e0, e1]."""
    a = [MPoly.var(n) for n in COEFF_VARS]
    u0, u1, v0, v1 = (MPoly.var(n) for n in COORD_VARS)
    one = MPoly.const(1)
    # Ascending x-coefficients of f - V^2 (degree 5, monic).
    coeffs = [
        a[0] - v0 * v0,
        a[1] - 2 * v0 * v1,
        a[2] - v1 * v1,
        a[3],
        a[4],
        one,
    ]
    # Reduce modulo U = x^2 + u1 x + u0: x^d -> -u1 x^(d-1) - u0 x^(d-2).
    while len(coeffs) > 2:
        lead = coeffs.pop()
        coeffs[-1] = coeffs[-1] - lead * u1
        coeffs[-2] = coeffs[-2] - lead * u0
    return coeffs[0], coeffs[1]


E0_AFFINE, E1_AFFINE = _derive_affine_equations()
HOMOGENEOUS_DEGREE = 4
E0_PROJ = E0_AFFINE.homogenize(COORD_VARS, "z", HOMOGENEOUS_DEGREE)
E1_PROJ = E1_AFFINE.homogenize(COORD_VARS, "z", HOMOGENEOUS_DEGREE)

_AFFINE_ORDER = COEFF_VARS + COORD_VARS
_PROJ_ORDER = COEFF_VARS + PROJ_VARS
_e0 = E0_AFFINE.evaluator(_AFFINE_ORDER)
_e1 = E1_AFFINE.evaluator(_AFFINE_ORDER)
_E0 = E0_PROJ.evaluator(_PROJ_ORDER)
_E1 = E1_PROJ.evaluator(_PROJ_ORDER)


def eval_e(a, s):
    """(e0, e1) at the affine chart point s = (u0, u1, v0, v1)."""
    field = a[0].field
    vals = tuple(a) + tuple(s)
    return _e0(field, vals), _e1(field, vals)


def eval_E(a, S):
    """(E0, E1) at the projective chart point S = (u0, u1, v0, v1, z)."""
    field = a[0].field
    vals = tuple(a) + tuple(S)
    return _E0(field, vals), _E1(field, vals)


def embed(curve, divisor):
    """Chart coordinates of a class off the theta divisor (deg U = 2)."""
    if divisor.degree() != 2:
        raise ValueError("class lies on the theta divisor; it has no affine chart point")
    u, v = divisor.u, divisor.v
    return (u.coeff(0), u.coeff(1), v.coeff(0), v.coeff(1))


def normalize_point(coords):
    """Canonical projective scaling: first nonzero coordinate becomes 1."""
    for c in coords:
        if not c.is_zero():
            inv = c.inverse()
            return tuple(x * inv for x in coords)
    raise ValueError("projective point cannot be all zero")


def affine_chart_points(curve, classes):
    """Embedded coordinates of every off-theta class in the given list."""
    return [embed(curve, d) for d in classes if d.degree() == 2]
