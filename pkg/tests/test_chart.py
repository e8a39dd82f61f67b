import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jaccube.chart import (
    COEFF_VARS,
    COORD_VARS,
    E0_AFFINE,
    E1_AFFINE,
    embed,
    eval_E,
    eval_e,
    normalize_point,
)
from jaccube.field import PrimeField
from jaccube.multipoly import MPoly
from jaccube.mumford import divisor_from_pair, make_divisor, zero_divisor
from jaccube.unipoly import UniPoly

F13 = PrimeField(13)


def test_derived_equations_match_fixed_form():
    # Frozen expanded form of the two chart polynomials.
    a0, a1, a2, a3, a4 = (MPoly.var(n) for n in COEFF_VARS)
    u0, u1, v0, v1 = (MPoly.var(n) for n in COORD_VARS)
    e0 = (a0 - a2 * u0 + a4 * u0**2 + a3 * u0 * u1 - 2 * u0**2 * u1
          - a4 * u0 * u1**2 + u0 * u1**3 - v0**2 + u0 * v1**2)
    e1 = (a1 - a3 * u0 + u0**2 - a2 * u1 + 2 * a4 * u0 * u1 + a3 * u1**2
          - 3 * u0 * u1**2 - a4 * u1**3 + u1**4 - 2 * v0 * v1 + u1 * v1**2)
    assert E0_AFFINE == e0
    assert E1_AFFINE == e1


def test_embed_example(f13_curve):
    d = make_divisor(f13_curve, UniPoly(F13, (12, 5, 1)), UniPoly(F13, (8, 10)))
    assert embed(f13_curve, d) == (F13(12), F13(5), F13(8), F13(10))
    assert eval_e(f13_curve.a, embed(f13_curve, d)) == (F13.zero, F13.zero)


def test_embed_rejects_theta(f13_curve):
    with pytest.raises(ValueError, match="theta"):
        embed(f13_curve, zero_divisor(f13_curve))


def test_all_off_theta_classes_satisfy_equations(f13_curve, f13_classes):
    for d in f13_classes:
        if d.degree() == 2:
            e0, e1 = eval_e(f13_curve.a, embed(f13_curve, d))
            assert e0.is_zero() and e1.is_zero()


def test_origin_is_off_variety(f13_curve):
    z = F13.zero
    e0, e1 = eval_e(f13_curve.a, (z, z, z, z))
    assert e0 == f13_curve.a[0]
    assert e1 == f13_curve.a[1]
    assert not e1.is_zero()


def test_dehomogenization(f13_curve):
    s = (F13(12), F13(5), F13(8), F13(10))
    assert eval_E(f13_curve.a, s + (F13.one,)) == eval_e(f13_curve.a, s)


@settings(max_examples=50, deadline=None)
@given(st.tuples(*[st.integers(0, 12)] * 5), st.integers(1, 12))
def test_homogeneity_degree_4(f13_curve, coords, lam):
    S = tuple(F13(c) for c in coords)
    lam = F13(lam)
    e0, e1 = eval_E(f13_curve.a, S)
    s0, s1 = eval_E(f13_curve.a, tuple(lam * c for c in S))
    assert s0 == lam**4 * e0
    assert s1 == lam**4 * e1


def test_deep_corner_on_closure(f13_curve):
    S = (F13.one, F13.zero, F13.zero, F13.zero, F13.zero)
    assert eval_E(f13_curve.a, S) == (F13.zero, F13.zero)


def test_generic_class_example(f13_curve):
    d = divisor_from_pair(f13_curve, (2, 2), (6, 3))
    assert embed(f13_curve, d) == (F13(12), F13(5), F13(8), F13(10))


def test_normalize_point():
    pt = normalize_point((F13.zero, F13(2), F13(6), F13.zero, F13(1)))
    assert pt == (F13.zero, F13.one, F13(3), F13.zero, F13(7))
    with pytest.raises(ValueError):
        normalize_point((F13.zero, F13.zero))
