import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jaccube.curve import curve_from_coeffs, weierstrass_points
from jaccube.field import QQ, PrimeField
from jaccube.mumford import (
    ClassType,
    classify,
    divisor_from_pair,
    divisor_from_point,
    enumerate_classes,
    is_on_theta,
    make_divisor,
    mumford_add,
    negate,
    two_torsion,
    w_poly,
    zero_divisor,
)
from jaccube.unipoly import UniPoly

F13 = PrimeField(13)


def P13(*coeffs):
    return UniPoly(F13, coeffs)


def test_make_divisor_validation(f13_curve):
    with pytest.raises(ValueError, match="monic"):
        make_divisor(f13_curve, P13(0, 2), P13())
    with pytest.raises(ValueError, match="deg U"):
        make_divisor(f13_curve, P13(0, 0, 0, 1), P13())
    with pytest.raises(ValueError, match="divide"):
        make_divisor(f13_curve, P13(1, 1, 1), P13(1))


def test_zero_is_identity(f13_curve, f13_classes):
    z = zero_divisor(f13_curve)
    for d in f13_classes[:20]:
        assert mumford_add(f13_curve, d, z) == d


def test_negation_gives_inverse(f13_curve, f13_classes):
    z = zero_divisor(f13_curve)
    for d in f13_classes:
        assert mumford_add(f13_curve, d, negate(f13_curve, d)) == z


def test_weierstrass_classes_are_2_torsion(f13_curve):
    z = zero_divisor(f13_curve)
    for rho in weierstrass_points(f13_curve):
        d = make_divisor(f13_curve, UniPoly(F13, (-rho, 1)), UniPoly.zero(F13))
        assert mumford_add(f13_curve, d, d) == z


def test_known_sum(f13_curve):
    # ((x-2)(x-6), 10x+8) + (x, 0) = (x^2+9x+1, 9x+8), checked by hand.
    d1 = make_divisor(f13_curve, P13(12, 5, 1), P13(8, 10))
    d0 = make_divisor(f13_curve, P13(0, 1), P13())
    s = mumford_add(f13_curve, d1, d0)
    assert s == make_divisor(f13_curve, P13(1, 9, 1), P13(8, 9))


def test_commutativity_exhaustive_sample(f13_curve, f13_classes):
    sample = f13_classes[::17]
    for d1 in sample:
        for d2 in sample:
            assert mumford_add(f13_curve, d1, d2) == mumford_add(f13_curve, d2, d1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 143), st.integers(0, 143), st.integers(0, 143))
def test_associativity_random(f13_curve, f13_classes, i, j, k):
    a, b, c = f13_classes[i], f13_classes[j], f13_classes[k]
    left = mumford_add(f13_curve, mumford_add(f13_curve, a, b), c)
    right = mumford_add(f13_curve, a, mumford_add(f13_curve, b, c))
    assert left == right


def test_is_on_theta(f13_curve):
    assert is_on_theta(zero_divisor(f13_curve))
    assert is_on_theta(make_divisor(f13_curve, P13(0, 1), P13()))
    assert not is_on_theta(make_divisor(f13_curve, P13(12, 5, 1), P13(8, 10)))


def test_classify(f13_curve):
    assert classify(f13_curve, zero_divisor(f13_curve)) == ClassType("Zero")
    x2 = make_divisor(f13_curve, P13(-1, 1), P13())  # root rho_2 = 1
    assert classify(f13_curve, x2) == ClassType("ThetaMarked", (2,))
    pt = divisor_from_point(f13_curve, 2, 2)
    assert classify(f13_curve, pt) == ClassType("ThetaAffine")
    x12 = make_divisor(f13_curve, P13(0, 12, 1), P13())  # x(x-1)
    assert classify(f13_curve, x12) == ClassType("WithTwoMarked", (1, 2))
    d = divisor_from_pair(f13_curve, (0, 0), (2, 2))
    assert classify(f13_curve, d) == ClassType("WithMarked", (1,))
    gen = divisor_from_pair(f13_curve, (2, 2), (6, 3))
    assert classify(f13_curve, gen) == ClassType("Generic")


def test_sum_of_all_root_classes_is_zero(f13_curve):
    # The function y has divisor P_1 + ... + P_5 - 5 P_inf.
    acc = zero_divisor(f13_curve)
    for rho in weierstrass_points(f13_curve):
        cls = make_divisor(f13_curve, UniPoly(F13, (-rho, 1)), UniPoly.zero(F13))
        acc = mumford_add(f13_curve, acc, cls)
    assert acc == zero_divisor(f13_curve)


def test_two_torsion_full(f13_curve):
    tt = two_torsion(f13_curve)
    assert len(tt) == 16
    z = zero_divisor(f13_curve)
    for d in tt:
        assert mumford_add(f13_curve, d, d) == z


def test_two_torsion_rational_subgroup(q_curve):
    tt = two_torsion(q_curve)
    assert len(tt) == 8
    # The sum of the three marked root classes has an irreducible U = x^2 + 1.
    irr = make_divisor(q_curve, UniPoly(QQ, (1, 0, 1)), UniPoly.zero(QQ))
    assert irr in tt


def test_w_poly(f13_curve, f13_classes):
    assert w_poly(f13_curve, zero_divisor(f13_curve)) == f13_curve.f_poly
    for d in f13_classes[::11]:
        w = w_poly(f13_curve, d)
        assert d.v * d.v + d.u * w == f13_curve.f_poly
        if d.degree() == 2:
            assert w.degree() == 3 and w.is_monic()


def test_enumeration_methods_agree(f13_curve, f13_classes):
    assert f13_classes == enumerate_classes(f13_curve, "scan")
    assert len(f13_classes) == 144


def test_enumeration_distinct_and_sorted(f13_classes):
    keys = [d.sort_key() for d in f13_classes]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_degree_one_classes_match_affine_points(f13_curve, f13_classes):
    count = sum(1 for x in range(13) for y in range(13) if f13_curve.f_poly(F13(x)) == F13(y) ** 2)
    assert sum(1 for d in f13_classes if d.degree() == 1) == count == 13


def test_lagrange(f13_curve, f13_classes):
    n = len(f13_classes)
    z = zero_divisor(f13_curve)
    for d in (f13_classes[7], f13_classes[40], f13_classes[100]):
        order, acc = 1, d
        while acc != z:
            acc = mumford_add(f13_curve, acc, d)
            order += 1
        assert n % order == 0


def test_enumeration_guard():
    big = PrimeField(1009)
    curve = curve_from_coeffs(big, (0, -1, 0, 0, 0), (0, 1, 1008))
    with pytest.raises(ValueError, match="too large"):
        enumerate_classes(curve)


def test_pair_constructors_validate(f13_curve):
    with pytest.raises(ValueError, match="not on the curve"):
        divisor_from_point(f13_curve, 2, 3)
    with pytest.raises(ValueError, match="involute"):
        divisor_from_pair(f13_curve, (2, 2), (2, 11))
    with pytest.raises(ValueError, match="involute"):
        divisor_from_pair(f13_curve, (0, 0), (0, 0))
