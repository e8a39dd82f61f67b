import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jaccube.chart import embed
from jaccube.field import PrimeField
from jaccube.glue import (
    BIDEGREES,
    affine_translate,
    chart_translate,
    eval_G,
    eval_edge_glue,
    eval_g,
    glue_coeffs,
    solve_neighbor,
)
from jaccube.mumford import divisor_from_pair, make_divisor, mumford_add
from jaccube.unipoly import UniPoly

F13 = PrimeField(13)

tuples4 = st.tuples(*[st.integers(0, 12)] * 4)
tuples5 = st.tuples(*[st.integers(0, 12)] * 5)


def _f(values):
    return tuple(F13(v) for v in values)


def test_glue_requires_nonzero_a1(f13_curve):
    ap = (F13.zero, F13.one, F13.one)
    with pytest.raises(ValueError, match="a1"):
        eval_g(ap, _f((1, 2, 3, 4)), _f((1, 2, 3, 4)))


@settings(max_examples=40, deadline=None)
@given(tuples4, tuples4)
def test_swap_symmetries_numeric(f13_curve, s_raw, shat_raw):
    ap = glue_coeffs(f13_curve, 2)
    s, shat = _f(s_raw), _f(shat_raw)
    fwd = eval_g(ap, s, shat)
    rev = eval_g(ap, shat, s)
    # g1, g2, g3 symmetric; (g4, g5), (g6, g7), (g8, g9) swap.
    assert fwd[0] == rev[0] and fwd[1] == rev[1] and fwd[2] == rev[2]
    assert fwd[4] == rev[3] and fwd[3] == rev[4]
    assert fwd[6] == rev[5] and fwd[5] == rev[6]
    assert fwd[8] == rev[7] and fwd[7] == rev[8]


@settings(max_examples=40, deadline=None)
@given(tuples5, tuples5, st.integers(1, 12), st.integers(1, 12))
def test_bihomogeneous_scaling(f13_curve, S_raw, Shat_raw, lam_raw, mu_raw):
    ap = glue_coeffs(f13_curve, 1)
    S, Shat = _f(S_raw), _f(Shat_raw)
    lam, mu = F13(lam_raw), F13(mu_raw)
    base = eval_G(ap, S, Shat)
    scaled = eval_G(ap, tuple(lam * x for x in S), tuple(mu * x for x in Shat))
    for i in range(1, 10):
        p, q = BIDEGREES[i]
        assert scaled[i - 1] == lam**p * mu**q * base[i - 1]


def test_projective_glue_dehomogenizes(f13_curve):
    ap = glue_coeffs(f13_curve, 1)
    s, shat = _f((12, 5, 8, 10)), _f((1, 9, 8, 9))
    one = F13.one
    assert eval_G(ap, s + (one,), shat + (one,)) == eval_g(ap, s, shat)


def test_chart_translate_round_trip():
    rho = F13(7)
    S = _f((3, 1, 4, 1, 5))
    assert chart_translate(chart_translate(S, rho), -rho) == S
    assert chart_translate(S, F13.zero) == S


def test_affine_translate_matches_projective():
    rho = F13(4)
    s = _f((3, 1, 4, 1))
    assert chart_translate(s + (F13.one,), rho)[:4] == affine_translate(s, rho)


def test_solve_neighbor_known_example(f13_curve):
    s = (F13(12), F13(5), F13(8), F13(10))
    assert solve_neighbor(f13_curve, 1, s) == (F13(1), F13(9), F13(8), F13(9))


def test_solve_neighbor_is_involution(f13_curve):
    s = (F13(12), F13(5), F13(8), F13(10))
    for l in (1, 2, 3):
        assert solve_neighbor(f13_curve, l, solve_neighbor(f13_curve, l, s)) == s


def test_solve_neighbor_rejects_theta_neighbor(f13_curve):
    # The class of (0,0) + (2,2) contains the first marked root, so adding
    # that 2-torsion class lands on the theta divisor.
    d = divisor_from_pair(f13_curve, (0, 0), (2, 2))
    with pytest.raises(ValueError, match="theta"):
        solve_neighbor(f13_curve, 1, embed(f13_curve, d))


def test_solve_neighbor_matches_cantor_everywhere(f13_curve, f13_classes):
    roots = {
        l: make_divisor(
            f13_curve,
            UniPoly(F13, (-f13_curve.marked_roots[l - 1], 1)),
            UniPoly.zero(F13),
        )
        for l in (1, 2, 3)
    }
    checked = 0
    for x in f13_classes:
        if x.degree() < 2:
            continue
        for l in (1, 2, 3):
            xhat = mumford_add(f13_curve, x, roots[l])
            if xhat.degree() < 2:
                continue
            got = solve_neighbor(f13_curve, l, embed(f13_curve, x))
            assert got == embed(f13_curve, xhat)
            checked += 1
    assert checked == 354


def test_edge_glue_vanishes_on_compatible_pair(f13_curve):
    d = make_divisor(f13_curve, UniPoly(F13, (12, 5, 1)), UniPoly(F13, (8, 10)))
    x0 = make_divisor(f13_curve, UniPoly(F13, (0, 1)), UniPoly.zero(F13))
    dhat = mumford_add(f13_curve, d, x0)
    one = F13.one
    S = embed(f13_curve, d) + (one,)
    Shat = embed(f13_curve, dhat) + (one,)
    assert all(r.is_zero() for r in eval_edge_glue(f13_curve, 1, S, Shat))
    assert all(r.is_zero() for r in eval_edge_glue(f13_curve, 1, Shat, S))


def test_edge_glue_zero_class_corner_vs_root_corner(f13_curve):
    # Deep corner (class 0) against the theta corner of the same direction.
    zero = F13.zero
    one = F13.one
    deep = (one, zero, zero, zero, zero)
    for l in (1, 2, 3):
        rho = f13_curve.marked_roots[l - 1]
        theta = (zero, zero, -rho, one, zero)
        assert all(r.is_zero() for r in eval_edge_glue(f13_curve, l, deep, theta))
        assert all(r.is_zero() for r in eval_edge_glue(f13_curve, l, theta, deep))


def test_half_infinite_edge_configuration(f13_curve):
    # With z = 1, zh = 0, u0 = v0 = uh0 = uh1 = 0 and vh0 = u1 * vh1, all
    # nine residuals vanish for any u1, v1, vh1: the theta-corner line.
    zero, one = F13.zero, F13.one
    u1, v1, vh1 = F13(3), F13(5), F13(2)
    for l in (1, 2, 3):
        ap = glue_coeffs(f13_curve, l)
        S = (zero, u1, zero, v1, one)
        Shat = (zero, zero, u1 * vh1, vh1, zero)
        assert all(r.is_zero() for r in eval_G(ap, S, Shat))


def test_g1_component_on_valid_pair(f13_curve):
    # u0 u0-hat = a1 in recentered coordinates along direction 1 (rho = 0).
    ap = glue_coeffs(f13_curve, 1)
    s = (F13(12), F13(5), F13(8), F13(10))
    shat = solve_neighbor(f13_curve, 1, s)
    assert s[0] * shat[0] == ap[0]


def test_verify_affine_pair(f13_curve):
    from jaccube.glue import verify_affine_pair

    s = (F13(12), F13(5), F13(8), F13(10))
    for l in (2, 3):
        shat = solve_neighbor(f13_curve, l, s)
        residuals = verify_affine_pair(f13_curve, l, s, shat)
        assert len(residuals) == 13  # nine glue + two chart pairs
        assert all(r.is_zero() for r in residuals)
    # A non-neighbour pair leaves nonzero residuals.
    assert any(not r.is_zero() for r in verify_affine_pair(f13_curve, 1, s, s))
