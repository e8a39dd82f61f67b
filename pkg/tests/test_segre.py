import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jaccube.cube import INDICES, lift
from jaccube.field import PrimeField
from jaccube.glue import BIDEGREES, G_PROJ, PROJ_H, PROJ_S, chart_translate, glue_coeffs
from jaccube.mumford import divisor_from_pair, zero_divisor
from jaccube.segre import (
    eval_promoted,
    promote_bihomogeneous,
    quadric_count,
    quadric_residuals,
    segre_cube,
    segre_multi,
    segre_pair,
    slack_monomials,
)

F13 = PrimeField(13)

nonzero5 = st.tuples(*[st.integers(0, 12)] * 5).filter(lambda t: any(t))


def _f(values):
    return tuple(F13(v) for v in values)


def test_segre_pair_single_entry():
    deep = _f((1, 0, 0, 0, 0))
    img = segre_pair(deep, deep)
    assert img.entries == {(0, 0): F13.one}
    assert img.nonzero_count() == 1


@settings(max_examples=60, deadline=None)
@given(nonzero5, nonzero5, st.integers(1, 12), st.integers(1, 12))
def test_segre_pair_scaling_invariance(p_raw, q_raw, lam, mu):
    P, Q = _f(p_raw), _f(q_raw)
    scaled = segre_pair(tuple(F13(lam) * x for x in P), tuple(F13(mu) * y for y in Q))
    assert scaled == segre_pair(P, Q)


@settings(max_examples=60, deadline=None)
@given(nonzero5, nonzero5)
def test_quadrics_hold_exhaustively(p_raw, q_raw):
    img = segre_pair(_f(p_raw), _f(q_raw))
    residuals = quadric_residuals(img)
    assert len(residuals) == quadric_count(4, 4) == 100
    assert all(r.is_zero() for _, r in residuals)


def test_quadric_count_values():
    assert quadric_count(1, 1) == 1
    assert quadric_count(4, 4) == 100
    assert quadric_count(2, 1) == 3
    with pytest.raises(ValueError):
        quadric_count(0, 1)


def test_segre_multi_sparse_support(f13_curve, f13_model):
    point = lift(f13_model, zero_divisor(f13_curve))
    img = segre_cube(point)
    expected = 1
    for c in INDICES:
        expected *= sum(1 for x in point.charts[c] if not x.is_zero())
    assert img.nonzero_count() == expected
    deep = _f((1, 0, 0, 0, 0))
    assert segre_multi([deep] * 8).nonzero_count() == 1


def test_multi_factor_marginal_quadrics(f13_curve, f13_model):
    # Fixing all but two factors of an 8-factor image leaves a rank-1
    # two-factor marginal, so the pairwise quadrics hold on it.
    d = divisor_from_pair(f13_curve, (2, 2), (6, 3))
    img = segre_cube(lift(f13_model, d))
    base = min(img.entries)
    for pos1, pos2 in ((0, 1), (2, 5), (6, 7)):
        def marginal(i, j):
            idx = list(base)
            idx[pos1], idx[pos2] = i, j
            return img.entries.get(tuple(idx), F13.zero)

        for i in range(5):
            for k in range(i + 1, 5):
                for j in range(5):
                    for l in range(j + 1, 5):
                        lhs = marginal(i, j) * marginal(k, l)
                        rhs = marginal(i, l) * marginal(k, j)
                        assert lhs == rhs


def test_promotion_balanced_case():
    variants = promote_bihomogeneous(G_PROJ[1], PROJ_S, PROJ_H, (0, 0, 0, 0, 0))
    assert len(variants) == 1
    poly = variants[0]
    assert poly.degree_in([v for v in poly.vars if v.startswith("w_")]) == {1}


def test_promotion_slack_validation():
    with pytest.raises(ValueError, match="slack degree"):
        promote_bihomogeneous(G_PROJ[8], PROJ_S, PROJ_H, (1, 0, 0, 0, 0))


def test_slack_monomial_counts():
    assert len(slack_monomials(5, 2)) == 15  # G8/G9 deficiency
    assert len(slack_monomials(5, 1)) == 5


def test_promoted_variants_vanish_on_glue_compatible_pairs(f13_curve, f13_model):
    d = divisor_from_pair(f13_curve, (2, 2), (6, 3))
    point = lift(f13_model, d)
    for c, chat, l in f13_model.edges[:4]:
        rho = f13_curve.marked_roots[l - 1]
        S = chart_translate(point.charts[c], rho)
        Shat = chart_translate(point.charts[chat], rho)
        img = segre_pair(S, Shat)
        params = dict(zip(("a1", "a3", "a4"), f13_model.aprimes[l]))
        for i in range(1, 10):
            px, py = BIDEGREES[i]
            for slack in slack_monomials(5, abs(px - py)):
                for poly in promote_bihomogeneous(G_PROJ[i], PROJ_S, PROJ_H, slack):
                    assert eval_promoted(poly, img, F13, params).is_zero()


def test_promotion_soundness_on_random_pair(f13_curve):
    # promoted(F) at sigma(P, Q) equals (slack monomial at P) * F(P, Q).
    from jaccube.glue import eval_G

    ap = glue_coeffs(f13_curve, 1)
    params = dict(zip(("a1", "a3", "a4"), ap))
    P = _f((3, 1, 4, 1, 5))
    Q = _f((2, 7, 1, 8, 2))
    img = segre_pair(P, Q)
    scale = img.entries  # canonical scaling divides by the first product
    first = min(scale)
    norm = P[first[0]] * Q[first[1]]
    g8 = eval_G(ap, P, Q)[7]
    slack = (0, 2, 0, 0, 0)  # uh1^2 on the hatted side
    for poly in promote_bihomogeneous(G_PROJ[8], PROJ_S, PROJ_H, slack):
        want = Q[1] * Q[1] * g8 / norm**3
        assert eval_promoted(poly, img, F13, params) == want
