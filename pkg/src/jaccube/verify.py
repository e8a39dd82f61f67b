"""The acceptance harness: exact polynomial-identity proofs, exhaustive
small-field cross-checks of the glue against Cantor arithmetic, the census
shape, the square-model negative results, and Segre spot checks.

Identity checks expand polynomials over the integers with the curve
coefficients (and the recentering shift) as extra variables, so one check
covers every curve over every odd-characteristic field.  Census checks are
exhaustive over the chosen prime field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from math import comb

from . import chart, cube, glue, segre
from .curve import Genus2Curve, curve_from_coeffs
from .field import PrimeField
from .multipoly import MPoly
from .mumford import (
    enumerate_classes,
    make_divisor,
    mumford_add,
    two_torsion,
)
from .unipoly import UniPoly


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name} {self.detail}".rstrip()


@dataclass
class Report:
    items: list = dc_field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = ""):
        self.items.append(CheckResult(name, bool(passed), detail))

    def extend(self, other: "Report"):
        self.items.extend(other.items)

    @property
    def ok(self) -> bool:
        return all(item.passed for item in self.items)

    def lines(self):
        return [item.line() for item in self.items]


# ---------------------------------------------------------------------------
# Identity suite (symbolic, curve-independent).


def _mvar(name):
    return MPoly.var(name)


def _recentered_coeff_polys():
    """a'_j as polynomials in a0..a4 and rho (binomial recentering sums)."""
    a = [_mvar(f"a{i}") for i in range(5)]
    rho = _mvar("rho")
    out = []
    for j in range(5):
        acc = MPoly.const(0)
        for i in range(j, 5):
            acc = acc + comb(i, j) * a[i] * rho ** (i - j)
        acc = acc + comb(5, j) * rho ** (5 - j)
        out.append(acc)
    return out


def _matmul(A, B):
    n = len(A)
    return [
        [sum((A[i][k] * B[k][j] for k in range(n)), MPoly.const(0)) for j in range(n)]
        for i in range(n)
    ]


def _identity_matrix(n):
    return [[MPoly.const(1 if i == j else 0) for j in range(n)] for i in range(n)]


def _coeff_matrix(rho):
    return [
        [comb(i, j) * rho ** (i - j) if i >= j else MPoly.const(0) for j in range(5)]
        for i in range(5)
    ]


def _translation_matrix(rho):
    z = MPoly.const(0)
    o = MPoly.const(1)
    return [
        [o, z, z, z, z],
        [rho, o, z, z, z],
        [z, z, o, z, z],
        [z, z, rho, o, z],
        [rho * rho, 2 * rho, z, z, o],
    ]


def check_identities(mis_signed_g2: bool = False) -> Report:
    """Prove every structural identity by exact multivariate expansion.

    `mis_signed_g2` deliberately flips a sign in g2 and is expected to make
    the suite fail; it guards against a vacuously green harness.
    """
    rep = Report()
    g = dict(glue.G_AFFINE)
    if mis_signed_g2:
        u0, v0 = _mvar("u0"), _mvar("v0")
        uh0, vh0 = _mvar("uh0"), _mvar("vh0")
        g[2] = vh0 * u0 - v0 * uh0

    for i in (1, 2, 3):
        rep.add(f"g{i}-symmetric", (g[i] - glue.swap_sides(g[i])).is_zero())
    for lo, hi in ((4, 5), (6, 7), (8, 9)):
        rep.add(
            f"g{hi}-is-g{lo}-swapped", (g[hi] - glue.swap_sides(g[lo])).is_zero()
        )
    for i in (1, 2, 3):
        gp = glue.G_PROJ[i]
        rep.add(f"G{i}-symmetric", (gp - glue.swap_sides(gp, projective=True)).is_zero())
    for lo, hi in ((4, 5), (6, 7), (8, 9)):
        rep.add(
            f"G{hi}-is-G{lo}-swapped",
            (glue.G_PROJ[hi] - glue.swap_sides(glue.G_PROJ[lo], projective=True)).is_zero(),
        )

    # Degree-lowering chain tying the glue to the chart equations (a0 = 0).
    u0, u1, v0, v1 = (_mvar(n) for n in glue.S_VARS)
    uh0, uh1, vh0, vh1 = (_mvar(n) for n in glue.H_VARS)
    a1, a3, a4 = _mvar("a1"), _mvar("a3"), _mvar("a4")
    e0r, e1r = glue.E0_AT_ROOT, glue.E1_AT_ROOT
    rep.add("chain-h0", (e0r * uh0 + g[2] * v0 - u0 * glue.H0).is_zero())
    rep.add("chain-h1", (e1r * uh0 - glue.H0 * u1 - glue.H1).is_zero())
    cofactor = u0 - a3 + a4 * u1 - u1 * u1
    rep.add("chain-h2-mod-g1", (glue.H1 - glue.H2 - g[1] * cofactor).is_zero())
    rep.add("chain-g6", (g[6] - (glue.H2 - g[3] * u1)).is_zero())
    rep.add(
        "chain-i0",
        (g[3] * u0**2 - v0 * u0 * g[2] + v0**2 * g[1] - a1 * glue.I0).is_zero(),
    )
    rep.add("chain-i1", (e0r - glue.I0 - u0 * glue.I1).is_zero())
    rep.add(
        "chain-i2",
        (
            glue.I2
            - (vh0 * glue.I1 + (u1 - uh1) * g[2] + g[5] * uh0 - (v1 + vh1) * g[1])
        ).is_zero(),
    )
    # The same combination built on g4 instead of g5 exceeds i2 by exactly
    # uh0 (g4 - g5), i.e. it holds modulo the glue ideal.
    rep.add(
        "chain-i2-mod-glue",
        (
            vh0 * glue.I1 + (u1 - uh1) * g[2] + g[4] * uh0 - (v1 + vh1) * g[1]
            - glue.I2 - uh0 * (g[4] - g[5])
        ).is_zero(),
    )
    rep.add("chain-g8", (g[8] - (glue.I2 * u1 - vh0 * e1r)).is_zero())

    # Bidegree table of the bihomogeneous glue.
    for i in range(1, 10):
        bds = glue.G_PROJ[i].bidegrees(glue.PROJ_S, glue.PROJ_H)
        rep.add(
            f"G{i}-bidegree",
            bds == {glue.BIDEGREES[i]},
            f"expected {glue.BIDEGREES[i]}, got {sorted(bds)}",
        )

    # Homogenization round trips and degrees.
    rep.add("E0-dehomogenize", (chart.E0_PROJ.subs({"z": 1}) - chart.E0_AFFINE).is_zero())
    rep.add("E1-dehomogenize", (chart.E1_PROJ.subs({"z": 1}) - chart.E1_AFFINE).is_zero())
    rep.add("E0-degree-4", chart.E0_PROJ.degree_in(chart.PROJ_VARS) == {4})
    rep.add("E1-degree-4", chart.E1_PROJ.degree_in(chart.PROJ_VARS) == {4})
    for i in range(1, 10):
        diff = glue.G_PROJ[i].subs({"z": 1, "zh": 1}) - glue.G_AFFINE[i]
        rep.add(f"G{i}-dehomogenize", diff.is_zero())
    rep.add(
        "closure-z0-forces-u1",
        (chart.E1_PROJ.subs({"z": 0}) - _mvar("u1") ** 4).is_zero(),
    )

    # Recentering: coefficient transform and the chart-equation identity.
    rho = _mvar("rho")
    a = [_mvar(f"a{i}") for i in range(5)]
    ap = _recentered_coeff_polys()
    y = _mvar("y")
    lhs = sum((ap[j] * y**j for j in range(5)), y**5)
    x = y + rho
    rhs = sum((a[i] * x**i for i in range(5)), x**5)
    rep.add("recentering-taylor", (lhs - rhs).is_zero())

    A_pos = _coeff_matrix(rho)
    A_neg = _coeff_matrix(-rho)
    prod = _matmul(A_pos, A_neg)
    rep.add(
        "coeff-matrix-inverse",
        all(
            (prod[i][j] - _identity_matrix(5)[i][j]).is_zero()
            for i in range(5)
            for j in range(5)
        ),
    )
    b_pos = [MPoly.const(comb(5, j)) * rho ** (5 - j) for j in range(5)]
    b_neg = [MPoly.const(comb(5, j)) * (-rho) ** (5 - j) for j in range(5)]
    b_round = [
        sum((b_pos[i] * A_neg[i][j] for i in range(5)), b_neg[j]) for j in range(5)
    ]
    rep.add("coeff-shift-inverse", all(v.is_zero() for v in b_round))
    M_prod = _matmul(_translation_matrix(rho), _translation_matrix(-rho))
    rep.add(
        "translation-matrix-inverse",
        all(
            (M_prod[i][j] - _identity_matrix(5)[i][j]).is_zero()
            for i in range(5)
            for j in range(5)
        ),
    )

    translated = {
        "u0": u0 + u1 * rho + rho**2,
        "u1": u1 + 2 * rho,
        "v0": v0 + v1 * rho,
        "v1": v1,
    }
    coeff_map = {f"a{i}": ap[i] for i in range(5)}
    e0p = chart.E0_AFFINE.subs({**coeff_map, **translated})
    e1p = chart.E1_AFFINE.subs({**coeff_map, **translated})
    rep.add("recentered-e1", (e1p - chart.E1_AFFINE).is_zero())
    rep.add("recentered-e0", (e0p - (chart.E0_AFFINE + rho * chart.E1_AFFINE)).is_zero())
    return rep


# ---------------------------------------------------------------------------
# Exhaustive cross-checks over a small prime field.


@dataclass
class OracleReport:
    checked: int = 0
    skipped: int = 0
    mismatches: int = 0
    residual_failures: int = 0
    involution_failures: int = 0

    @property
    def ok(self) -> bool:
        return (
            self.checked > 0
            and self.mismatches == 0
            and self.residual_failures == 0
            and self.involution_failures == 0
        )


def cross_oracle(curve: Genus2Curve, classes=None) -> OracleReport:
    """solve_neighbor against Cantor addition, all classes x all directions."""
    rep = OracleReport()
    if classes is None:
        classes = enumerate_classes(curve)
    field = curve.field
    one = field.one
    roots = {
        l: make_divisor(
            curve,
            UniPoly(field, (-curve.marked_roots[l - 1], 1)),
            UniPoly.zero(field),
        )
        for l in (1, 2, 3)
    }
    for x in classes:
        for l in (1, 2, 3):
            xhat = mumford_add(curve, x, roots[l])
            if x.degree() < 2 or xhat.degree() < 2:
                rep.skipped += 1
                continue
            s = chart.embed(curve, x)
            expected = chart.embed(curve, xhat)
            got = glue.solve_neighbor(curve, l, s)
            if got != expected:
                rep.mismatches += 1
                continue
            back = glue.solve_neighbor(curve, l, got)
            if back != s:
                rep.involution_failures += 1
            res = glue.eval_edge_glue(curve, l, s + (one,), got + (one,))
            res += glue.eval_edge_glue(curve, l, got + (one,), s + (one,))
            if any(not r.is_zero() for r in res):
                rep.residual_failures += 1
            rep.checked += 1
    return rep


@dataclass
class ScanReport:
    scan_solutions: int = 0
    off_theta_classes: int = 0
    invalid_solutions: int = 0
    embed_failures: int = 0

    @property
    def ok(self) -> bool:
        return (
            self.scan_solutions == self.off_theta_classes
            and self.invalid_solutions == 0
            and self.embed_failures == 0
        )


def chart_scan_check(curve: Genus2Curve, classes=None) -> ScanReport:
    """Exhaustive p^4 scan of the chart equations against the class list."""
    rep = ScanReport()
    field = curve.field
    if classes is None:
        classes = enumerate_classes(curve)
    off_theta = [d for d in classes if d.degree() == 2]
    rep.off_theta_classes = len(off_theta)
    for d in off_theta:
        e0, e1 = chart.eval_e(curve.a, chart.embed(curve, d))
        if not (e0.is_zero() and e1.is_zero()):
            rep.embed_failures += 1
    els = field.elements()
    a = curve.a
    for u0 in els:
        for u1 in els:
            for v0 in els:
                for v1 in els:
                    e0, e1 = chart.eval_e(a, (u0, u1, v0, v1))
                    if e0.is_zero() and e1.is_zero():
                        rep.scan_solutions += 1
                        try:
                            make_divisor(
                                curve,
                                UniPoly(field, (u0, u1, 1)),
                                UniPoly(field, (v0, v1)),
                            )
                        except ValueError:
                            rep.invalid_solutions += 1
    return rep


def find_curve_by_scan(field: PrimeField) -> Genus2Curve:
    """First squarefree monic quintic (lexicographic in a4..a0) with at least
    three roots; the three smallest roots become the marked ones."""
    p = field.p
    for a4 in range(p):
        for a3 in range(p):
            for a2 in range(p):
                for a1 in range(p):
                    for a0 in range(p):
                        f = UniPoly(field, (a0, a1, a2, a3, a4, 1))
                        roots = [x for x in range(p) if f(field(x)).is_zero()]
                        if len(roots) < 3:
                            continue
                        try:
                            return curve_from_coeffs(
                                field, (a0, a1, a2, a3, a4), tuple(roots[:3])
                            )
                        except ValueError:
                            continue
    raise ValueError(f"no usable curve over {field}")


def q_spot_lift_report(curve: Genus2Curve) -> Report:
    """Lift and verify the rational 2-torsion subgroup (exact rationals)."""
    rep = Report()
    model = cube.build_model(curve)
    classes = two_torsion(curve)
    rep.add("q-torsion-subgroup-order", len(classes) == 8, f"order={len(classes)}")
    keys = set()
    bad_total = 0
    for d in classes:
        point = cube.lift(model, d)
        bad_total += len(cube.verify_cube_point(model, point))
        keys.add(point.key())
    rep.add("q-spot-lifts-verified", bad_total == 0, f"failures={bad_total}")
    rep.add("q-spot-lifts-distinct", len(keys) == len(classes))
    return rep


# ---------------------------------------------------------------------------
# Square-model negative results.


def quad_negative_report(curve: Genus2Curve, classes=None) -> Report:
    """The square-model counts.

    Patterns that no divisor class realises are searched as equation systems
    over the constrained coordinate sets; the all-finite-neighbour pattern
    (1,0,0,0) is counted through the classes realising it, because a corner
    at infinity with no finite neighbour is pinned by chart limits, not by
    the corner and glue equations (see quad_solutions_with_type).
    """
    rep = Report()
    if classes is None:
        classes = enumerate_classes(curve)
    patterns = cube.quad_class_patterns(curve, classes)
    hits_1000 = patterns.get((1, 0, 0, 0), [])
    rep.add("quad-1000-count", len(hits_1000) == 1, f"solutions={len(hits_1000)}")
    model4 = cube.build_quad_model(curve)
    if len(hits_1000) == 1:
        point = cube.lift_quad(model4, hits_1000[0])
        bad = cube.verify_quad_point(model4, point)
        expected = mumford_add(
            curve, model4.torsion[(0, 1)], model4.torsion[(1, 0)]
        )
        rep.add(
            "quad-1000-is-marked-torsion-sum",
            hits_1000[0] == expected and not bad,
            f"class={hits_1000[0]} residuals={len(bad)}",
        )
    rep.add(
        "quad-0000-no-classes",
        not patterns.get((0, 0, 0, 0)),
        f"classes={len(patterns.get((0, 0, 0, 0), []))}",
    )
    sols_0000 = cube.quad_solutions_with_type(curve, (0, 0, 0, 0), classes)
    rep.add("quad-0000-count", len(sols_0000) == 2, f"solutions={len(sols_0000)}")
    sols_1010 = cube.quad_solutions_with_type(curve, (1, 0, 1, 0), classes)
    rep.add("quad-1010-count", len(sols_1010) == 0, f"solutions={len(sols_1010)}")
    sols_1001 = cube.quad_solutions_with_type(curve, (1, 0, 0, 1), classes)
    rep.add("quad-1001-count", len(sols_1001) == 0, f"solutions={len(sols_1001)}")
    extraneous = cube.quad_extraneous_points(curve)
    model = cube.build_quad_model(curve)
    for tag, point in zip("ab", extraneous):
        bad = cube.verify_quad_point(model, point)
        rep.add(f"quad-extraneous-{tag}-on-model", len(bad) == 0, f"residuals={len(bad)}")
    found = {tuple(sorted((k, tuple(x.value for x in v)) for k, v in s.items())) for s in sols_0000}
    expected = {
        tuple(sorted((k, tuple(x.value for x in v)) for k, v in pt.items()))
        for pt in extraneous
    }
    rep.add("quad-0000-are-the-extraneous-pair", found == expected)
    for tag, point in zip("ab", extraneous):
        extends = cube.quad_point_extends_to_cube(curve, point, classes)
        rep.add(f"quad-extraneous-{tag}-eliminated-in-cube", not extends)
    return rep


# ---------------------------------------------------------------------------
# Segre spot checks.


def _random_proj_point(field, rng):
    while True:
        coords = tuple(field(rng.randrange(field.p)) for _ in range(5))
        if any(not c.is_zero() for c in coords):
            return coords


def segre_report(curve: Genus2Curve, classes=None, pairs: int = 1000, seed: int = 0) -> Report:
    rep = Report()
    field = curve.field
    rng = random.Random(seed)
    rep.add("quadric-count-44", segre.quadric_count(4, 4) == 100)
    bad = 0
    for _ in range(pairs):
        P = _random_proj_point(field, rng)
        Q = _random_proj_point(field, rng)
        img = segre.segre_pair(P, Q)
        bad += sum(1 for _, r in segre.quadric_residuals(img) if not r.is_zero())
    rep.add("quadrics-on-random-pairs", bad == 0, f"pairs={pairs} failures={bad}")

    # Promoted glue polynomials vanish on the Segre images of glue-compatible
    # translated edge pairs: the canonical promotion on every lifted edge,
    # every slack/rotation variant on a small sample.
    model = cube.build_model(curve)
    if classes is None:
        classes = enumerate_classes(curve)
    promoted_canonical = {}
    promoted_all = {}
    for i in range(1, 10):
        px, py = glue.BIDEGREES[i]
        gap = abs(px - py)
        nside = 5
        slacks = segre.slack_monomials(nside, gap)
        variants = []
        for slack in slacks:
            variants.extend(
                segre.promote_bihomogeneous(glue.G_PROJ[i], glue.PROJ_S, glue.PROJ_H, slack)
            )
        promoted_all[i] = variants
        promoted_canonical[i] = variants[0]
    expected_slack_counts = {1: 1, 2: 1, 3: 1, 4: 5, 5: 5, 6: 5, 7: 5, 8: 15, 9: 15}
    rep.add(
        "promotion-slack-counts",
        all(
            len(segre.slack_monomials(5, abs(glue.BIDEGREES[i][0] - glue.BIDEGREES[i][1])))
            == expected_slack_counts[i]
            for i in range(1, 10)
        ),
    )

    def edge_images(x):
        point = cube.lift(model, x)
        out = []
        for c, chat, l in model.edges:
            rho = curve.marked_roots[l - 1]
            s = glue.chart_translate(point.charts[c], rho)
            shat = glue.chart_translate(point.charts[chat], rho)
            out.append((l, segre.segre_pair(s, shat)))
        return out

    params_by_l = {
        l: dict(zip(("a1", "a3", "a4"), model.aprimes[l])) for l in (1, 2, 3)
    }
    bad_canon = 0
    for x in classes:
        for l, img in edge_images(x):
            for i in range(1, 10):
                val = segre.eval_promoted(promoted_canonical[i], img, field, params_by_l[l])
                if not val.is_zero():
                    bad_canon += 1
    rep.add("promoted-glue-on-all-edges", bad_canon == 0, f"failures={bad_canon}")

    sample = [classes[k] for k in range(0, len(classes), max(1, len(classes) // 5))]
    bad_full = 0
    for x in sample:
        for l, img in edge_images(x):
            for i in range(1, 10):
                for poly in promoted_all[i]:
                    val = segre.eval_promoted(poly, img, field, params_by_l[l])
                    if not val.is_zero():
                        bad_full += 1
    rep.add(
        "promoted-variants-on-sampled-edges",
        bad_full == 0,
        f"sample={len(sample)} failures={bad_full}",
    )

    zero_lift = cube.lift(model, classes[0])
    img8 = segre.segre_cube(zero_lift)
    support = 1
    for c in cube.INDICES:
        support *= sum(1 for x in zero_lift.charts[c] if not x.is_zero())
    rep.add(
        "multi-segre-sparse-support",
        img8.nonzero_count() == support,
        f"entries={img8.nonzero_count()} expected={support}",
    )
    return rep


# ---------------------------------------------------------------------------
# Full acceptance assembly.


def full_acceptance(curve: Genus2Curve, include_identities: bool = True) -> Report:
    """Run every acceptance criterion on one small-field curve."""
    rep = Report()
    if include_identities:
        rep.extend(check_identities())
    classes = enumerate_classes(curve)
    scan = chart_scan_check(curve, classes)
    rep.add(
        "chart-scan-bijection",
        scan.ok,
        f"scan={scan.scan_solutions} off-theta={scan.off_theta_classes} "
        f"invalid={scan.invalid_solutions} embed-failures={scan.embed_failures}",
    )
    oracle = cross_oracle(curve, classes)
    rep.add(
        "glue-matches-cantor",
        oracle.ok,
        f"checked={oracle.checked} skipped={oracle.skipped} "
        f"mismatches={oracle.mismatches} residual-failures={oracle.residual_failures}",
    )
    result = cube.census(curve)
    for name, passed, detail in result.checks():
        rep.add(name, passed, detail)
    rep.extend(quad_negative_report(curve, classes))
    rep.extend(segre_report(curve, classes))
    return rep
