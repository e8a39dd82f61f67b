"""Exact multi-projective cube models for Jacobians of genus-2 curves.

Build a curve y^2 = f(x) from a monic squarefree quintic with three marked
rational roots, do exact divisor-class arithmetic in Mumford form, lift
classes to the eight-chart cube model, verify all defining equations, and
classify points by their infinity pattern.
"""

from .chart import embed, eval_E, eval_e, normalize_point
from .cube import (
    CubeModel,
    CubePoint,
    build_model,
    build_quad_model,
    census,
    classify_bits,
    lift,
    quad_extraneous_points,
    verify_cube_point,
)
from .curve import (
    Genus2Curve,
    curve_from_coeffs,
    dump_curve_config,
    load_curve_config,
    recenter,
    transform_matrices,
    weierstrass_points,
)
from .field import QQ, FieldElement, PrimeField, RationalField
from .glue import chart_translate, eval_G, eval_edge_glue, eval_g, solve_neighbor
from .mumford import (
    MumfordDivisor,
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
from .segre import promote_bihomogeneous, quadric_count, segre_cube, segre_multi, segre_pair
from .unipoly import UniPoly, poly_divmod, poly_gcd, poly_xgcd
from .verify import check_identities, cross_oracle, full_acceptance

__version__ = "0.1.0"
