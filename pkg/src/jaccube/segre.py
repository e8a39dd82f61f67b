"""Segre maps, their quadric relations, and promotion of bihomogeneous
equations to homogeneous equations in the product coordinates.

Image coordinates are kept sparse: an L-factor product of P^4's maps into a
projective space of dimension 5^L - 1, which is never materialised; a point
is a map from multi-indices to nonzero values, canonically scaled so the
lexicographically first entry is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

from .multipoly import MPoly, monomial_exponents


@dataclass(frozen=True)
class SegrePoint:
    dims: tuple  # per-factor coordinate counts
    entries: dict  # multi-index tuple -> nonzero FieldElement

    def nonzero_count(self) -> int:
        return len(self.entries)

    def value(self, idx):
        """Entry at a multi-index, zero if absent."""
        v = self.entries.get(tuple(idx))
        return _zero_of(self.entries) if v is None else v

    def export_lines(self):
        return [" ".join(map(str, k)) + " : " + str(v) for k, v in sorted(self.entries.items())]


def _zero_of(entries):
    some = next(iter(entries.values()))
    return some.field.zero


def _canonical(dims, entries):
    entries = {k: v for k, v in entries.items() if not v.is_zero()}
    if not entries:
        raise ValueError("Segre image of a projective point cannot vanish")
    first = min(entries)
    inv = entries[first].inverse()
    return SegrePoint(dims, {k: v * inv for k, v in sorted(entries.items())})


def segre_pair(P, Q) -> SegrePoint:
    """z_(i,j) = P_i Q_j for two projective coordinate tuples."""
    entries = {}
    for i, x in enumerate(P):
        if x.is_zero():
            continue
        for j, y in enumerate(Q):
            if y.is_zero():
                continue
            entries[(i, j)] = x * y
    return _canonical((len(P), len(Q)), entries)


def segre_multi(factors) -> SegrePoint:
    """Generalized Segre image of a list of projective coordinate tuples;
    only products of nonzero coordinates are stored."""
    factors = list(factors)
    supports = [
        [(i, x) for i, x in enumerate(f) if not x.is_zero()] for f in factors
    ]
    entries = {}
    for combo in product(*supports):
        idx = tuple(i for i, _ in combo)
        val = combo[0][1]
        for _, x in combo[1:]:
            val = val * x
        entries[idx] = val
    return _canonical(tuple(len(f) for f in factors), entries)


def segre_cube(point) -> SegrePoint:
    """Segre image of a cube point, factors ordered by corner index."""
    from .cube import INDICES

    return segre_multi([point.charts[c] for c in INDICES])


def quadric_count(m: int, n: int) -> int:
    """Number of defining quadrics z_ij z_kl = z_il z_kj for P^m x P^n."""
    if m < 1 or n < 1:
        raise ValueError("factor dimensions must be at least 1")
    return comb(m + 1, 2) * comb(n + 1, 2)


def quadric_residuals(point: SegrePoint):
    """All pairwise quadric relation residuals for a two-factor point."""
    if len(point.dims) != 2:
        raise ValueError("pairwise quadrics need a two-factor Segre point")
    m, n = point.dims

    def entry(i, j):
        return point.entries.get((i, j))

    zero = _zero_of(point.entries)
    out = []
    for i in range(m):
        for k in range(i + 1, m):
            for j in range(n):
                for l in range(j + 1, n):
                    terms = [entry(i, j), entry(k, l), entry(i, l), entry(k, j)]
                    a = terms[0] * terms[1] if terms[0] is not None and terms[1] is not None else zero
                    b = terms[2] * terms[3] if terms[2] is not None and terms[3] is not None else zero
                    out.append(((i, j, k, l), a - b))
    return out


def _zvar(i: int, j: int) -> str:
    return f"w_{i}_{j}"


def promote_bihomogeneous(poly: MPoly, xvars, yvars, slack):
    """Homogeneous polynomials in the Segre coordinates equivalent to a
    bihomogeneous polynomial times a slack monomial.

    `slack` is an exponent vector over the deficient side's variables with
    |slack| = |b - a|.  Each monomial of the balanced polynomial factors into
    matched x/y lists; pairing them in rotated orders gives the variants,
    which agree on every rank-1 point and modulo the quadric ideal.
    """
    xvars, yvars = tuple(xvars), tuple(yvars)
    bds = poly.bidegrees(xvars, yvars)
    a = max(d[0] for d in bds)
    b = max(d[1] for d in bds)
    if len(bds) != 1:
        raise ValueError("polynomial is not bihomogeneous")
    gap = abs(b - a)
    if sum(slack) != gap:
        raise ValueError(f"slack degree {sum(slack)} does not balance the gap {gap}")
    side = xvars if a < b else yvars
    if len(slack) != len(side):
        raise ValueError("slack vector length must match the deficient side")
    mono = MPoly.const(1)
    for name, e in zip(side, slack):
        mono = mono * MPoly.var(name) ** e
    balanced = poly * mono
    deg = max(a, b)

    xpos = {v: i for i, v in enumerate(xvars)}
    ypos = {v: i for i, v in enumerate(yvars)}
    variants = []
    for rot in range(max(deg, 1)):
        acc = MPoly.const(0)
        for exps, coeff in balanced.monomials():
            xs, ys = [], []
            passenger = MPoly.const(1)  # coefficient variables ride along
            for name, e in zip(balanced.vars, exps):
                if name in xpos:
                    xs.extend([xpos[name]] * e)
                elif name in ypos:
                    ys.extend([ypos[name]] * e)
                else:
                    passenger = passenger * MPoly.var(name) ** e
            xs.sort()
            ys.sort()
            term = MPoly.const(coeff) * passenger
            for t in range(deg):
                term = term * MPoly.var(_zvar(xs[t], ys[(t + rot) % deg]))
            acc = acc + term
        variants.append(acc)
    # Rotations can coincide; keep the distinct ones, deterministically.
    unique = []
    for v in variants:
        if v not in unique:
            unique.append(v)
    return unique


def slack_monomials(nvars: int, degree: int):
    """All slack exponent vectors of the given degree."""
    return monomial_exponents(nvars, degree)


def eval_promoted(poly: MPoly, point: SegrePoint, field, params=None):
    """Evaluate a promoted polynomial on a two-factor Segre point; `params`
    supplies values for any coefficient variables riding along."""
    env = dict(params or {})
    for name in poly.vars:
        if not name.startswith("w_"):
            continue
        _, i, j = name.split("_")
        v = point.entries.get((int(i), int(j)))
        env[name] = field.zero if v is None else v
    return poly.evaluate(field, env)
