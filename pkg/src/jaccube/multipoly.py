"""Sparse multivariate polynomials with integer coefficients.

This is the exact-expansion engine behind the defining equations and the
identity suite: polynomials are dictionaries from exponent vectors to Python
ints, so every identity check is a statement about integer arithmetic and
holds over any field of odd characteristic by specialisation.

Variable sets are canonical (sorted by name, unused variables pruned), which
makes equality structural.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .field import FieldElement, PrimeField


def _canon(varnames, terms):
    terms = {e: c for e, c in terms.items() if c != 0}
    used = set()
    for e in terms:
        for i, v in enumerate(e):
            if v:
                used.add(varnames[i])
    keep = tuple(sorted(used))
    pos = {v: i for i, v in enumerate(varnames)}
    new_terms = {}
    for e, c in terms.items():
        new_terms[tuple(e[pos[v]] for v in keep)] = c
    return keep, new_terms


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, varnames=(), terms=None):
        self.vars, self.terms = _canon(tuple(varnames), dict(terms or {}))

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls((name,), {(1,): 1})

    @classmethod
    def const(cls, c: int) -> "MPoly":
        return cls((), {(): c} if c else {})

    def is_zero(self) -> bool:
        return not self.terms

    def _aligned(self, other):
        """Common variable tuple plus both term dicts remapped onto it."""
        allvars = tuple(sorted(set(self.vars) | set(other.vars)))

        def remap(poly):
            pos = {v: i for i, v in enumerate(poly.vars)}
            out = {}
            for e, c in poly.terms.items():
                out[tuple(e[pos[v]] if v in pos else 0 for v in allvars)] = c
            return out

        return allvars, remap(self), remap(other)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, int):
            return MPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        allvars, a, b = self._aligned(o)
        for e, c in b.items():
            a[e] = a.get(e, 0) + c
        return MPoly(allvars, a)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, int):
            return MPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        allvars, a, b = self._aligned(o)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(allvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.vars == o.vars and self.terms == o.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    def subs(self, mapping) -> "MPoly":
        """Substitute variables by polynomials (or ints); others untouched."""
        mapping = {k: (v if isinstance(v, MPoly) else MPoly.const(v)) for k, v in mapping.items()}
        out = MPoly.const(0)
        for e, c in self.terms.items():
            term = MPoly.const(c)
            for name, exp in zip(self.vars, e):
                if not exp:
                    continue
                base = mapping.get(name, MPoly.var(name))
                term = term * base**exp
            out = out + term
        return out

    def rename(self, mapping) -> "MPoly":
        return self.subs({k: MPoly.var(v) for k, v in mapping.items()})

    def degree_in(self, names) -> set:
        """Set of per-monomial total degrees counted over the given variables."""
        names = set(names)
        degs = set()
        for e in self.terms:
            degs.add(sum(exp for name, exp in zip(self.vars, e) if name in names))
        return degs

    def bidegrees(self, xnames, ynames) -> set:
        xnames, ynames = set(xnames), set(ynames)
        out = set()
        for e in self.terms:
            dx = sum(exp for name, exp in zip(self.vars, e) if name in xnames)
            dy = sum(exp for name, exp in zip(self.vars, e) if name in ynames)
            out.add((dx, dy))
        return out

    def homogenize(self, names, zname: str, degree: int | None = None) -> "MPoly":
        """Pad each monomial with z so its degree over `names` reaches `degree`.

        Variables outside `names` (curve coefficients) carry weight 0.
        """
        degs = self.degree_in(names)
        target = max(degs, default=0) if degree is None else degree
        if degs and max(degs) > target:
            raise ValueError("target degree below an existing monomial degree")
        z = MPoly.var(zname)
        nameset = set(names)
        out = MPoly.const(0)
        for e, c in self.terms.items():
            d = sum(exp for name, exp in zip(self.vars, e) if name in nameset)
            mono = MPoly(self.vars, {e: c})
            out = out + mono * z ** (target - d)
        return out

    def bihomogenize(self, xnames, ynames, zx: str, zy: str) -> "MPoly":
        """Pad with zx, zy so every monomial reaches the maximal bidegree."""
        bds = self.bidegrees(xnames, ynames)
        px = max((d[0] for d in bds), default=0)
        py = max((d[1] for d in bds), default=0)
        xset, yset = set(xnames), set(ynames)
        vzx, vzy = MPoly.var(zx), MPoly.var(zy)
        out = MPoly.const(0)
        for e, c in self.terms.items():
            dx = sum(exp for name, exp in zip(self.vars, e) if name in xset)
            dy = sum(exp for name, exp in zip(self.vars, e) if name in yset)
            mono = MPoly(self.vars, {e: c})
            out = out + mono * vzx ** (px - dx) * vzy ** (py - dy)
        return out

    def evaluate(self, field, env) -> FieldElement:
        """Exact evaluation with env: variable name -> FieldElement."""
        vals = tuple(env[v] for v in self.vars)
        return self.evaluator(self.vars)(field, vals)

    _EVAL_CACHE: dict = {}

    def evaluator(self, var_order) -> "_Evaluator":
        key = (id(self), tuple(var_order))
        ev = MPoly._EVAL_CACHE.get(key)
        if ev is None:
            ev = _Evaluator(self, tuple(var_order))
            MPoly._EVAL_CACHE[key] = ev
        return ev

    def monomials(self):
        """Deterministically ordered (exponent-tuple, coefficient) pairs."""
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.monomials():
            factors = [f"{n}^{x}" if x > 1 else n for n, x in zip(self.vars, e) if x]
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MPoly({self})"


class _Evaluator:
    """Precompiled term list; takes a fast raw-int path over prime fields."""

    __slots__ = ("items",)

    def __init__(self, poly: MPoly, var_order):
        pos = {v: i for i, v in enumerate(var_order)}
        missing = [v for v in poly.vars if v not in pos]
        if missing:
            raise ValueError(f"evaluator is missing variables {missing}")
        self.items = [
            (c, tuple((pos[v], x) for v, x in zip(poly.vars, e) if x))
            for e, c in poly.monomials()
        ]

    def __call__(self, field, vals) -> FieldElement:
        if isinstance(field, PrimeField):
            p = field.p
            raw = [x.value for x in vals]
            acc = 0
            for c, pows in self.items:
                t = c
                for i, x in pows:
                    t *= raw[i] ** x
                acc += t
            return FieldElement(field, acc % p)
        acc = field.zero
        for c, pows in self.items:
            t = field(c)
            for i, x in pows:
                t = t * vals[i] ** x
            acc = acc + t
        return acc


def monomial_exponents(nvars: int, degree: int):
    """All exponent vectors of the given total degree, lexicographically."""
    out = set()
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.add(tuple(e))
    return sorted(out)
