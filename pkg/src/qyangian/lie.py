"""The Lie superalgebras q_n and its twisted current algebra, and gr' checks.

Basis elements are stored with a positive column: g_{ij} = g_{-i,-j} and
g_{ij}^{(r)} = (-1)^r g_{-i,-j}^{(r)}.
"""

from gmpy2 import mpq

from .superalgebra import ONE, ZERO, SuperPoly, decode, encode, mono_loop_degree, padd
from .yangian import canonicalize, nf_mul, t_coeff


def _p(i):
    return 1 if i < 0 else 0


class LieElement:
    """Finite combination of g_{ij} (level None) or g_{ij}^{(r)}."""

    __slots__ = ("terms", "twisted")

    def __init__(self, terms=None, twisted=False):
        self.twisted = twisted
        self.terms = {}
        for key, c in (terms or {}).items():
            self._add(key, mpq(c))

    def _add(self, key, c):
        if self.twisted:
            i, j, r = key
            if j < 0:
                i, j = -i, -j
                if r % 2:
                    c = -c
            key = (i, j, r)
        else:
            i, j = key
            if j < 0:
                key = (-i, -j)
        v = self.terms.get(key, ZERO) + c
        if v:
            self.terms[key] = v
        else:
            self.terms.pop(key, None)

    @classmethod
    def basis(cls, i, j, r=None):
        if r is None:
            return cls({(i, j): 1})
        return cls({(i, j, r): 1}, twisted=True)

    def __add__(self, other):
        out = LieElement(self.terms, self.twisted)
        for k, c in other.terms.items():
            out._add(k, c)
        return out

    def scale(self, c):
        return LieElement({k: v * c for k, v in self.terms.items()}, self.twisted)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, LieElement) and self.twisted == other.twisted and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def parity(self):
        pars = {(_p(k[0]) + _p(k[1])) % 2 for k in self.terms}
        if len(pars) > 1:
            raise ValueError("not homogeneous")
        return pars.pop() if pars else None

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            name = "g[%d,%d]" % k[:2] if not self.twisted else "g[%d,%d;%d]" % k
            parts.append("%s*%s" % (self.terms[k], name))
        return " + ".join(parts)


def _bracket_basis_qn(i, j, k, l):
    out = LieElement()
    sign = -1 if ((_p(i) + _p(j)) * (_p(k) + _p(l))) % 2 else 1
    if k == j:
        out._add((i, l), ONE)
    if j == -k:
        out._add((i, -l), ONE)
    if l == i:
        out._add((k, j), mpq(-sign))
    if l == -i:
        out._add((k, -j), mpq(-sign))
    return out


def _bracket_basis_tw(i, j, r, k, l, s):
    out = LieElement(twisted=True)
    sign = -1 if ((_p(i) + _p(j)) * (_p(k) + _p(l))) % 2 else 1
    sr = -1 if r % 2 else 1
    m = r + s
    if j == k:
        out._add((i, l, m), ONE)
    if j == -k:
        out._add((-i, l, m), mpq(sr))
    if i == l:
        out._add((k, j, m), mpq(-sign))
    if -i == l:
        out._add((k, -j, m), mpq(-sign * sr))
    return out


def lie_bracket_qn(a, b):
    out = LieElement()
    for (i, j), ca in a.terms.items():
        for (k, l), cb in b.terms.items():
            out = out + _bracket_basis_qn(i, j, k, l).scale(ca * cb)
    return out


def lie_bracket_twisted(a, b):
    out = LieElement(twisted=True)
    for (i, j, r), ca in a.terms.items():
        for (k, l, s), cb in b.terms.items():
            out = out + _bracket_basis_tw(i, j, r, k, l, s).scale(ca * cb)
    return out


def qn_basis(n):
    idx = [x for a in range(1, n + 1) for x in (a, -a)]
    return [(i, j) for i in idx for j in range(1, n + 1)]


def pi_image(code):
    """pi(t_{ij}^{(r)}) = -(-1)^{|j|} g_{ji}^{(r-1)} for a canonical generator."""
    i, j, r = decode(code)
    sign = ONE if j < 0 else -ONE
    return LieElement({(j, i, r - 1): sign}, twisted=True)


def top_component(poly, degree):
    """Terms of loop degree exactly `degree` mapped through pi; None if a nonlinear term survives."""
    out = LieElement(twisted=True)
    for m, c in poly.items():
        if mono_loop_degree(m) != degree:
            continue
        if len(m) != 1:
            return None
        out = out + pi_image(m[0]).scale(c)
    return out


def super_bracket_nf(a, b):
    pa = _poly_parity(a)
    pb = _poly_parity(b)
    out = nf_mul(a, b)
    sign = -ONE if (pa and pb) else ONE
    padd(out, nf_mul(b, a), -sign)
    return out


def _poly_parity(p):
    from .superalgebra import mono_parity
    for m in p:
        return mono_parity(m)
    return 0


def gr_leading_check(ctx, g1, g2):
    """Top second-filtration part of [g1, g2] against the twisted current bracket."""
    r, s = g1.level, g2.level
    br = super_bracket_nf({(g1.code(),): ONE}, {(g2.code(),): ONE})
    top = top_component(br, r + s - 2)
    if top is None:
        return False
    expected = lie_bracket_twisted(pi_image(g1.code()), pi_image(g2.code()))
    return top == expected


def gr_sweep(ctx, max_total):
    gens = ctx.generators(max_total - 1)
    failures = []
    count = 0
    for g1 in gens:
        for g2 in gens:
            if g1.level + g2.level > max_total:
                continue
            count += 1
            if not gr_leading_check(ctx, g1, g2):
                failures.append((g1, g2))
    return count, failures


def iota(element):
    """Image of an element of q_n: g_{ji} -> -(-1)^{|j|} t_{ij}^{(1)}."""
    out = {}
    for (a, b), c in element.terms.items():
        # g_{ab} with i = b, j = a
        sign = ONE if a < 0 else -ONE
        padd(out, t_coeff(b, a, 1), sign * c)
    return out


def iota_check(ctx):
    basis = qn_basis(ctx.n)
    for x in basis:
        for y in basis:
            a, b = LieElement.basis(*x), LieElement.basis(*y)
            lhs = super_bracket_nf(iota(a), iota(b))
            rhs = iota(lie_bracket_qn(a, b))
            if lhs != rhs:
                return False
    return True


__all__ = [
    "LieElement", "lie_bracket_qn", "lie_bracket_twisted", "gr_leading_check",
    "gr_sweep", "iota_check", "pi_image", "top_component", "iota", "qn_basis",
]
