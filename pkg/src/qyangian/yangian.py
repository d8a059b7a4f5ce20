"""The algebra Y(q_n): relations from the RTT presentation and PBW normal forms.

Rewrite rules come from the coefficient of u^{-r} v^{-s} in the component form
of the RTT relation.  The division by u - v (resp. u + v) is done in closed
form: x^a y^b - x^b y^a over (u - v) contributes to x^r y^s with r + s = a + b + 1
exactly when r lies between the two exponents.

The rule set does not depend on n, so rules and normal-form memos are shared
by every context in the process.
"""

from gmpy2 import mpq

from .rings import MatrixRing, PolyRingBase
from .series import Series
from .superalgebra import (
    ONE, ZERO, GenSymbol, SuperPoly, decode, encode, gen_parity, mono_degree,
    padd, pfree_mul, pscale,
)

_RULES = {}
_INSERT = {}
_MONO_MUL = {}


class RewriteError(ValueError):
    pass


def canonicalize(i, j, r, n=None):
    """Apply t_{i,j}^{(r)} = (-1)^r t_{-i,-j}^{(r)} so that the column is positive."""
    if n is not None and not (1 <= abs(i) <= n and 1 <= abs(j) <= n):
        raise ValueError("index out of range for n=%d: (%d, %d)" % (n, i, j))
    if i == 0 or j == 0 or r < 1:
        raise ValueError("invalid generator (%d, %d, %d)" % (i, j, r))
    if j > 0:
        return GenSymbol(i, j, r), ONE
    return GenSymbol(-i, -j, r), (-ONE if r % 2 else ONE)


def t_coeff(i, j, r):
    """t_{ij}^{(r)} as a dict polynomial, with t^{(0)} = delta."""
    if r == 0:
        return {(): ONE} if i == j else {}
    g, sign = canonicalize(i, j, r)
    return {(g.code(),): sign}


def _pi(i):
    return 1 if i < 0 else 0


def _split_coeff(a, b, r, s):
    """Coefficient of x^r y^s in xy (x^a y^b - x^b y^a) / (y - x)."""
    if a + b != r + s - 1:
        return 0
    if a < b:
        return 1 if a < r <= b else 0
    if a > b:
        return -1 if b < r <= a else 0
    return 0


def relation_rhs(i, j, k, l, r, s):
    """Coefficient of u^{-r} v^{-s} of the right side of the component relation."""
    out = {}
    sign_q = -1 if (_pi(k) + _pi(l)) % 2 else 1
    for a in range(r + s):
        b = r + s - 1 - a
        m = _split_coeff(a, b, r, s)
        if not m:
            continue
        padd(out, pfree_mul(t_coeff(k, j, a), t_coeff(i, l, b)), mpq(m))
        mq = -sign_q * m * (-1 if (s + b) % 2 else 1)
        padd(out, pfree_mul(t_coeff(-k, j, a), t_coeff(-i, l, b)), mpq(mq))
    return out


def theta(i, k, l):
    return -ONE if (_pi(i) * _pi(k) + _pi(k) * _pi(l) + _pi(l) * _pi(i)) % 2 else ONE


def relation_poly(i, j, k, l, r, s):
    """theta [t_ij^(r), t_kl^(s)] - rhs in the free algebra (canonical generators)."""
    left = pfree_mul(t_coeff(i, j, r), t_coeff(k, l, s))
    par = ((_pi(i) + _pi(j)) * (_pi(k) + _pi(l))) % 2
    padd(left, pfree_mul(t_coeff(k, l, s), t_coeff(i, j, r)), ONE if par else -ONE)
    out = pscale(left, theta(i, k, l))
    padd(out, relation_rhs(i, j, k, l, r, s), -ONE)
    return out


def _raw_rule(g1, g2):
    """Words (not yet ordered) equal to the product g1 g2, for g1 > g2 or g1 = g2 odd."""
    key = (g1, g2)
    rule = _RULES.get(key)
    if rule is not None:
        return rule
    if g1 < g2 or (g1 == g2 and not gen_parity(g1)):
        raise RewriteError("pair already in order")
    i, j, r = decode(g1)
    k, l, s = decode(g2)
    th = theta(i, k, l)
    rhs = relation_rhs(i, j, k, l, r, s)
    if g1 == g2:
        rule = pscale(rhs, th / 2)
    else:
        rule = pscale(rhs, th)
        swap = -ONE if (gen_parity(g1) and gen_parity(g2)) else ONE
        padd(rule, {(g2, g1): swap})
    _RULES[key] = rule
    return rule


def _insert(g, m):
    """Normal form of the word g * m for a normal monomial m."""
    key = (g, m)
    res = _INSERT.get(key)
    if res is not None:
        return res
    if not m or g < m[0] or (g == m[0] and not gen_parity(g)):
        res = {(g,) + m: ONE}
    else:
        rest = m[1:]
        res = {}
        for w, c in _raw_rule(g, m[0]).items():
            padd(res, _word_times(w, rest), c)
    _INSERT[key] = res
    return res


def _word_times(word, m):
    cur = {m: ONE}
    for letter in reversed(word):
        nxt = {}
        for mono, c in cur.items():
            padd(nxt, _insert(letter, mono), c)
        cur = nxt
    return cur


def mono_mul(m1, m2):
    key = (m1, m2)
    res = _MONO_MUL.get(key)
    if res is None:
        if not m1:
            res = {m2: ONE}
        elif not m2:
            res = {m1: ONE}
        else:
            res = _word_times(m1, m2)
        _MONO_MUL[key] = res
    return res


def nf_dict(p):
    out = {}
    for w, c in p.items():
        padd(out, _word_times(w, ()), c)
    return out


def nf_mul(a, b):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            padd(out, mono_mul(ma, mb), ca * cb)
    return out


def nf_by_strategy(word, leftmost=True, memo=None):
    """Literal rewriting of adjacent out-of-order pairs, leftmost or rightmost first."""
    if memo is None:
        memo = {}
    res = memo.get(word)
    if res is not None:
        return res
    positions = [
        p for p in range(len(word) - 1)
        if word[p] > word[p + 1] or (word[p] == word[p + 1] and gen_parity(word[p]))
    ]
    if not positions:
        res = {word: ONE}
    else:
        p = positions[0] if leftmost else positions[-1]
        res = {}
        for w, c in _raw_rule(word[p], word[p + 1]).items():
            padd(res, nf_by_strategy(word[:p] + w + word[p + 2:], leftmost, memo), c)
    memo[word] = res
    return res


def is_normal(mono):
    return all(
        a < b or (a == b and not gen_parity(a)) for a, b in zip(mono, mono[1:])
    )


def cache_sizes():
    return {"rules": len(_RULES), "insert": len(_INSERT), "monomial_products": len(_MONO_MUL)}


class YangianContext:
    """Y(q_n) at truncation order L (filtration degree)."""

    def __init__(self, n, L):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.L = L
        self.ring = YangianRing(self)

    @property
    def rules(self):
        return _RULES

    def indices(self):
        return tuple(x for a in range(1, self.n + 1) for x in (a, -a))

    def check_symbol(self, g):
        if not (1 <= abs(g.row) <= self.n and 1 <= g.col <= self.n):
            raise ValueError("generator %s outside Y(q_%d)" % (g, self.n))

    def t_series(self, i, j, order=None):
        """t_{ij}(u) as a series over the normal-form ring."""
        order = self.L if order is None else order
        coeffs = {(r,): t_coeff(i, j, r) for r in range(order + 1)}
        return Series(self.ring, 1, order, coeffs, (_pi(i) + _pi(j)) % 2)

    def generators(self, max_level=None):
        from .superalgebra import all_generators
        return all_generators(self.n, self.L if max_level is None else max_level)


class YangianRing(PolyRingBase):
    """Dict polynomials multiplied through PBW normal forms."""

    def __init__(self, ctx):
        self.ctx = ctx

    def mul(self, a, b):
        return nf_mul(a, b)

    def normalize(self, p):
        return nf_dict(p)


def generate_rewrite_rule(ctx, g1, g2):
    """Ordered expression equal to g1 * g2 for an out-of-order pair."""
    ctx.check_symbol(g1)
    ctx.check_symbol(g2)
    return SuperPoly._raw(nf_dict(_raw_rule(g1.code(), g2.code())))


def raw_rewrite_rule(g1, g2):
    return SuperPoly._raw(dict(_raw_rule(g1.code(), g2.code())))


def normal_form(ctx, p):
    """PBW normal form of p, discarding filtration degree above ctx.L."""
    terms = p.terms if isinstance(p, SuperPoly) else p
    out = nf_dict(terms)
    return SuperPoly._raw({m: c for m, c in out.items() if mono_degree(m) <= ctx.L})


def normal_form_exact(p):
    terms = p.terms if isinstance(p, SuperPoly) else p
    return SuperPoly._raw(nf_dict(terms))


def omega_word_dict(p):
    """Generator-wise transpose with reversed words, before normalization."""
    out = {}
    for w, c in p.items():
        sign = c
        word = []
        for code in reversed(w):
            i, j, r = decode(code)
            g, s = canonicalize(j, i, r)
            sign = sign * s
            word.append(g.code())
        padd(out, {tuple(word): sign})
    return out


def omega(p, ctx=None):
    terms = p.terms if isinstance(p, SuperPoly) else p
    res = nf_dict(omega_word_dict(terms))
    if ctx is not None:
        res = {m: c for m, c in res.items() if mono_degree(m) <= ctx.L}
    return SuperPoly._raw(res)


def relation_dump(ctx, max_total=None):
    """One line per relation, for golden-file regression."""
    n = ctx.n
    max_total = ctx.L if max_total is None else max_total
    idx = ctx.indices()
    lines = []
    for i in idx:
        for j in range(1, n + 1):
            for k in idx:
                for l in range(1, n + 1):
                    for r in range(1, max_total):
                        for s in range(1, max_total - r + 1):
                            rel = relation_poly(i, j, k, l, r, s)
                            lines.append("REL %d %d %d | %d %d %d : %s" % (
                                i, j, r, k, l, s, SuperPoly._raw(rel).text()))
    return lines


# ------------------------------------------------------------ numeric oracle

def ev_generator_matrix(n, i, j):
    """Image of t_{ij}^{(1)}: -(-1)^{|j|} (E_ji + E_{-j,-i}) in the defining representation."""
    sign = ONE if j < 0 else -ONE
    out = {}
    for key in ((j, i), (-j, -i)):
        out[key] = out.get(key, ZERO) + sign
    return {k: v for k, v in out.items() if v}


def ev_defining(ctx, i, j, order=None):
    """ev(t_ij(u)) in the defining representation, as a matrix-valued series."""
    ring = MatrixRing(ctx.n)
    order = ctx.L if order is None else order
    coeffs = {(0,): ring.one() if i == j else {}, (1,): ev_generator_matrix(ctx.n, i, j)}
    return Series(ring, 1, order, coeffs, (_pi(i) + _pi(j)) % 2)


def ev_poly(p, n):
    """Image of a polynomial in t-generators under ev composed with the defining representation."""
    ring = MatrixRing(n)
    terms = p.terms if isinstance(p, SuperPoly) else p
    total = {}
    for w, c in terms.items():
        mat = ring.one()
        for code in w:
            i, j, r = decode(code)
            if r >= 2:
                mat = {}
                break
            mat = ring.mul(mat, ev_generator_matrix(n, i, j))
            if not mat:
                break
        total = ring.add(total, ring.scale(mat, c))
    return total


def t_symbol(i, j, r):
    g, s = canonicalize(i, j, r)
    return SuperPoly._raw({(g.code(),): s})


__all__ = [
    "YangianContext", "YangianRing", "canonicalize", "generate_rewrite_rule",
    "normal_form", "omega", "ev_defining", "ev_poly", "relation_poly", "relation_dump",
    "nf_by_strategy", "RewriteError", "encode",
]
