"""Expression trees for relations between series and YQ blocks, and their exact evaluation.

A relation lives in End(C^{1|1})^{(x) m} (x) Y(q_n)[[u_1^{-1}, ..., u_k^{-1}]].  Values
are kept as finite sums  N_key * prod (u_p -/+ u_q)^{-a} * prod u_k^{b}  with
numerators N_key tensors over a series ring.  A printed division applied to a
value without formal factors is carried out exactly, after checking that the
numerator vanishes where the divisor does.  Everything else stays formal until
the final zero test clears all denominators at once.
"""

from itertools import combinations

from gmpy2 import mpq

from .series import DivisionPreconditionError, Series
from .tensor import SeriesRing, SuperTensor, build_operator, embed, tau_on_factor

U, V, W = 0, 1, 2


class Arg:
    """Spectral argument: +u_var or -u_var."""

    __slots__ = ("var", "neg")

    def __init__(self, var, neg=False):
        self.var = var
        self.neg = neg

    def __neg__(self):
        return Arg(self.var, not self.neg)

    def __repr__(self):
        return ("-" if self.neg else "") + "uvw"[self.var]


u, v, w = Arg(U), Arg(V), Arg(W)


class Expr:
    parity = 0

    def __add__(self, other):
        return Add([(1, self), (1, _wrap(other))])

    def __radd__(self, other):
        return _wrap(other) + self

    def __sub__(self, other):
        return Add([(1, self), (-1, _wrap(other))])

    def __rsub__(self, other):
        return _wrap(other) - self

    def __neg__(self):
        return Add([(-1, self)])

    def __mul__(self, other):
        if isinstance(other, (int, mpq)):
            return Add([(other, self)])
        return Mul([self, other])

    def __rmul__(self, other):
        if isinstance(other, (int, mpq)):
            return Add([(other, self)])
        return Mul([_wrap(other), self])


def _wrap(x):
    if isinstance(x, Expr):
        return x
    return Const(x)


class Const(Expr):
    def __init__(self, c):
        self.c = mpq(c)


class Ser(Expr):
    """Scalar series symbol (name, index) at an argument."""

    ODD = {"hb", "eb", "fb", "hbp", "ebc", "fbc", "Eb"}

    def __init__(self, name, idx, arg):
        self.name, self.idx, self.arg = name, tuple(idx), arg
        self.parity = 1 if name in self.ODD else 0


class Blk(Expr):
    """YQ block symbol placed in a tensor slot."""

    def __init__(self, name, idx, slot, arg):
        self.name, self.idx, self.slot, self.arg = name, tuple(idx), slot, arg


class Op(Expr):
    """P, Q, Lambda0, Theta0 on a pair of slots, or K on slots (1, 2) in variables (p, q)."""

    def __init__(self, name, slots=(1, 2), pair=(U, V)):
        self.name, self.slots, self.pair = name, slots, pair


class Add(Expr):
    def __init__(self, terms):
        flat = []
        for c, e in terms:
            if isinstance(e, Add):
                flat.extend((c * c2, e2) for c2, e2 in e.terms)
            else:
                flat.append((c, e))
        self.terms = flat
        pars = {e.parity for _, e in flat if not isinstance(e, Const)}
        self.parity = pars.pop() if len(pars) == 1 else (0 if not pars else None)


class Mul(Expr):
    def __init__(self, factors):
        flat = []
        for f in factors:
            f = _wrap(f)
            flat.extend(f.factors if isinstance(f, Mul) else [f])
        self.factors = flat
        pars = [f.parity for f in flat]
        self.parity = None if None in pars else sum(pars) % 2


class Bracket(Expr):
    def __init__(self, a, b):
        self.a, self.b = _wrap(a), _wrap(b)
        if a.parity is None or b.parity is None:
            raise ValueError("bracket of inhomogeneous expressions")
        self.parity = (a.parity + b.parity) % 2


class Div(Expr):
    """Printed division by (u_p - u_q) or (u_p + u_q)."""

    def __init__(self, x, plus, pair=(U, V)):
        self.x, self.plus, self.pair = _wrap(x), plus, pair
        self.parity = self.x.parity


class LinMul(Expr):
    """Multiplication by (u_p - u_q) or (u_p + u_q)."""

    def __init__(self, x, plus, pair=(U, V)):
        self.x, self.plus, self.pair = _wrap(x), plus, pair
        self.parity = self.x.parity


class VarMul(Expr):
    """Multiplication by u_var."""

    def __init__(self, x, var):
        self.x, self.var = _wrap(x), var
        self.parity = self.x.parity


class Tau(Expr):
    """The anti-automorphism tau applied on one tensor slot (entrywise on a value)."""

    def __init__(self, x, slot):
        self.x, self.slot = _wrap(x), slot
        self.parity = self.x.parity


def br(a, b):
    return Bracket(a, b)


def dm(x, pair=(U, V)):
    return Div(x, False, pair)


def dp(x, pair=(U, V)):
    return Div(x, True, pair)


def lm(x, pair=(U, V)):
    return LinMul(x, False, pair)


def lp(x, pair=(U, V)):
    return LinMul(x, True, pair)


def times_var(x, var):
    return VarMul(x, var)


# ------------------------------------------------------------------ values

class RelationDivisionError(ArithmeticError):
    """A printed division whose numerator does not vanish on the diagonal."""

    def __init__(self, node, cause):
        super().__init__("%s: %s" % (node, cause))
        self.node = node
        self.cause = cause


class Space:
    """Shape of a relation: number of spectral variables, tensor arity and order."""

    def __init__(self, nvars, arity, order, base):
        self.nvars = nvars
        self.arity = arity
        self.order = order
        self.base = base
        self.ring = SeriesRing(base, nvars, order)
        self.forms = [(p, q, plus) for p, q in combinations(range(nvars), 2) for plus in (False, True)]
        self.zero_key = (0,) * (len(self.forms) + nvars)

    def form_index(self, pair, plus):
        p, q = pair
        return self.forms.index((p, q, plus))

    def tensor(self, coeff):
        if self.arity == 0:
            return SuperTensor._raw((1, -1), 0, self.ring, {(): coeff})
        return SuperTensor.identity((1, -1), self.arity, self.ring).map(lambda c: coeff)


class FracValue:
    """Sum over keys of numerator tensors.  `orders` records, for every key that ever
    received a contribution, the total degree through which its numerator is known;
    a key whose numerator cancelled or truncated to zero still limits precision."""

    __slots__ = ("space", "parts", "orders")

    def __init__(self, space, parts, orders=None):
        self.space = space
        if orders is None:
            orders = {k: space.order for k in parts}
        self.orders = dict(orders)
        self.parts = {k: t for k, t in parts.items() if not t.is_zero()}

    def is_pure(self):
        return all(k == self.space.zero_key for k in self.orders)

    def __add__(self, other):
        out = dict(self.parts)
        for k, t in other.parts.items():
            out[k] = out[k] + t if k in out else t
        orders = dict(self.orders)
        for k, o in other.orders.items():
            orders[k] = min(orders[k], o) if k in orders else o
        return FracValue(self.space, out, orders)

    def scale(self, c):
        return FracValue(self.space, {k: t.scale(c) for k, t in self.parts.items()}, self.orders)

    def __mul__(self, other):
        out = {}
        orders = {}
        for ka, oa in self.orders.items():
            for kb, ob in other.orders.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                o = min(oa, ob)
                orders[k] = min(orders[k], o) if k in orders else o
                ta, tb = self.parts.get(ka), other.parts.get(kb)
                if ta is None or tb is None:
                    continue
                t = ta * tb
                out[k] = out[k] + t if k in out else t
        return FracValue(self.space, out, orders)

    def shift(self, index, by):
        def move(k):
            k2 = list(k)
            k2[index] += by
            return tuple(k2)
        return FracValue(self.space, {move(k): t for k, t in self.parts.items()},
                         {move(k): o for k, o in self.orders.items()})

    def map(self, fn):
        return FracValue(self.space, {k: t.map(fn) for k, t in self.parts.items()}, self.orders)


# --------------------------------------------------------------- evaluation

class Evaluator:
    """Evaluates expressions against a symbol resolver in a fixed Space."""

    def __init__(self, space, resolver):
        self.space = space
        self.resolver = resolver
        self._cache = {}

    def lifted(self, series, arg):
        s = series.substitute_neg() if arg.neg else series
        return s.truncate(self.space.order).lift(arg.var, self.space.nvars)

    def value(self, expr):
        sp = self.space
        if isinstance(expr, Const):
            return FracValue(sp, {sp.zero_key: sp.tensor(sp.ring.from_scalar(expr.c))})
        if isinstance(expr, Ser):
            key = ("ser", expr.name, expr.idx, expr.arg.var, expr.arg.neg)
            if key not in self._cache:
                s = self.lifted(self.resolver.series(expr.name, expr.idx), expr.arg).with_parity(expr.parity)
                self._cache[key] = FracValue(sp, {sp.zero_key: sp.tensor(s)})
            return self._cache[key]
        if isinstance(expr, Blk):
            key = ("blk", expr.name, expr.idx, expr.slot, expr.arg.var, expr.arg.neg)
            if key not in self._cache:
                self._cache[key] = FracValue(sp, {sp.zero_key: self.block_tensor(expr)})
            return self._cache[key]
        if isinstance(expr, Op):
            return self.operator(expr)
        if isinstance(expr, Add):
            acc = None
            for c, e in expr.terms:
                val = self.value(e)
                if c != 1:
                    val = val.scale(c)
                acc = val if acc is None else acc + val
            return acc
        if isinstance(expr, Mul):
            acc = self.value(expr.factors[0])
            for f in expr.factors[1:]:
                acc = acc * self.value(f)
            return acc
        if isinstance(expr, Bracket):
            a, b = self.value(expr.a), self.value(expr.b)
            sign = -1 if (expr.a.parity and expr.b.parity) else 1
            return a * b + (b * a).scale(-sign)
        if isinstance(expr, Div):
            return self.divide(self.value(expr.x), expr)
        if isinstance(expr, LinMul):
            return self.value(expr.x).shift(sp.form_index(expr.pair, expr.plus), -1)
        if isinstance(expr, VarMul):
            return self.value(expr.x).shift(len(sp.forms) + expr.var, 1)
        if isinstance(expr, Tau):
            val = self.value(expr.x)
            return FracValue(sp, {k: tau_on_factor(t, expr.slot) for k, t in val.parts.items()},
                             val.orders)
        raise TypeError("unknown expression node %r" % type(expr))

    def block_tensor(self, expr):
        sp = self.space
        blk = self.resolver.block(expr.name, expr.idx)
        a, b = blk.a, blk.b
        if expr.arg.neg:
            a, b = a.substitute_neg(), b.substitute_neg()

        def lift(s, par):
            return s.truncate(sp.order).lift(expr.arg.var, sp.nvars).with_parity(par)

        terms = {
            ((1, 1),): lift(a, 0), ((-1, -1),): lift(a.substitute_neg(), 0),
            ((-1, 1),): lift(b, 1), ((1, -1),): lift(b.substitute_neg(), 1),
        }
        single = SuperTensor((1, -1), 1, sp.ring, terms)
        if sp.arity == 1:
            return single
        return embed(single, expr.slot, sp.arity)

    def operator(self, expr):
        sp = self.space
        key = ("op", expr.name, expr.slots, expr.pair)
        if key in self._cache:
            return self._cache[key]
        if expr.name == "K":
            P = build_operator("P", 1, expr.slots, sp.arity, sp.ring)
            Q = build_operator("Q", 1, expr.slots, sp.arity, sp.ring)
            val = FracValue(sp, {}) + FracValue(sp, {sp.zero_key: P}).shift(sp.form_index(expr.pair, False), 1)
            val = val + FracValue(sp, {sp.zero_key: Q}).shift(sp.form_index(expr.pair, True), 1)
        else:
            val = FracValue(sp, {sp.zero_key: build_operator(expr.name, 1, expr.slots, sp.arity, sp.ring)})
        self._cache[key] = val
        return val

    def divide(self, val, node):
        sp = self.space
        idx = sp.form_index(node.pair, node.plus)
        if not val.is_pure():
            return val.shift(idx, 1)
        p, q = node.pair
        try:
            return val.map(lambda s: s._divide(p, q, node.plus))
        except DivisionPreconditionError as exc:
            raise RelationDivisionError("division by u%s%s" % ("+" if node.plus else "-", "uvw"[q]), exc)


# ----------------------------------------------------------------- zero test

def _lin_poly(nvars, p, q, plus):
    e_p = tuple(1 if k == p else 0 for k in range(nvars))
    e_q = tuple(1 if k == q else 0 for k in range(nvars))
    if plus:
        return {e_p: mpq(1), e_q: mpq(1)}
    return {e_q: mpq(1), e_p: mpq(-1)}


def _pmul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(e, 0) + ca * cb
            if c:
                out[e] = c
            else:
                out.pop(e, None)
    return out


def _ppow(p, k, nvars):
    out = {(0,) * nvars: mpq(1)}
    for _ in range(k):
        out = _pmul(out, p)
    return out


def clear_denominators(val):
    """(tensor, order): val times a nonzero Laurent polynomial in the x variables, and the
    total degree through which that product is known."""
    sp = val.space
    nf = len(sp.forms)
    if not val.orders:
        return None, sp.order
    keys = list(val.orders)
    tops = [max(0, max(k[i] for k in keys)) for i in range(nf)]
    factors = {}
    for k in keys:
        poly = {(0,) * sp.nvars: mpq(1)}
        mono = [0] * sp.nvars
        for i, (p, q, plus) in enumerate(sp.forms):
            a = k[i]
            poly = _pmul(poly, _ppow(_lin_poly(sp.nvars, p, q, plus), tops[i] - a, sp.nvars))
            mono[p] += a
            mono[q] += a
        for var in range(sp.nvars):
            mono[var] -= k[nf + var]
        factors[k] = (poly, mono)
    low = [min(m[var] for _, m in factors.values()) for var in range(sp.nvars)]
    total = None
    order = None
    for k in keys:
        poly, mono = factors[k]
        shift = tuple(m - lo for m, lo in zip(mono, low))
        poly = {tuple(x + y for x, y in zip(e, shift)): c for e, c in poly.items()}
        known = val.orders[k]
        t = val.parts.get(k)
        if t is not None:
            known = min([known] + [s.order for s in t.terms.values()])
            term = t.map(lambda s: s.mul_scalar_poly(poly).truncate(known + min(sum(e) for e in poly)))
            total = term if total is None else total + term
        o = known + min(sum(e) for e in poly)
        order = o if order is None else min(order, o)
    return total, order


def zero_test(val):
    """(is_zero, checked_order, witness_text); only total degrees <= checked_order count."""
    total, order = clear_denominators(val)
    if total is None:
        return True, order, None
    for key, s in sorted(total.terms.items()):
        live = {e: c for e, c in s.coeffs.items() if sum(e) <= order}
        if live:
            e = min(live, key=lambda e: (sum(e), e))
            return False, order, "%s x^%s: %s" % (key, e, s.ring.text(live[e]))
    return True, order, None


__all__ = [
    "Arg", "u", "v", "w", "U", "V", "W", "Expr", "Const", "Ser", "Blk", "Op", "Add", "Mul",
    "Bracket", "Div", "LinMul", "VarMul", "Tau", "br", "dm", "dp", "lm", "lp", "times_var",
    "Space", "FracValue", "Evaluator", "zero_test", "clear_denominators", "RelationDivisionError",
]
