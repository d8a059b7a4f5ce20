"""YQ-form 2x2 matrices, block matrices over series, and the block Gauss decomposition.

A YQ matrix X(u) is stored through two series: a(u) = x_{11}(u) (even) and
b(u) = x_{-1,1}(u) (odd).  The other entries are x_{-1,-1}(u) = a(-u) and
x_{1,-1}(u) = b(-u).
"""

from .series import DivisionPreconditionError, Series


class YQMatrix:
    __slots__ = ("a", "b")

    def __init__(self, a, b):
        if a.nvars != 1 or b.nvars != 1:
            raise ValueError("YQ entries are univariate series")
        self.a = a.with_parity(0)
        self.b = b.with_parity(1)

    @classmethod
    def identity(cls, ring, order):
        return cls(Series.one(ring, 1, order), Series.zero(ring, 1, order, 1))

    @classmethod
    def zero(cls, ring, order):
        return cls(Series.zero(ring, 1, order, 0), Series.zero(ring, 1, order, 1))

    @property
    def ring(self):
        return self.a.ring

    @property
    def order(self):
        return min(self.a.order, self.b.order)

    def entry(self, i, j):
        if (i, j) == (1, 1):
            return self.a
        if (i, j) == (-1, -1):
            return self.a.substitute_neg()
        if (i, j) == (-1, 1):
            return self.b
        if (i, j) == (1, -1):
            return self.b.substitute_neg()
        raise KeyError((i, j))

    def full(self):
        return {(i, j): self.entry(i, j) for i in (1, -1) for j in (1, -1)}

    def __add__(self, other):
        return YQMatrix(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return YQMatrix(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return YQMatrix(-self.a, -self.b)

    def scale(self, c):
        return YQMatrix(self.a.scale(c), self.b.scale(c))

    def __mul__(self, other):
        return yq_multiply(self, other)

    def substitute_neg(self):
        return YQMatrix(self.a.substitute_neg(), self.b.substitute_neg())

    def truncate(self, order):
        return YQMatrix(self.a.truncate(order), self.b.truncate(order))

    def map(self, fn, ring):
        return YQMatrix(self.a.map(fn, ring), self.b.map(fn, ring))

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def __repr__(self):
        return "YQMatrix(a=%r, b=%r)" % (self.a, self.b)


def yq_multiply(X, Y):
    """2x2 super matrix product in (a, b) storage."""
    a = X.a * Y.a - X.b.substitute_neg() * Y.b
    b = X.b * Y.a + X.a.substitute_neg() * Y.b
    return YQMatrix(a, b)


def full_multiply(X, Y):
    """Reference product on the full 2x2 entry maps (used as an oracle)."""
    out = {}
    for i in (1, -1):
        for l in (1, -1):
            acc = None
            for j in (1, -1):
                sign = -1 if ((i < 0) ^ (j < 0)) and ((j < 0) ^ (l < 0)) else 1
                term = X[(i, j)] * Y[(j, l)]
                if sign < 0:
                    term = -term
                acc = term if acc is None else acc + term
            out[(i, l)] = acc
    return out


def _scalar_constant(series):
    """The constant term of a series as a rational, if it is a scalar multiple of 1."""
    return series.ring.scalar_value(series.coefficient((0,) * series.nvars))


def yq_invert(X):
    """Two-sided inverse through the Neumann series of 1 - X / x_11^{(0)}."""
    ring = X.ring
    order = X.order
    c = _scalar_constant(X.a)
    if not c:
        raise DivisionPreconditionError("x_11 must have an invertible scalar constant term")
    if not ring.is_zero(X.b.coefficient((0,))):
        raise DivisionPreconditionError("x_{-1,1} must have zero constant term")
    Xn = X.scale(1 / c)
    one = YQMatrix.identity(ring, order)
    N = one - Xn
    inv = one
    power = one
    for _ in range(order):
        power = power * N
        if power.is_zero():
            break
        inv = inv + power
    return inv.scale(1 / c)


class BlockMatrix:
    """n x n grid of YQ matrices; missing blocks are zero."""

    def __init__(self, n, blocks, ring, order):
        self.n = n
        self.blocks = dict(blocks)
        self.ring = ring
        self.order = order

    @classmethod
    def identity(cls, n, ring, order):
        return cls(n, {(a, a): YQMatrix.identity(ring, order) for a in range(1, n + 1)}, ring, order)

    def block(self, a, b):
        blk = self.blocks.get((a, b))
        if blk is None:
            return YQMatrix.zero(self.ring, self.order)
        return blk

    def __getitem__(self, key):
        return self.block(*key)

    def __add__(self, other):
        keys = set(self.blocks) | set(other.blocks)
        return BlockMatrix(self.n, {k: self.block(*k) + other.block(*k) for k in keys}, self.ring, self.order)

    def __sub__(self, other):
        keys = set(self.blocks) | set(other.blocks)
        return BlockMatrix(self.n, {k: self.block(*k) - other.block(*k) for k in keys}, self.ring, self.order)

    def __mul__(self, other):
        out = {}
        for a in range(1, self.n + 1):
            for c in range(1, self.n + 1):
                acc = None
                for b in range(1, self.n + 1):
                    x, y = self.blocks.get((a, b)), other.blocks.get((b, c))
                    if x is None or y is None:
                        continue
                    term = x * y
                    acc = term if acc is None else acc + term
                if acc is not None:
                    out[(a, c)] = acc
        return BlockMatrix(self.n, out, self.ring, self.order)

    def submatrix(self, rows, cols):
        out = {}
        for p, a in enumerate(rows, 1):
            for q, b in enumerate(cols, 1):
                if (a, b) in self.blocks:
                    out[(p, q)] = self.blocks[(a, b)]
        return _Rect(len(rows), len(cols), out, self.ring, self.order)

    def is_zero(self):
        return all(b.is_zero() for b in self.blocks.values())

    def map(self, fn, ring):
        return BlockMatrix(self.n, {k: v.map(fn, ring) for k, v in self.blocks.items()}, ring, self.order)

    def entry(self, i, j):
        """Entry (i, j) of the underlying 2n x 2n matrix, rows labelled 1, -1, 2, -2, ..."""
        a, b = abs(i), abs(j)
        return self.block(a, b).entry(1 if i > 0 else -1, 1 if j > 0 else -1)


class _Rect(BlockMatrix):
    def __init__(self, rows, cols, blocks, ring, order):
        super().__init__(max(rows, cols), blocks, ring, order)
        self.rows, self.cols = rows, cols

    def __mul__(self, other):
        out = {}
        for a in range(1, self.rows + 1):
            for c in range(1, other.cols + 1):
                acc = None
                for b in range(1, self.cols + 1):
                    x, y = self.blocks.get((a, b)), other.blocks.get((b, c))
                    if x is None or y is None:
                        continue
                    term = x * y
                    acc = term if acc is None else acc + term
                if acc is not None:
                    out[(a, c)] = acc
        return _Rect(self.rows, other.cols, out, self.ring, self.order)


def block_invert(T):
    """Inverse of a block matrix with T = 1 + O(u^{-1}), by the Neumann series."""
    n = T.n
    for (a, b), blk in T.blocks.items():
        want = 1 if a == b else 0
        if _scalar_constant(blk.a) != want or not T.ring.is_zero(blk.b.coefficient((0,))):
            raise DivisionPreconditionError("block matrix is not 1 + O(u^-1)")
    one = BlockMatrix.identity(n, T.ring, T.order)
    N = _prune(one - T)
    inv = one
    power = one
    for _ in range(T.order):
        power = _prune(power * N)
        if not power.blocks:
            break
        inv = inv + power
    return inv


def _prune(M):
    return BlockMatrix(M.n, {k: v for k, v in M.blocks.items() if not v.is_zero()}, M.ring, M.order)


def _rect_invert(M):
    sq = BlockMatrix(M.rows, M.blocks, M.ring, M.order)
    inv = block_invert(sq)
    return _Rect(M.rows, M.rows, inv.blocks, M.ring, M.order)


def quasi_determinant(T, r, a, b):
    """T_ab - T_{a,1..r} (T_{1..r,1..r})^{-1} T_{1..r,b}."""
    if r < 0 or a <= r or b <= r:
        raise ValueError("quasi-determinant needs r < a, b")
    if r == 0:
        return T.block(a, b)
    lead = range(1, r + 1)
    A = T.submatrix(lead, lead)
    row = T.submatrix([a], lead)
    col = T.submatrix(lead, [b])
    prod = row * _rect_invert(A) * col
    return T.block(a, b) - prod.block(1, 1)


class GaussData:
    """Block Gauss factors T = F H E with named Drinfeld series accessors."""

    def __init__(self, n, F, H, E, ring, order):
        self.n = n
        self.F = F
        self.H = H
        self.E = E
        self.ring = ring
        self.order = order
        self._hinv = {}

    def H_block(self, a):
        return self.H[a]

    def H_inv(self, a):
        if a not in self._hinv:
            self._hinv[a] = yq_invert(self.H[a])
        return self._hinv[a]

    def E_block(self, a, b):
        if a == b:
            return YQMatrix.identity(self.ring, self.order)
        if a > b:
            return YQMatrix.zero(self.ring, self.order)
        return self.E[(a, b)]

    def F_block(self, b, a):
        if a == b:
            return YQMatrix.identity(self.ring, self.order)
        if b < a:
            return YQMatrix.zero(self.ring, self.order)
        return self.F[(b, a)]

    def h(self, a):
        return self.H[a].a

    def hb(self, a):
        return self.H[a].b

    def e(self, b):
        return self.E[(b, b + 1)].a

    def eb(self, b):
        return self.E[(b, b + 1)].b

    def f(self, b):
        return self.F[(b + 1, b)].a

    def fb(self, b):
        return self.F[(b + 1, b)].b

    def F_matrix(self):
        blocks = {(a, a): YQMatrix.identity(self.ring, self.order) for a in range(1, self.n + 1)}
        blocks.update(self.F)
        return BlockMatrix(self.n, blocks, self.ring, self.order)

    def E_matrix(self):
        blocks = {(a, a): YQMatrix.identity(self.ring, self.order) for a in range(1, self.n + 1)}
        blocks.update(self.E)
        return BlockMatrix(self.n, blocks, self.ring, self.order)

    def H_matrix(self):
        return BlockMatrix(self.n, {(a, a): self.H[a] for a in range(1, self.n + 1)}, self.ring, self.order)

    def reconstruct(self):
        return self.F_matrix() * self.H_matrix() * self.E_matrix()

    def map(self, fn, ring):
        return GaussData(
            self.n,
            {k: v.map(fn, ring) for k, v in self.F.items()},
            {k: v.map(fn, ring) for k, v in self.H.items()},
            {k: v.map(fn, ring) for k, v in self.E.items()},
            ring, self.order)

    def text(self):
        lines = []
        for a in sorted(self.H):
            lines.append("H%d.a: %s" % (a, self.H[a].a.text()))
            lines.append("H%d.b: %s" % (a, self.H[a].b.text()))
        for k in sorted(self.E):
            lines.append("E%d%d.a: %s" % (k + (self.E[k].a.text(),)))
            lines.append("E%d%d.b: %s" % (k + (self.E[k].b.text(),)))
        for k in sorted(self.F):
            lines.append("F%d%d.a: %s" % (k + (self.F[k].a.text(),)))
            lines.append("F%d%d.b: %s" % (k + (self.F[k].b.text(),)))
        return "\n".join(lines)


def gauss_decompose(T, route="elimination"):
    """Factors (F, H, E) of T; `route` is 'elimination' or 'quasideterminant'."""
    n, ring, order = T.n, T.ring, T.order
    H, E, F = {}, {}, {}
    if route == "elimination":
        A = dict(T.blocks)

        def blk(a, b):
            return A.get((a, b)) or YQMatrix.zero(ring, order)

        for k in range(1, n + 1):
            H[k] = blk(k, k)
            if k == n:
                break
            hinv = yq_invert(H[k])
            for b in range(k + 1, n + 1):
                E[(k, b)] = hinv * blk(k, b)
            for a in range(k + 1, n + 1):
                F[(a, k)] = blk(a, k) * hinv
            for a in range(k + 1, n + 1):
                left = F[(a, k)] * H[k]
                for b in range(k + 1, n + 1):
                    A[(a, b)] = blk(a, b) - left * E[(k, b)]
    elif route == "quasideterminant":
        for a in range(1, n + 1):
            H[a] = quasi_determinant(T, a - 1, a, a)
        for b in range(1, n + 1):
            hinv = yq_invert(H[b])
            for a in range(b + 1, n + 1):
                E[(b, a)] = hinv * quasi_determinant(T, b - 1, b, a)
                F[(a, b)] = quasi_determinant(T, b - 1, a, b) * hinv
    else:
        raise ValueError("unknown route %r" % route)
    return GaussData(n, F, H, E, ring, order)


def symbolic_T(ctx, order=None):
    """Block matrix of T(u) over the normal-form ring of Y(q_n)."""
    order = ctx.L if order is None else order
    blocks = {}
    for a in range(1, ctx.n + 1):
        for b in range(1, ctx.n + 1):
            blocks[(a, b)] = YQMatrix(ctx.t_series(a, b, order), ctx.t_series(-a, b, order))
    return BlockMatrix(ctx.n, blocks, ctx.ring, order)


def numeric_T(ctx, order=None):
    """Block matrix of ev(T(u)) in the defining representation."""
    from .yangian import ev_defining
    order = ctx.L if order is None else order
    blocks = {}
    ring = None
    for a in range(1, ctx.n + 1):
        for b in range(1, ctx.n + 1):
            x, y = ev_defining(ctx, a, b, order), ev_defining(ctx, -a, b, order)
            ring = x.ring
            blocks[(a, b)] = YQMatrix(x, y)
    return BlockMatrix(ctx.n, blocks, ring, order)


def higher_e(gd, a, b, r, bar=False):
    """Coefficient e_{ab}^{(r)} (or its barred version) from the nested-bracket recursion."""
    if b <= a:
        raise ValueError("need a < b")
    ring = gd.ring
    if b == a + 1:
        return (gd.eb(a) if bar else gd.e(a)).coefficient((r,))
    inner = higher_e(gd, a, b - 1, r, bar)
    e1 = gd.e(b - 1).coefficient((1,))
    return _super_bracket(ring, inner, e1)


def _super_bracket(ring, x, y):
    px = ring.parity(x) or 0
    py = ring.parity(y) or 0
    xy, yx = ring.mul(x, y), ring.mul(y, x)
    return ring.add(xy, yx) if (px and py) else ring.sub(xy, yx)


def extract_drinfeld(gd):
    """Named series for the Drinfeld generators and all root blocks."""
    out = {}
    for a in range(1, gd.n + 1):
        out["h%d" % a] = gd.h(a)
        out["hb%d" % a] = gd.hb(a)
    for b in range(1, gd.n):
        out["e%d" % b] = gd.e(b)
        out["eb%d" % b] = gd.eb(b)
        out["f%d" % b] = gd.f(b)
        out["fb%d" % b] = gd.fb(b)
    for (a, b), blk in gd.E.items():
        out["E%d%d.a" % (a, b)] = blk.a
        out["E%d%d.b" % (a, b)] = blk.b
    for (b, a), blk in gd.F.items():
        out["F%d%d.a" % (b, a)] = blk.a
        out["F%d%d.b" % (b, a)] = blk.b
    return out


def omega_checks(gd):
    """The six families of omega images on Gauss generators; returns [(family, key, ok)]."""
    from .yangian import omega

    def om(series):
        return series.map(lambda p: omega(p).terms)

    res = []
    for c in range(1, gd.n + 1):
        res.append(("h", (c,), (om(gd.h(c)) - gd.h(c)).is_zero()))
        res.append(("hbar", (c,), (om(gd.hb(c)) - gd.hb(c).substitute_neg()).is_zero()))
    for (a, b), blk in sorted(gd.E.items()):
        fb = gd.F[(b, a)]
        res.append(("e", (a, b), (om(blk.a) - fb.a).is_zero()))
        res.append(("f", (b, a), (om(fb.a) - blk.a).is_zero()))
        res.append(("ebar", (a, b), (om(blk.b) - fb.b.substitute_neg()).is_zero()))
        res.append(("fbar", (b, a), (om(fb.b) - blk.b.substitute_neg()).is_zero()))
    return res


__all__ = [
    "YQMatrix", "BlockMatrix", "GaussData", "yq_multiply", "yq_invert", "block_invert",
    "quasi_determinant", "gauss_decompose", "extract_drinfeld", "symbolic_T", "numeric_T",
    "higher_e", "full_multiply", "omega_checks",
]
