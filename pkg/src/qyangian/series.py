"""Truncated multivariate series in x_k = u_k^{-1} over an arbitrary coefficient ring.

Truncation is by total degree: a series of order L stores every coefficient
whose exponent sum is at most L.  Univariate series (TruncSeries) and
bivariate series (BivarSeries) are the one- and two-variable cases.
"""

from gmpy2 import mpq

from .superalgebra import ONE


class DivisionPreconditionError(ArithmeticError):
    """Numerator does not vanish on the diagonal required by an exact division."""

    def __init__(self, message, exponent=None):
        super().__init__(message)
        self.exponent = exponent


class Series:
    __slots__ = ("ring", "nvars", "order", "coeffs", "parity")

    def __init__(self, ring, nvars, order, coeffs=None, parity=None):
        self.ring = ring
        self.nvars = nvars
        self.order = order
        out = {}
        for e, c in (coeffs or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError("exponent arity mismatch")
            if sum(e) <= order and not ring.is_zero(c):
                out[e] = c
        self.coeffs = out
        self.parity = parity

    @classmethod
    def _raw(cls, ring, nvars, order, coeffs, parity):
        s = cls.__new__(cls)
        s.ring, s.nvars, s.order, s.coeffs, s.parity = ring, nvars, order, coeffs, parity
        return s

    # ------------------------------------------------------------ builders

    @classmethod
    def constant(cls, ring, value, nvars=1, order=0, parity=0):
        return cls(ring, nvars, order, {(0,) * nvars: value}, parity)

    @classmethod
    def one(cls, ring, nvars=1, order=0):
        return cls.constant(ring, ring.one(), nvars, order, 0)

    @classmethod
    def zero(cls, ring, nvars=1, order=0, parity=None):
        return cls._raw(ring, nvars, order, {}, parity)

    @classmethod
    def from_list(cls, ring, coeffs, order=None, parity=None):
        """Univariate series from [c_0, c_1, ...]."""
        if order is None:
            order = len(coeffs) - 1
        return cls(ring, 1, order, {(r,): c for r, c in enumerate(coeffs)}, parity)

    @classmethod
    def monomial(cls, ring, exps, order, coeff=None):
        if coeff is None:
            coeff = ring.one()
        return cls(ring, len(exps), order, {tuple(exps): coeff}, 0)

    # ------------------------------------------------------------- access

    def coefficient(self, *exps):
        if len(exps) == 1 and isinstance(exps[0], tuple):
            exps = exps[0]
        return self.coeffs.get(tuple(exps), self.ring.zero())

    def __getitem__(self, r):
        if isinstance(r, tuple):
            return self.coefficient(r)
        return self.coefficient((r,))

    def is_zero(self):
        return all(self.ring.is_zero(c) for c in self.coeffs.values())

    def nonzero_exponents(self):
        return sorted(e for e, c in self.coeffs.items() if not self.ring.is_zero(c))

    def max_degree_present(self):
        return max((sum(e) for e in self.coeffs), default=-1)

    def _like(self, coeffs, order=None, parity="same", nvars=None):
        return Series._raw(self.ring, self.nvars if nvars is None else nvars,
                           self.order if order is None else order, coeffs,
                           self.parity if parity == "same" else parity)

    def truncate(self, order):
        order = min(order, self.order)
        return self._like({e: c for e, c in self.coeffs.items() if sum(e) <= order}, order)

    def with_parity(self, parity):
        return self._like(self.coeffs, parity=parity)

    # --------------------------------------------------------- arithmetic

    def _check(self, other):
        if not isinstance(other, Series):
            raise TypeError("expected a Series")
        if other.nvars != self.nvars:
            raise ValueError("series have different numbers of variables")

    def __add__(self, other):
        self._check(other)
        ring = self.ring
        order = min(self.order, other.order)
        out = {e: c for e, c in self.coeffs.items() if sum(e) <= order}
        for e, c in other.coeffs.items():
            if sum(e) > order:
                continue
            if e in out:
                v = ring.add(out[e], c)
                if ring.is_zero(v):
                    del out[e]
                else:
                    out[e] = v
            else:
                out[e] = c
        par = self.parity if self.parity == other.parity else _merge_parity(self, other)
        return self._like(out, order, par)

    def __neg__(self):
        ring = self.ring
        return self._like({e: ring.neg(c) for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = mpq(c)
        if not c:
            return self._like({})
        ring = self.ring
        return self._like({e: ring.scale(v, c) for e, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        self._check(other)
        ring = self.ring
        order = min(self.order, other.order)
        left = [(e, sum(e), c) for e, c in self.coeffs.items() if sum(e) <= order]
        right = [(e, sum(e), c) for e, c in other.coeffs.items() if sum(e) <= order]
        out = {}
        for ea, da, ca in left:
            for eb, db, cb in right:
                if da + db > order:
                    continue
                e = tuple(p + q for p, q in zip(ea, eb))
                prod = ring.mul(ca, cb)
                acc = out.get(e)
                if acc is None:
                    acc = ring.zero()
                out[e] = ring.add_into(acc, prod)
        out = {e: c for e, c in out.items() if not ring.is_zero(c)}
        par = None
        if self.parity is not None and other.parity is not None:
            par = self.parity ^ other.parity
        return self._like(out, order, par)

    def __rmul__(self, other):
        return self.scale(other)

    def bracket(self, other):
        """Super commutator ab - (-1)^{|a||b|} ba for parity-homogeneous series."""
        pa, pb = self.parity, other.parity
        if pa is None:
            pa = _infer_parity(self)
        if pb is None:
            pb = _infer_parity(other)
        if pa is None or pb is None:
            return self._like({}, min(self.order, other.order))
        ab = self * other
        ba = other * self
        if pa and pb:
            return ab + ba
        return ab - ba

    def map(self, fn, ring=None, parity="same"):
        ring = ring or self.ring
        out = {}
        for e, c in self.coeffs.items():
            v = fn(c)
            if not ring.is_zero(v):
                out[e] = v
        return Series._raw(ring, self.nvars, self.order, out,
                           self.parity if parity == "same" else parity)

    # ----------------------------------------------- rational-function ops

    def substitute_neg(self, variables=None):
        """u_k -> -u_k for the listed variables (all by default)."""
        if variables is None:
            variables = range(self.nvars)
        variables = tuple(variables)
        ring = self.ring
        out = {}
        for e, c in self.coeffs.items():
            if sum(e[k] for k in variables) % 2:
                out[e] = ring.neg(c)
            else:
                out[e] = c
        return self._like(out)

    def derivative(self, var=0):
        """Formal d/du_var of sum c_r u^{-r}."""
        ring = self.ring
        out = {}
        for e, c in self.coeffs.items():
            r = e[var]
            if r == 0 or sum(e) + 1 > self.order:
                continue
            f = list(e)
            f[var] = r + 1
            out[tuple(f)] = ring.scale(c, mpq(-r))
        return self._like(out)

    def mul_var(self, var=0):
        """Multiply by u_var; needs a vanishing x_var^0 part and costs one order."""
        out = {}
        for e, c in self.coeffs.items():
            if e[var] == 0:
                raise DivisionPreconditionError(
                    "multiplication by u requires a zero x^0 part", e)
            f = list(e)
            f[var] -= 1
            out[tuple(f)] = c
        return self._like(out, self.order - 1)

    def mul_scalar_poly(self, poly):
        """Multiply by a polynomial in the x variables with rational coefficients."""
        ring = self.ring
        if not poly:
            return self._like({})
        order = self.order + min(sum(f) for f in poly)
        out = {}
        for e, c in self.coeffs.items():
            for f, a in poly.items():
                g = tuple(p + q for p, q in zip(e, f))
                if sum(g) > order:
                    continue
                acc = out.get(g)
                if acc is None:
                    acc = ring.zero()
                out[g] = ring.add_into(acc, c, mpq(a))
        out = {e: c for e, c in out.items() if not ring.is_zero(c)}
        return self._like(out, order)

    def _divide(self, p, q, plus):
        ring = self.ring
        groups = {}
        for e, c in self.coeffs.items():
            rest = tuple(x for k, x in enumerate(e) if k not in (p, q))
            groups.setdefault((rest, e[p] + e[q]), {})[e[p]] = c
        out = {}
        for (rest, s), row in sorted(groups.items(), key=lambda kv: (sum(kv[0][0]) + kv[0][1], kv[0])):
            acc = ring.zero()
            for i in range(s + 1):
                if plus and i:
                    acc = ring.neg(acc)
                c = row.get(i)
                if c is not None:
                    acc = ring.add(acc, c)
                if i == s:
                    if not ring.is_zero(acc):
                        which = "u+v" if plus else "u-v"
                        raise DivisionPreconditionError(
                            "numerator does not vanish where %s = 0 (total degree %d)"
                            % (which, s + sum(rest)), (rest, s))
                    break
                if ring.is_zero(acc):
                    continue
                e = [0] * self.nvars
                e[p], e[q] = i + 1, s - i
                it = iter(rest)
                for k in range(self.nvars):
                    if k not in (p, q):
                        e[k] = next(it)
                e = tuple(e)
                if sum(e) <= self.order:
                    out[e] = acc
        return self._like(out)

    def divide_u_minus_v(self, p=0, q=1):
        """Exact quotient by (u_p - u_q) computed through (y - x)/(xy)."""
        return self._divide(p, q, False)

    def divide_u_plus_v(self, p=0, q=1):
        """Exact quotient by (u_p + u_q) computed through (x + y)/(xy)."""
        return self._divide(p, q, True)

    def diagonal(self, sign=1, p=0, q=1):
        """Set u_q = sign * u_p and drop variable q."""
        ring = self.ring
        out = {}
        for e, c in self.coeffs.items():
            f = list(e)
            f[p] += e[q]
            del f[q]
            f = tuple(f)
            if sign < 0 and e[q] % 2:
                c = ring.neg(c)
            acc = out.get(f)
            if acc is None:
                acc = ring.zero()
            out[f] = ring.add_into(acc, c)
        out = {e: c for e, c in out.items() if not ring.is_zero(c)}
        return self._like(out, nvars=self.nvars - 1)

    def lift(self, var, nvars, neg=False):
        """Place a univariate series at variable `var` of an nvars context."""
        if self.nvars != 1:
            raise ValueError("lift expects a univariate series")
        ring = self.ring
        out = {}
        for (r,), c in self.coeffs.items():
            e = [0] * nvars
            e[var] = r
            out[tuple(e)] = ring.neg(c) if (neg and r % 2) else c
        return self._like(out, nvars=nvars)

    def text(self):
        names = "xyzw"
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, key=lambda e: (sum(e), e)):
            mono = " ".join("%s^%d" % (names[k], x) for k, x in enumerate(e) if x)
            parts.append("(%s)%s" % (self.ring.text(self.coeffs[e]), (" " + mono) if mono else ""))
        return " + ".join(parts)

    def __repr__(self):
        return "Series[%d vars, order %d](%s)" % (self.nvars, self.order, self.text())


def _infer_parity(s):
    par = None
    for c in s.coeffs.values():
        p = s.ring.parity(c)
        if p is None:
            continue
        if par is None:
            par = p
        elif par != p:
            raise ValueError("series is not parity-homogeneous")
    return par


def _merge_parity(a, b):
    if a.parity is None and not a.coeffs:
        return b.parity
    if b.parity is None and not b.coeffs:
        return a.parity
    return None


def TruncSeries(ring, coeffs, order=None, parity=None):
    return Series.from_list(ring, coeffs, order, parity)


def BivarSeries(ring, coeffs, order, parity=None):
    return Series(ring, 2, order, coeffs, parity)


def substitute_neg(s):
    return s.substitute_neg()


def derivative(s):
    return s.derivative()


def divide_u_minus_v(n):
    return n.divide_u_minus_v()


def divide_u_plus_v(n):
    return n.divide_u_plus_v()


def diagonal(s, sign=1):
    return s.diagonal(sign)


def product_uv(a, b):
    """a(u) b(v) as a bivariate series."""
    return a.lift(0, 2) * b.lift(1, 2)


def scalar_poly(terms):
    """Helper to build {exps: Scalar} polynomials from ints."""
    return {tuple(e): mpq(c) for e, c in terms.items() if c}


def series_one_like(s):
    return Series.one(s.ring, s.nvars, s.order)


def is_one(s):
    ring = s.ring
    for e, c in s.coeffs.items():
        if any(e):
            if not ring.is_zero(c):
                return False
        elif not ring.is_zero(ring.sub(c, ring.one())):
            return False
    return (0,) * s.nvars in s.coeffs


__all__ = [
    "Series", "DivisionPreconditionError", "TruncSeries", "BivarSeries",
    "substitute_neg", "derivative", "divide_u_minus_v", "divide_u_plus_v",
    "diagonal", "product_uv", "scalar_poly", "ONE",
]
