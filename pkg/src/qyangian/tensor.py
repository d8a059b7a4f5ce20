"""Exact super-tensor calculus on End(C^{n|n})^{(x) m} with coefficients in any ring.

A tensor is a sparse map from m-tuples of matrix units (i, j) to ring
elements.  Multiplication follows the super tensor rule: moving the units of
the right factor past those of the left factor and past the coefficient of the
left factor produces the Koszul sign.
"""

from itertools import product as _iproduct

from gmpy2 import mpq

from .rings import Ring, ScalarRing
from .series import Series
from .superalgebra import ONE, ZERO


def _p(i):
    return 1 if i < 0 else 0


def unit_parity(unit):
    return _p(unit[0]) ^ _p(unit[1])


def index_set(n):
    return tuple(x for a in range(1, n + 1) for x in (a, -a))


# -------------------------------------------------- rational functions in u, v

def _poly_mul(p, q):
    out = {}
    for (a, b), c in p.items():
        for (d, e), f in q.items():
            k = (a + d, b + e)
            v = out.get(k, ZERO) + c * f
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def _poly_add(p, q, c=ONE):
    out = dict(p)
    for k, v in q.items():
        w = out.get(k, ZERO) + c * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _poly_pow(p, k):
    out = {(0, 0): ONE}
    for _ in range(k):
        out = _poly_mul(out, p)
    return out


_Y_MINUS_X = {(0, 1): ONE, (1, 0): -ONE}
_X_PLUS_Y = {(1, 0): ONE, (0, 1): ONE}


class FracUV(Ring):
    """Sums N_ab(x, y) / ((u - v)^a (u + v)^b) with x = 1/u, y = 1/v; all even."""

    def zero(self):
        return {}

    def one(self):
        return {(0, 0): {(0, 0): ONE}}

    def from_scalar(self, c):
        c = mpq(c)
        return {(0, 0): {(0, 0): c}} if c else {}

    @staticmethod
    def inv_u_minus_v(power=1):
        return {(power, 0): {(0, 0): ONE}}

    @staticmethod
    def inv_u_plus_v(power=1):
        return {(0, power): {(0, 0): ONE}}

    @staticmethod
    def poly(terms):
        return {(0, 0): {tuple(k): mpq(v) for k, v in terms.items() if v}}

    def add(self, a, b):
        out = dict(a)
        for k, p in b.items():
            q = _poly_add(out.get(k, {}), p)
            if q:
                out[k] = q
            else:
                out.pop(k, None)
        return out

    def scale(self, a, c):
        c = mpq(c)
        if not c:
            return {}
        return {k: {e: v * c for e, v in p.items()} for k, p in a.items()}

    def mul(self, a, b):
        out = {}
        for (a1, b1), p in a.items():
            for (a2, b2), q in b.items():
                k = (a1 + a2, b1 + b2)
                r = _poly_add(out.get(k, {}), _poly_mul(p, q))
                if r:
                    out[k] = r
                else:
                    out.pop(k, None)
        return out

    def cleared(self, a):
        """Numerator over the common denominator (u - v)^A (u + v)^B, times (xy)^{A+B}."""
        if not a:
            return {}
        A = max(k[0] for k in a)
        B = max(k[1] for k in a)
        total = {}
        for (i, j), p in a.items():
            f = _poly_mul(_poly_pow(_Y_MINUS_X, A - i), _poly_pow(_X_PLUS_Y, B - j))
            f = _poly_mul(f, {(i + j, i + j): ONE})
            total = _poly_add(total, _poly_mul(p, f))
        return total

    def is_zero(self, a):
        return not self.cleared(a)

    def split_parity(self, a):
        return a, {}

    def negate_args(self, a):
        """(u, v) -> (-u, -v)."""
        out = {}
        for (i, j), p in a.items():
            s = -1 if (i + j) % 2 else 1
            out[(i, j)] = {e: v * (s if (e[0] + e[1]) % 2 == 0 else -s) for e, v in p.items()}
        return out

    def text(self, a):
        return repr(a)


class SeriesRing(Ring):
    """Series over a base ring, used as tensor coefficients."""

    def __init__(self, base, nvars, order):
        self.base = base
        self.nvars = nvars
        self.order = order

    def zero(self):
        return Series.zero(self.base, self.nvars, self.order)

    def one(self):
        return Series.one(self.base, self.nvars, self.order)

    def from_scalar(self, c):
        return Series.constant(self.base, self.base.from_scalar(c), self.nvars, self.order)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def scale(self, a, c):
        return a.scale(c)

    def is_zero(self, a):
        return a.is_zero()

    def split_parity(self, a):
        base = self.base
        even, odd = {}, {}
        for e, c in a.coeffs.items():
            ce, co = base.split_parity(c)
            if not base.is_zero(ce):
                even[e] = ce
            if not base.is_zero(co):
                odd[e] = co
        return (Series._raw(base, a.nvars, a.order, even, 0),
                Series._raw(base, a.nvars, a.order, odd, 1))

    def parity(self, a):
        if a.parity is not None:
            return a.parity
        return Ring.parity(self, a)


# --------------------------------------------------------------- SuperTensor

class SuperTensor:
    __slots__ = ("indices", "m", "ring", "terms")

    def __init__(self, indices, m, ring, terms=None):
        self.indices = tuple(indices)
        self.m = m
        self.ring = ring
        self.terms = {}
        for k, v in (terms or {}).items():
            if len(k) != m:
                raise ValueError("index tuple of wrong arity")
            if not ring.is_zero(v):
                self.terms[tuple(k)] = v

    @classmethod
    def _raw(cls, indices, m, ring, terms):
        t = cls.__new__(cls)
        t.indices, t.m, t.ring, t.terms = indices, m, ring, terms
        return t

    def _like(self, terms, ring=None):
        return SuperTensor._raw(self.indices, self.m, ring or self.ring, terms)

    @classmethod
    def identity(cls, indices, m, ring):
        one = ring.one()
        terms = {}
        for idx in _iproduct(indices, repeat=m):
            terms[tuple((i, i) for i in idx)] = one
        return cls._raw(tuple(indices), m, ring, terms)

    @classmethod
    def scalar(cls, indices, m, ring, c):
        return cls.identity(indices, m, ring).scale(c)

    def __add__(self, other):
        other = self._coerce(other)
        ring = self.ring
        out = dict(self.terms)
        for k, v in other.terms.items():
            if k in out:
                w = ring.add(out[k], v)
                if ring.is_zero(w):
                    del out[k]
                else:
                    out[k] = w
            else:
                out[k] = v
        return self._like(out)

    def __neg__(self):
        ring = self.ring
        return self._like({k: ring.neg(v) for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def scale(self, c):
        ring = self.ring
        out = {}
        for k, v in self.terms.items():
            w = ring.scale(v, c)
            if not ring.is_zero(w):
                out[k] = w
        return self._like(out)

    def map(self, fn, ring=None):
        ring = ring or self.ring
        out = {}
        for k, v in self.terms.items():
            w = fn(v)
            if not ring.is_zero(w):
                out[k] = w
        return self._like(out, ring)

    def _coerce(self, other):
        if not isinstance(other, SuperTensor):
            raise TypeError("cannot combine SuperTensor with %r" % type(other))
        if other.ring is not self.ring and isinstance(other.ring, ScalarRing):
            return other.lift_scalars(self.ring)
        return other

    def __mul__(self, other):
        if not isinstance(other, SuperTensor):
            return self.scale(other)
        if other.m != self.m:
            raise ValueError("arity mismatch")
        left, right = self, other
        if left.ring is not right.ring:
            if isinstance(left.ring, ScalarRing):
                left = left.lift_scalars(right.ring)
            elif isinstance(right.ring, ScalarRing):
                right = right.lift_scalars(left.ring)
        ring = left.ring
        by_rows = {}
        for k, v in right.terms.items():
            rows = tuple(u[0] for u in k)
            by_rows.setdefault(rows, []).append((k, v))
        split_cache = {}
        out = {}
        for ka, va in left.terms.items():
            cols = tuple(u[1] for u in ka)
            partners = by_rows.get(cols)
            if not partners:
                continue
            pa = [unit_parity(u) for u in ka]
            if id(va) not in split_cache:
                split_cache[id(va)] = ring.split_parity(va)
            va_even, va_odd = split_cache[id(va)]
            for kb, vb in partners:
                pb = [unit_parity(u) for u in kb]
                sgn = 0
                for s in range(self.m):
                    if pb[s]:
                        sgn += sum(pa[s + 1:])
                pbt = sum(pb) & 1
                key = tuple((u[0], w[1]) for u, w in zip(ka, kb))
                terms = []
                if not ring.is_zero(va_even):
                    terms.append((va_even, sgn))
                if not ring.is_zero(va_odd):
                    terms.append((va_odd, sgn + pbt))
                for part, sg in terms:
                    prod = ring.mul(part, vb)
                    if sg % 2:
                        prod = ring.neg(prod)
                    acc = out.get(key)
                    out[key] = prod if acc is None else ring.add(acc, prod)
        return self._like({k: v for k, v in out.items() if not ring.is_zero(v)}, ring)

    def lift_scalars(self, ring):
        return self.map(ring.from_scalar, ring)

    def is_zero(self):
        return all(self.ring.is_zero(v) for v in self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, SuperTensor):
            return NotImplemented
        return (self - other).is_zero()

    def commutator(self, other):
        return self * other - other * self

    def component(self, key):
        return self.terms.get(tuple(key), self.ring.zero())

    def __repr__(self):
        return "SuperTensor(m=%d, %d terms)" % (self.m, len(self.terms))


def embed(A, slot, m):
    """A (arity 1) placed in tensor slot `slot` (1-based) of an m-fold product."""
    if A.m != 1:
        raise ValueError("embed expects a single-slot tensor")
    terms = {}
    others = [A.indices] * (m - 1)
    for (u,), v in A.terms.items():
        for idx in _iproduct(*others):
            key = [(i, i) for i in idx]
            key.insert(slot - 1, u)
            terms[tuple(key)] = v
    return SuperTensor._raw(A.indices, m, A.ring, terms)


def _pair_operator(indices, m, slots, fn, ring):
    a, b = slots
    if a == b or not (1 <= a <= m and 1 <= b <= m):
        raise ValueError("bad slots %r for arity %d" % (slots, m))
    terms = {}
    rest = [k for k in range(1, m + 1) if k not in (a, b)]
    for i in indices:
        for j in indices:
            for ua, ub, c in fn(i, j):
                if a > b and unit_parity(ua) and unit_parity(ub):
                    # written with slot a first, so exchanging the factors costs a sign
                    c = -c
                for idx in _iproduct(indices, repeat=len(rest)):
                    key = [None] * m
                    key[a - 1], key[b - 1] = ua, ub
                    for pos, x in zip(rest, idx):
                        key[pos - 1] = (x, x)
                    key = tuple(key)
                    v = terms.get(key, ZERO) + c
                    if v:
                        terms[key] = v
                    else:
                        terms.pop(key, None)
    t = SuperTensor._raw(tuple(indices), m, ScalarRing(), terms)
    if ring is not None and not isinstance(ring, ScalarRing):
        t = t.lift_scalars(ring)
    return t


def _sg(k):
    return -ONE if k % 2 else ONE


def _P(i, j):
    return [((i, j), (j, i), _sg(_p(j)))]


def _Q(i, j):
    return [((i, j), (-j, -i), _sg(_p(j)))]


def _Lambda(i, j):
    return [((i, j), (i, j), _sg(_p(i) * _p(j)))]


def _Theta(i, j):
    return [((i, j), (-i, -j), _sg(_p(i) * _p(j) + _p(i) + _p(j)))]


def build_operator(name, n=1, slots=(1, 2), arity=2, ring=None):
    """Named operator at the given (1-based) slots; K and R get rational coefficients."""
    if name in ("Lambda0", "Theta0", "Λ₀", "Θ₀"):
        n = 1
        name = "Lambda" if name in ("Lambda0", "Λ₀") else "Theta"
    name = {"Λ": "Lambda", "Θ": "Theta"}.get(name, name)
    indices = index_set(n)
    if name == "J":
        slot = slots[0] if isinstance(slots, tuple) else slots
        A = SuperTensor._raw(indices, 1, ScalarRing(),
                             {((i, -i),): _sg(_p(i)) for i in indices})
        t = embed(A, slot, arity)
        return t.lift_scalars(ring) if ring is not None else t
    table = {"P": _P, "Q": _Q, "Lambda": _Lambda, "Theta": _Theta}
    if name in table:
        return _pair_operator(indices, arity, slots, table[name], ring)
    if name in ("K", "R"):
        fr = FracUV()
        P = _pair_operator(indices, arity, slots, _P, None).lift_scalars(fr)
        Q = _pair_operator(indices, arity, slots, _Q, None).lift_scalars(fr)
        K = P * SuperTensor.scalar(indices, arity, fr, 1).map(lambda c: fr.mul(c, fr.inv_u_minus_v()))
        K = K + Q * SuperTensor.scalar(indices, arity, fr, 1).map(lambda c: fr.mul(c, fr.inv_u_plus_v()))
        if name == "K":
            return K
        return SuperTensor.identity(indices, arity, fr) - K
    raise ValueError("unknown operator %r" % name)


def tau_on_factor(A, k):
    """Apply E_ij -> (-1)^{|i||j|+|i|} E_ji on slot k (1-based)."""
    ring = A.ring
    out = {}
    for key, v in A.terms.items():
        i, j = key[k - 1]
        s = (_p(i) * _p(j) + _p(i)) % 2
        nk = list(key)
        nk[k - 1] = (j, i)
        nk = tuple(nk)
        w = ring.neg(v) if s else v
        if nk in out:
            w = ring.add(out[nk], w)
        out[nk] = w
    return A._like({k2: v for k2, v in out.items() if not ring.is_zero(v)})


def supertrace(A):
    """Sum of (-1)^{|i|} a_ii over a single-slot tensor."""
    if A.m != 1:
        raise ValueError("supertrace expects a single-slot tensor")
    ring = A.ring
    acc = ring.zero()
    for ((i, j),), v in A.terms.items():
        if i == j:
            acc = ring.add(acc, ring.neg(v) if i < 0 else v)
    return acc


def negate_args_tensor(A):
    ring = A.ring
    if isinstance(ring, FracUV):
        return A.map(ring.negate_args)
    if isinstance(ring, SeriesRing):
        return A.map(lambda s: s.substitute_neg())
    return A


# ------------------------------------------------------- identity checks

def _pq(name, a, b):
    return build_operator(name, 1, (a, b), 3)


def pq_identity_list():
    """Every adjacent equality in the P/Q exchange chains on three factors."""
    P = {(a, b): _pq("P", a, b) for a, b in ((1, 2), (1, 3), (2, 3))}
    Q = {(a, b): _pq("Q", a, b) for a, b in ((1, 2), (1, 3), (2, 3))}

    def w(spec):
        sign = 1
        if spec.startswith("-"):
            sign, spec = -1, spec[1:]
        out = None
        for tok in spec.split():
            op = (P if tok[0] == "P" else Q)[(int(tok[1]), int(tok[2]))]
            out = op if out is None else out * op
        return out.scale(sign) if sign < 0 else out

    chains = [
        ["P12 P13", "P23 P12", "P13 P23"],
        ["P12 P23", "P13 P12", "P23 P13"],
        ["P12 Q13", "Q23 P12", "Q13 Q23"],
        ["P12 Q23", "Q13 P12", "Q23 Q13"],
        ["Q12 Q13", "-P23 Q12", "-Q13 P23"],
        ["Q12 P23", "-Q13 Q12", "P23 Q13"],
        ["Q12 P13", "-Q23 Q12", "-P13 Q23"],
        ["Q12 Q23", "-P13 Q12", "Q23 P13"],
        ["P12 P13 P23", "P23 P13 P12"],
        ["P12 Q13 Q23", "Q23 Q13 P12"],
        ["Q12 Q13 P23", "P23 Q13 Q12"],
        ["Q12 P13 Q23", "Q23 P13 Q12"],
        ["P12 P13 Q23", "P23 Q13 P12", "Q12 P13 P23", "Q23 Q13 Q12"],
        ["Q23 P13 P12", "P12 Q13 P23", "P23 P13 Q12", "Q12 Q13 Q23"],
    ]
    items = []
    for chain in chains:
        for left, right in zip(chain, chain[1:]):
            items.append(("%s = %s" % (left, right), w(left), w(right)))
    return items


def verify_pq_identities():
    """[(label, passed)] for every three-factor P/Q exchange equality."""
    return [(label, lhs == rhs) for label, lhs, rhs in pq_identity_list()]


def verify_operator_facts(n=1):
    """P^2 = 1, Lambda/Theta nilpotency, R(-u,-v)R(u,v), and the K decomposition."""
    res = []
    idx = index_set(n)
    P = build_operator("P", n)
    I = SuperTensor.identity(idx, 2, ScalarRing())
    res.append(("P^2 = 1", P * P == I))
    Q = build_operator("Q", n)
    res.append(("Q^2 = 1", Q * Q == I))
    L = build_operator("Lambda", n)
    T = build_operator("Theta", n)
    zero = SuperTensor(idx, 2, ScalarRing())
    res.append(("Lambda^2 = 0", L * L == zero))
    res.append(("Theta^2 = 0", T * T == zero))
    res.append(("Lambda Theta = 0", L * T == zero))
    res.append(("Theta Lambda = 0", T * L == zero))
    res.append(("Lambda = (id x tau)(P)", tau_on_factor(P, 2) == L))
    res.append(("Theta = (id x tau)(Q)", tau_on_factor(Q, 2) == T))
    fr = FracUV()
    R = build_operator("R", n)
    Rneg = negate_args_tensor(R)
    rhs = fr.add(fr.one(), fr.add(fr.scale(fr.inv_u_minus_v(2), -1), fr.scale(fr.inv_u_plus_v(2), -1)))
    res.append(("R(-u,-v) R(u,v) = 1 - (u-v)^-2 - (u+v)^-2",
                Rneg * R == SuperTensor.identity(idx, 2, fr).map(lambda c: fr.mul(c, rhs))))
    if n == 1:
        J1 = build_operator("J", 1, (1,), 2)
        J2 = build_operator("J", 1, (2,), 2)
        res.append(("Q = -P J1 J2", Q == (P * J1 * J2).scale(-1)))
        K = build_operator("K", 1)
        PJ = (P * J1 * J2).lift_scalars(fr)
        Pf = P.lift_scalars(fr)
        alt = Pf.map(lambda c: fr.mul(c, fr.inv_u_minus_v())) - PJ.map(lambda c: fr.mul(c, fr.inv_u_plus_v()))
        res.append(("K = P/(u-v) - P J1 J2/(u+v)", K == alt))
        res.append(("P J1 = J2 P", P * J1 == J2 * P))
        # the source remarks an inequality here; with these signs it is an equality
        res.append(("P J2 = J1 P", P * J2 == J1 * P))
    return res


def yq_tensor(a, b, ring):
    """Single-slot tensor of the 2x2 YQ matrix with x11 = a(u), x_{-1,1} = b(u)."""
    terms = {
        ((1, 1),): a, ((-1, -1),): a.substitute_neg(),
        ((-1, 1),): b, ((1, -1),): b.substitute_neg(),
    }
    return SuperTensor((1, -1), 1, ring, terms)


def verify_pq_transform(X, arity=3, slots=None):
    """Check P^{ij} X^i = X^j P^{ij}, Q^{ij} X^i = X^j(-u) Q^{ij}, and commutation at other slots.

    X is a single-slot tensor over a SeriesRing (for instance from yq_tensor).
    """
    results = []
    ring = X.ring
    Xneg = X.map(lambda s: s.substitute_neg())
    pairs = [slots] if slots else [(i, j) for i in range(1, arity + 1) for j in range(1, arity + 1) if i != j]
    for i, j in pairs:
        P = build_operator("P", 1, (i, j), arity, ring)
        Q = build_operator("Q", 1, (i, j), arity, ring)
        Xi, Xj = embed(X, i, arity), embed(X, j, arity)
        results.append(("P%d%d X%d = X%d P%d%d" % (i, j, i, j, i, j), P * Xi == Xj * P))
        results.append(("Q%d%d X%d(u) = X%d(-u) Q%d%d" % (i, j, i, j, i, j),
                        Q * Xi == embed(Xneg, j, arity) * Q))
        for k in range(1, arity + 1):
            if k in (i, j):
                continue
            Xk = embed(X, k, arity)
            results.append(("P%d%d X%d = X%d P%d%d" % (i, j, k, k, i, j), P * Xk == Xk * P))
            results.append(("Q%d%d X%d = X%d Q%d%d" % (i, j, k, k, i, j), Q * Xk == Xk * Q))
    return results


def verify_lambda_theta_rules(A):
    """The three Lambda/Theta identities for a single-slot A with a_ij(u) = a_{-i,-j}(-u)."""
    ring = A.ring
    for ((i, j),), v in A.terms.items():
        other = A.component(((-i, -j),))
        if not (v.substitute_neg() - other).is_zero():
            raise ValueError("matrix does not satisfy a_ij(u) = a_{-i,-j}(-u)")
    n = len(A.indices) // 2
    L = build_operator("Lambda", n, (1, 2), 2, ring)
    T = build_operator("Theta", n, (1, 2), 2, ring)
    A1, A2 = embed(A, 1, 2), embed(A, 2, 2)
    A1neg = embed(A.map(lambda s: s.substitute_neg()), 1, 2)
    tA2 = tau_on_factor(A2, 2)
    st = supertrace(A)
    res = [
        ("(Lambda x 1) tau2(A2) = (Lambda x 1) A1", L * tA2 == L * A1),
        ("tau2(A2) (Theta x 1) = A1(-u) (Theta x 1)", tA2 * T == A1neg * T),
        ("(Lambda x 1) A1 (Lambda x 1) = Lambda str(A)",
         L * A1 * L == L.map(lambda c: ring.mul(c, st))),
    ]
    return res


__all__ = [
    "SuperTensor", "FracUV", "SeriesRing", "build_operator", "embed", "tau_on_factor",
    "supertrace", "verify_pq_identities", "verify_operator_facts", "verify_pq_transform",
    "verify_lambda_theta_rules", "yq_tensor", "index_set", "pq_identity_list",
]
