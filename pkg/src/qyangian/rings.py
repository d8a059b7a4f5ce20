"""Coefficient rings shared by series, tensors and the relation evaluator.

Every ring exposes the same small interface on plain Python values so that
one expression tree can be evaluated symbolically (normal-form products in
Y(q_n)), freely (concatenation) or numerically (matrices).
"""

from gmpy2 import mpq

from .superalgebra import ONE, ZERO, padd, pfree_mul, pscale, psplit_parity, poly_text


class Ring:
    """Base interface; subclasses override what differs."""

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_scalar(self, c):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        return self.scale(a, -ONE)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def scale(self, a, c):
        raise NotImplementedError

    def is_zero(self, a):
        raise NotImplementedError

    def split_parity(self, a):
        raise NotImplementedError

    def parity(self, a):
        even, odd = self.split_parity(a)
        if self.is_zero(odd):
            return 0 if not self.is_zero(even) else None
        if self.is_zero(even):
            return 1
        raise ValueError("element is not parity-homogeneous")

    def add_into(self, acc, a, c=ONE):
        """Return acc + c*a; rings with mutable values may update acc in place."""
        return self.add(acc, self.scale(a, c) if c != ONE else a)

    def scalar_value(self, a):
        """The rational c with a == c * 1, or None."""
        raise NotImplementedError

    def text(self, a):
        return str(a)


class ScalarRing(Ring):
    """The rationals, all elements even."""

    def zero(self):
        return ZERO

    def one(self):
        return ONE

    def from_scalar(self, c):
        return mpq(c)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def scale(self, a, c):
        return a * c

    def is_zero(self, a):
        return not a

    def split_parity(self, a):
        return a, ZERO

    def add_into(self, acc, a, c=ONE):
        return acc + c * a

    def scalar_value(self, a):
        return a


class PolyRingBase(Ring):
    """Dict polynomials; subclasses decide the product."""

    def zero(self):
        return {}

    def one(self):
        return {(): ONE}

    def from_scalar(self, c):
        c = mpq(c)
        return {(): c} if c else {}

    def add(self, a, b):
        return padd(dict(a), b)

    def neg(self, a):
        return {m: -c for m, c in a.items()}

    def sub(self, a, b):
        return padd(dict(a), b, -ONE)

    def scale(self, a, c):
        return pscale(a, mpq(c))

    def is_zero(self, a):
        return not a

    def split_parity(self, a):
        return psplit_parity(a)

    def add_into(self, acc, a, c=ONE):
        if acc is a:
            acc = dict(acc)
        return padd(acc, a, c)

    def scalar_value(self, a):
        if not a:
            return ZERO
        if len(a) == 1 and () in a:
            return a[()]
        return None

    def text(self, a):
        return poly_text(a)


class FreeRing(PolyRingBase):
    """Free superalgebra on canonical generators, optionally truncated."""

    def __init__(self, trunc=None):
        self.trunc = trunc

    def mul(self, a, b):
        return pfree_mul(a, b, self.trunc)


def matrix_index_parity(i):
    return 1 if i < 0 else 0


class MatrixRing(Ring):
    """Sparse exact matrices on C^{n|n} with rows/cols in 1,-1,...,n,-n.

    Parity of the unit E_ij is |i| + |j|.  Used as the numeric oracle target.
    """

    def __init__(self, n):
        self.n = n
        self.indices = tuple(x for a in range(1, n + 1) for x in (a, -a))

    def zero(self):
        return {}

    def one(self):
        return {(i, i): ONE for i in self.indices}

    def from_scalar(self, c):
        c = mpq(c)
        if not c:
            return {}
        return {(i, i): c for i in self.indices}

    def add(self, a, b):
        out = dict(a)
        for k, v in b.items():
            w = out.get(k, ZERO) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return out

    def neg(self, a):
        return {k: -v for k, v in a.items()}

    def scale(self, a, c):
        if not c:
            return {}
        return {k: v * c for k, v in a.items()}

    def mul(self, a, b):
        rows = {}
        for (i, j), v in b.items():
            rows.setdefault(i, []).append((j, v))
        out = {}
        for (i, k), v in a.items():
            for j, w in rows.get(k, ()):
                key = (i, j)
                s = out.get(key, ZERO) + v * w
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    def is_zero(self, a):
        return not a

    def split_parity(self, a):
        even, odd = {}, {}
        for (i, j), v in a.items():
            if matrix_index_parity(i) ^ matrix_index_parity(j):
                odd[(i, j)] = v
            else:
                even[(i, j)] = v
        return even, odd

    def scalar_value(self, a):
        if not a:
            return ZERO
        vals = {a.get((i, i)) for i in self.indices}
        if len(vals) == 1 and len(a) == len(self.indices):
            return vals.pop()
        return None

    def unit(self, i, j, c=ONE):
        return {(i, j): mpq(c)}

    def supertrace(self, a):
        return sum((v * (-1 if i < 0 else 1) for (i, j), v in a.items() if i == j), ZERO)

    def text(self, a):
        return "{" + ", ".join("(%d,%d): %s" % (i, j, v) for (i, j), v in sorted(a.items())) + "}"
