"""Exact scalars, parity bookkeeping and the free superalgebra on t-generators.

Generators t_{ij}^{(r)} with col j > 0 are packed into plain ints so that
integer order coincides with the monomial order (row position in
1, -1, 2, -2, ..., then col, then level).  A monomial is a tuple of such
ints and a polynomial is a dict mapping monomials to rationals.
"""

from itertools import product as _iproduct
from typing import NamedTuple

from gmpy2 import mpq

Scalar = mpq

ONE = mpq(1)
ZERO = mpq(0)

_LEVEL_BITS = 64
_COL_BITS = 64


def scalar(value, den=1):
    """Coerce ints, Fractions, strings like '3/4' and mpq into a Scalar."""
    if isinstance(value, str):
        return mpq(value)
    if den != 1:
        return mpq(value, den)
    return mpq(value)


def parity_of_index(i):
    return 1 if i < 0 else 0


def koszul_sign(left_parities, right_parities):
    """Sign picked up when the block `right` moves left past the block `left`."""
    total = sum(left_parities) * sum(right_parities)
    return -ONE if total % 2 else ONE


def permutation_super_sign(parities, perm):
    """Sign of reordering homogeneous factors by `perm` (new position -> old)."""
    sign = 0
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign += parities[perm[a]] * parities[perm[b]]
    return -ONE if sign % 2 else ONE


def row_position(row):
    return 2 * (row - 1) if row > 0 else 2 * (-row - 1) + 1


def row_from_position(pos):
    return pos // 2 + 1 if pos % 2 == 0 else -(pos // 2 + 1)


class GenSymbol(NamedTuple):
    row: int
    col: int
    level: int

    @property
    def parity(self):
        return 1 if self.row < 0 else 0

    @property
    def degree(self):
        return self.level

    def code(self):
        return encode(self.row, self.col, self.level)

    def __str__(self):
        return "t[%d,%d,%d]" % (self.row, self.col, self.level)


def encode(row, col, level):
    if col <= 0 or level < 1 or row == 0:
        raise ValueError("not a canonical generator: (%r, %r, %r)" % (row, col, level))
    if col > _COL_BITS or level > _LEVEL_BITS:
        raise ValueError("generator index out of supported range")
    return (row_position(row) * _COL_BITS + col - 1) * _LEVEL_BITS + level - 1


def decode(code):
    rest, lev = divmod(code, _LEVEL_BITS)
    pos, col = divmod(rest, _COL_BITS)
    return GenSymbol(row_from_position(pos), col + 1, lev + 1)


def gen_parity(code):
    return (code // (_LEVEL_BITS * _COL_BITS)) & 1


def gen_level(code):
    return code % _LEVEL_BITS + 1


def gen_max_index(code):
    g = decode(code)
    return max(abs(g.row), g.col)


def mono_degree(mono):
    return sum(c % _LEVEL_BITS + 1 for c in mono)


def mono_parity(mono):
    return sum(gen_parity(c) for c in mono) & 1


def mono_loop_degree(mono):
    """Degree in the second filtration: each t^{(r)} counts r - 1."""
    return sum(c % _LEVEL_BITS for c in mono)


# ---------------------------------------------------------------- dict level

def padd(acc, other, coeff=ONE):
    """acc += coeff * other, in place, dropping zeros."""
    for m, c in other.items():
        v = acc.get(m, ZERO) + coeff * c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)
    return acc


def pscale(p, coeff):
    if not coeff:
        return {}
    return {m: c * coeff for m, c in p.items()}


def pfree_mul(a, b, trunc=None):
    out = {}
    for ma, ca in a.items():
        da = mono_degree(ma) if trunc is not None else 0
        for mb, cb in b.items():
            if trunc is not None and da + mono_degree(mb) > trunc:
                continue
            m = ma + mb
            v = out.get(m, ZERO) + ca * cb
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def pparity(p):
    """Parity of a homogeneous dict polynomial; None for zero, error if mixed."""
    par = None
    for m in p:
        q = mono_parity(m)
        if par is None:
            par = q
        elif par != q:
            raise ValueError("polynomial is not parity-homogeneous")
    return par


def psplit_parity(p):
    even, odd = {}, {}
    for m, c in p.items():
        (odd if mono_parity(m) else even)[m] = c
    return even, odd


def coeff_text(c):
    c = mpq(c)
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def mono_text(mono):
    return " ".join(str(decode(c)) for c in mono)


def poly_text(p):
    if not p:
        return "0"
    parts = []
    for m in sorted(p, key=lambda m: (len(m), m)):
        c = p[m]
        if m:
            parts.append("%s * %s" % (coeff_text(c), mono_text(m)))
        else:
            parts.append(coeff_text(c))
    return " + ".join(parts)


# ----------------------------------------------------------------- SuperPoly

class SuperPoly:
    """Finite rational combination of words in canonical generators."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            raise TypeError("SuperPoly expects a dict of monomial -> coefficient")
        self.terms = {tuple(m): mpq(c) for m, c in terms.items() if c}

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def one(cls):
        return cls._raw({(): ONE})

    @classmethod
    def const(cls, c):
        c = mpq(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def gen(cls, row, col, level, coeff=1):
        if level == 0:
            return cls.const(coeff if row == col else 0)
        return cls._raw({(encode(row, col, level),): mpq(coeff)})

    @classmethod
    def word(cls, symbols, coeff=1):
        return cls._raw({tuple(encode(*s) for s in symbols): mpq(coeff)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, SuperPoly):
            return self.terms == other.terms
        if isinstance(other, (int, mpq)) or hasattr(other, "denominator"):
            return self.terms == ({(): mpq(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _as_poly(other)
        return SuperPoly._raw(padd(dict(self.terms), other.terms))

    __radd__ = __add__

    def __neg__(self):
        return SuperPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        return SuperPoly._raw(padd(dict(self.terms), other.terms, -ONE))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, SuperPoly):
            return SuperPoly._raw(pfree_mul(self.terms, other.terms))
        return SuperPoly._raw(pscale(self.terms, mpq(other)))

    def __rmul__(self, other):
        return SuperPoly._raw(pscale(self.terms, mpq(other)))

    @property
    def parity(self):
        return pparity(self.terms)

    @property
    def degree(self):
        return max((mono_degree(m) for m in self.terms), default=-1)

    def monomials(self):
        return [tuple(decode(c) for c in m) for m in sorted(self.terms)]

    def coefficient(self, symbols):
        return self.terms.get(tuple(encode(*s) for s in symbols), ZERO)

    def truncate(self, trunc):
        return SuperPoly._raw({m: c for m, c in self.terms.items() if mono_degree(m) <= trunc})

    def text(self):
        return poly_text(self.terms)

    __str__ = text

    def __repr__(self):
        return "SuperPoly(%s)" % self.text()


def _as_poly(x):
    if isinstance(x, SuperPoly):
        return x
    return SuperPoly.const(x)


def multiply(a, b, trunc):
    """Concatenation product with words of filtration degree > trunc discarded."""
    if trunc < 0:
        raise ValueError("trunc must be non-negative")
    return SuperPoly._raw(pfree_mul(_as_poly(a).terms, _as_poly(b).terms, trunc))


def supercommutator(a, b, trunc):
    a, b = _as_poly(a), _as_poly(b)
    pa, pb = a.parity, b.parity
    if pa is None or pb is None:
        return SuperPoly()
    sign = -ONE if pa * pb else ONE
    out = pfree_mul(a.terms, b.terms, trunc)
    padd(out, pfree_mul(b.terms, a.terms, trunc), -sign)
    return SuperPoly._raw(out)


def all_generators(n, max_level):
    """Canonical generators of Y(q_n) with level <= max_level, in monomial order."""
    gens = []
    for row in range(1, n + 1):
        for r in (row, -row):
            for col in range(1, n + 1):
                for lev in range(1, max_level + 1):
                    gens.append(GenSymbol(r, col, lev))
    return sorted(gens, key=lambda g: g.code())


def brute_force_sign(parities_left, parities_right):
    """Oracle: count odd-odd transpositions moving `right` past `left` one by one."""
    seq = list(parities_left) + list(parities_right)
    k = len(parities_left)
    sign = 0
    for a, b in _iproduct(range(k), range(k, len(seq))):
        sign += seq[a] * seq[b]
    return -ONE if sign % 2 else ONE
