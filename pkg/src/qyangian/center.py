"""The central series z(u): supertrace and Gauss-product routes, centrality,
the evaluation formula and the Berezinian cross-check.

Both routes work over any coefficient ring, so the same code gives the
symbolic series over Y(q_n) and its image in the defining representation.
"""

import time
from functools import lru_cache

from gmpy2 import mpq

from .gauss import BlockMatrix, block_invert, gauss_decompose, numeric_T, symbolic_T
from .rings import MatrixRing
from .series import Series
from .superalgebra import ONE, ZERO, mono_degree
from .yangian import YangianContext, ev_poly, nf_mul, t_coeff


def _par(i):
    return 1 if i < 0 else 0


def _labels(n):
    return tuple(x for a in range(1, n + 1) for x in (a, -a))


def str_times_derivative(M, Minv):
    """str(M(u) dMinv(u)/du) over the full 2n x 2n matrix."""
    ring, order = M.ring, M.order
    labels = _labels(M.n)
    total = Series.zero(ring, 1, order, 0)
    deriv = {}
    for i in labels:
        for j in labels:
            x = M.entry(i, j)
            if x.is_zero():
                continue
            if (j, i) not in deriv:
                deriv[(j, i)] = Minv.entry(j, i).derivative()
            term = x * deriv[(j, i)]
            # matrix-unit sign for an odd entry times an odd entry, then the supertrace sign
            if (_par(i) ^ _par(j)) ^ _par(i):
                total = total - term
            else:
                total = total + term
    return total.with_parity(0)


class CentralSeries:
    """z(u) = 1 + sum z_r u^{-r}, stored as a univariate series."""

    def __init__(self, series):
        self.series = series

    @property
    def ring(self):
        return self.series.ring

    @property
    def order(self):
        return self.series.order

    def coefficient(self, r):
        return self.series.coefficient((r,))

    def odd_coefficients(self):
        return {r: c for (r,), c in self.series.coeffs.items() if r % 2}

    def is_even(self):
        return not self.odd_coefficients()

    def __eq__(self, other):
        return (self.series - other.series).is_zero()

    def text(self):
        return self.series.text()

    def as_dict(self):
        return {str(r): self.ring.text(self.coefficient(r)) for r in range(self.order + 1)
                if not self.ring.is_zero(self.coefficient(r))}


def z_of(T):
    """1 - str(T dT~) for a block matrix T = 1 + O(u^{-1})."""
    one = Series.one(T.ring, 1, T.order)
    return CentralSeries(one - str_times_derivative(T, block_invert(T)))


def z_factors(gd):
    """Per-block factors 1 - str(H_a dH~_a)."""
    out = []
    for a in range(1, gd.n + 1):
        H = BlockMatrix(1, {(1, 1): gd.H_block(a)}, gd.ring, gd.order)
        Hinv = BlockMatrix(1, {(1, 1): gd.H_inv(a)}, gd.ring, gd.order)
        out.append(Series.one(gd.ring, 1, gd.order) - str_times_derivative(H, Hinv))
    return out


def z_product_of(gd, reverse=False):
    factors = z_factors(gd)
    if reverse:
        factors = factors[::-1]
    acc = factors[0]
    for f in factors[1:]:
        acc = acc * f
    return CentralSeries(acc.with_parity(0))


@lru_cache(maxsize=None)
def _context(n, L):
    return YangianContext(n, L)


@lru_cache(maxsize=None)
def _gauss(n, L):
    return gauss_decompose(symbolic_T(_context(n, L)))


def z_from_supertrace(n, L):
    if L < 2:
        raise ValueError("order must be at least 2")
    return _z_supertrace(n, L)


@lru_cache(maxsize=None)
def _z_supertrace(n, L):
    return z_of(symbolic_T(_context(n, L)))


def z_from_product(n, L, reverse=False):
    if L < 2:
        raise ValueError("order must be at least 2")
    return z_product_of(_gauss(n, L), reverse)


def _commutator(a, b):
    out = dict(nf_mul(a, b))
    for m, c in nf_mul(b, a).items():
        v = out.get(m, ZERO) - c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def centrality_check(n, bound, z=None):
    """[z_r, t_ij^(s)] for every canonical generator and r + s <= bound.

    Returns {(r, s): number of generators whose commutator is nonzero}.
    """
    z = z_from_supertrace(n, bound) if z is None else z
    table = {}
    labels = _labels(n)
    for r in range(1, bound):
        zr = z.coefficient(r)
        for s in range(1, bound - r + 1):
            bad = 0
            for i in labels:
                for j in range(1, n + 1):
                    if _commutator(zr, t_coeff(i, j, s)):
                        bad += 1
            table[(r, s)] = bad
    return table


def factor_checks(gd):
    """Each factor is even and its coefficients commute with its own H_a block."""
    out = []
    L = gd.order
    for a, f in enumerate(z_factors(gd), 1):
        even = not any(r % 2 for (r,) in f.coeffs)
        commute = True
        blk = gd.H_block(a)
        for r in range(1, L):
            for s in range(1, L - r + 1):
                for g in (blk.a.coefficient((s,)), blk.b.coefficient((s,))):
                    if _commutator(f.coefficient((r,)), g):
                        commute = False
        out.append({"block": a, "even": even, "commutes_with_block": commute})
    return out


def verify_lambda_defining(n, L):
    """The Lambda identity for T and its inverse, whole and blockwise."""
    from .verifier import verify
    return [verify("eq:ct:TT", n, L), verify("eq:ct:blcTT", n, L)]


# ------------------------------------------------------------ evaluation formula

def _g_matrix(n):
    """G = sum (-1)^{|j|} E_ij (x) g_ji with g_ji acting as E_ji + E_{-j,-i}."""
    G = {}
    for i in _labels(n):
        for j in _labels(n):
            img = {}
            for key in ((j, i), (-j, -i)):
                img[key] = img.get(key, ZERO) + ONE
            img = {k: (-v if _par(j) else v) for k, v in img.items() if v}
            if img:
                G[(i, j)] = img
    return G


def _g_mul(ring, X, Y):
    out = {}
    for (i, j), a in X.items():
        for (k, l), b in Y.items():
            if j != k:
                continue
            prod = ring.mul(a, b)
            if (_par(i) ^ _par(j)) and (_par(j) ^ _par(l)):
                prod = ring.neg(prod)
            out[(i, l)] = ring.add(out.get((i, l), {}), prod)
    return {k: v for k, v in out.items() if v}


def _partial_str(ring, X):
    acc = {}
    for (i, j), a in X.items():
        if i == j:
            acc = ring.add(acc, ring.neg(a) if _par(i) else a)
    return acc


def ev_trace_formula(n, K):
    """Compare ev(z(u)) with the trace-of-powers formula, coefficient by coefficient.

    ev(z) comes from the supertrace route applied to ev(T(u)) = 1 - G u^{-1}.
    Two indexings of the formula are reported: str G^{k+1} u^{-k-1} ("printed")
    and str G^k u^{-k-1} ("shifted").  Returns a dict with both match flags.
    """
    if K < 1:
        raise ValueError("K must be positive")
    L = K + 1
    ring = MatrixRing(n)
    z = z_of(numeric_T(_context(n, L), L))
    G = _g_matrix(n)
    powers = {1: G}
    for m in range(2, K + 2):
        powers[m] = _g_mul(ring, powers[m - 1], G)
    traces = {m: _partial_str(ring, P) for m, P in powers.items()}
    printed = {0: ring.one()}
    shifted = {0: ring.one()}
    for k in range(1, K + 1):
        printed[k + 1] = traces[k + 1]
        shifted[k + 1] = traces[k]
    got = {r: z.coefficient(r) for r in range(L + 1)}

    def match(formula):
        return all(not ring.add(got[r], ring.neg(formula.get(r, {}))) for r in range(L + 1))

    return {"n": n, "K": K, "printed": match(printed), "shifted": match(shifted),
            "ev_z": {r: ring.text(c) for r, c in got.items() if c}}


def ev_symbolic_agreement(n, L):
    """ev applied to the symbolic z equals z computed from ev(T)."""
    ring = MatrixRing(n)
    z = z_from_supertrace(n, L)
    zn = z_of(numeric_T(_context(n, L), L))
    return all(not ring.add(ev_poly(z.coefficient(r), n), ring.neg(zn.coefficient(r)))
               for r in range(L + 1))


# ------------------------------------------------------------ Berezinian

def berezinian_check(n, L, numeric=False):
    """z_a(u) = C_a(u)C_a(-u) - D_a(u)D_a(-u) with C_a(u) = h_a(u) h~_a(-u).

    h~_a is the (1,1) entry of H_a(u)^{-1}; D_a is solved from
    C_a(u) - C_a(-u) = 4u D_a(u).
    """
    if L < 2:
        raise ValueError("order must be at least 2")
    if numeric:
        gd = gauss_decompose(numeric_T(_context(n, L), L))
    else:
        gd = _gauss(n, L)
    ring = gd.ring
    x = Series.monomial(ring, (1,), L)
    out = []
    for a, za in enumerate(z_factors(gd), 1):
        C = gd.H_block(a).a * gd.H_inv(a).a.substitute_neg()
        D = (x * (C - C.substitute_neg())).scale(mpq(1, 4))
        rhs = C * C.substitute_neg() - D * D.substitute_neg()
        out.append({"block": a, "ok": (za - rhs).is_zero(),
                    "D_constant_zero": ring.is_zero(D.coefficient((0,)))})
    return out


# ------------------------------------------------------------ full report

def center_report(n, L):
    start = time.perf_counter()
    zs = z_from_supertrace(n, L)
    zp = z_from_product(n, L)
    report = {
        "n": n, "order": L,
        "z": zs.as_dict(),
        "routes_equal": zs == zp,
        "product_order_irrelevant": zp == z_from_product(n, L, reverse=True),
        "even": zs.is_even(),
        "factors": factor_checks(_gauss(n, L)),
        "centrality": {"%d,%d" % k: v for k, v in sorted(centrality_check(n, L, zs).items())},
    }
    report["seconds"] = time.perf_counter() - start
    return report


def filtration_bounded(z):
    """Every coefficient z_r has filtration degree at most r."""
    return all(mono_degree(m) <= r for (r,), c in z.series.coeffs.items() for m in c)


__all__ = [
    "CentralSeries", "z_of", "z_from_supertrace", "z_from_product", "z_factors", "centrality_check",
    "factor_checks", "ev_trace_formula", "ev_symbolic_agreement", "berezinian_check",
    "center_report", "verify_lambda_defining", "str_times_derivative", "filtration_bounded",
]
