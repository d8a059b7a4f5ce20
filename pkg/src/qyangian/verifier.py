"""Evaluation of catalog relations against Gauss generators of Y(q_n)."""

import time
from itertools import product

from .catalog import catalog, catalog_by_id
from .expr import Evaluator, RelationDivisionError, Space, zero_test
from .gauss import BlockMatrix, YQMatrix, block_invert, gauss_decompose, numeric_T, symbolic_T
from .series import DivisionPreconditionError
from .superalgebra import decode
from .yangian import YangianContext, nf_mul, t_coeff

# Candidate meanings of h'_a(u) and hbar'_a(u), built from the entries of H_a(u)^{-1}:
# (entry, sign, argument negated).  The first one is the plain inverse-entry reading.
PRIME_BINDINGS = (
    (("a", 1, False), ("b", 1, False)),
    (("a", 1, False), ("b", -1, False)),
    (("a", 1, False), ("b", 1, True)),
    (("a", 1, False), ("b", -1, True)),
    (("a", 1, True), ("b", 1, False)),
    (("a", 1, True), ("b", -1, False)),
    (("a", 1, True), ("b", 1, True)),
    (("a", 1, True), ("b", -1, True)),
)
DEFAULT_BINDING = PRIME_BINDINGS[0]


class RelationPrecondition(ValueError):
    """A relation cannot be evaluated for the requested parameters."""


class Symbols:
    """Resolves series and block names against one set of Gauss data."""

    def __init__(self, gd, binding=DEFAULT_BINDING):
        self.gd = gd
        self.binding = binding
        self._blocks = {}
        self._T = None
        self._Tt = None
        self._psi = {}
        self._psi_inv = {}
        self._z = None

    # ------------------------------------------------------------ series
    def series(self, name, idx):
        gd = self.gd
        if name in ("h", "hb", "e", "eb", "f", "fb"):
            return getattr(gd, name)(*idx)
        if name in ("hp", "hbp"):
            entry, sign, neg = self.binding[0 if name == "hp" else 1]
            s = getattr(gd.H_inv(idx[0]), entry)
            if neg:
                s = s.substitute_neg()
            return s.scale(sign) if sign != 1 else s
        if name in ("ec", "ebc", "fc", "fbc"):
            s = getattr(gd, name[:-1])(*idx)
            return s._like({k: c for k, c in s.coeffs.items() if k != (1,)})
        if name == "z":
            from .center import z_of
            if self._z is None:
                self._z = z_of(self.T()).series
            return self._z
        if name in ("Ea", "Eb"):
            blk = gd.E_block(*idx)
            return blk.a if name == "Ea" else blk.b
        raise KeyError("unknown series %r" % name)

    # ------------------------------------------------------------ blocks
    def block(self, name, idx):
        key = (name, idx)
        if key not in self._blocks:
            self._blocks[key] = self._block(name, idx)
        return self._blocks[key]

    def _block(self, name, idx):
        gd = self.gd
        if name == "H":
            return gd.H_block(*idx)
        if name == "Ht":
            return gd.H_inv(*idx)
        if name == "E":
            return gd.E_block(*idx)
        if name == "F":
            return gd.F_block(*idx)
        if name == "T":
            return self.T().block(*idx)
        if name == "Tt":
            return self.T_inverse().block(*idx)
        if name == "calE":
            a = idx[0]
            return gd.E_block(a, a + 2) - gd.E_block(a, a + 1) * gd.E_block(a + 1, a + 2)
        if name == "psiT":
            m, b, c = idx
            return self.psi(m).block(b, c)
        if name == "psiTt":
            m, b, c = idx
            if m not in self._psi_inv:
                self._psi_inv[m] = block_invert(self.psi(m))
            return self._psi_inv[m].block(b, c)
        raise KeyError("unknown block %r" % name)

    def T(self):
        if self._T is None:
            self._T = self.gd.reconstruct()
        return self._T

    def T_inverse(self):
        if self._Tt is None:
            self._Tt = block_invert(self.T())
        return self._Tt

    def psi(self, m):
        if m not in self._psi:
            self._psi[m] = psi_matrix(self.gd, m)
        return self._psi[m]


def psi_matrix(gd, m):
    """F^[m] H^[m] E^[m] from the lower-right Gauss factors, as a (n-m) x (n-m) block matrix."""
    k = gd.n - m
    if m < 0 or k < 1:
        raise RelationPrecondition("embedding needs 0 <= m < n")
    blocks = {}
    for b, c in product(range(1, k + 1), repeat=2):
        acc = None
        for p in range(1, min(b, c) + 1):
            term = gd.F_block(m + b, m + p) * gd.H_block(m + p) * gd.E_block(m + p, m + c)
            acc = term if acc is None else acc + term
        blocks[(b, c)] = acc
    return BlockMatrix(k, blocks, gd.ring, gd.order)


# ------------------------------------------------------------- data cache

_GAUSS = {}


def gauss_data(n, L, numeric=False):
    key = (n, L, numeric)
    if key not in _GAUSS:
        ctx = YangianContext(n, L)
        T = numeric_T(ctx) if numeric else symbolic_T(ctx)
        _GAUSS[key] = gauss_decompose(T)
    return _GAUSS[key]


# ------------------------------------------------------------------ results

class VerifyResult:
    __slots__ = ("id", "n", "order", "status", "max_degree", "witness", "seconds", "instances",
                 "variant", "numeric", "failures")

    def __init__(self, id, n, order, status, max_degree=None, witness=None, seconds=0.0,
                 instances=0, variant=None, numeric=False, failures=()):
        self.id = id
        self.n = n
        self.order = order
        self.status = status
        self.max_degree = max_degree
        self.witness = witness
        self.seconds = seconds
        self.instances = instances
        self.variant = variant
        self.numeric = numeric
        self.failures = list(failures)

    @property
    def passed(self):
        return self.status == "pass"

    def as_dict(self):
        return {
            "id": self.id, "n": self.n, "order": self.order, "status": self.status,
            "max_degree": self.max_degree, "witness": self.witness, "instances": self.instances,
            "variant": self.variant, "route": "numeric" if self.numeric else "symbolic",
            "failures": [list(map(str, f)) for f in self.failures],
        }

    def __repr__(self):
        tag = self.id + ("[%s]" % self.variant if self.variant else "")
        return "VerifyResult(%s, n=%d, L=%d, %s, degree=%s)" % (
            tag, self.n, self.order, self.status, self.max_degree)


def _spec(spec):
    if isinstance(spec, str):
        return catalog_by_id()[spec]
    return spec


def verify(spec, n, L, variant=None, numeric=False, binding=DEFAULT_BINDING, instances=None,
           gd=None):
    """Check every instance of a relation; status is pass, fail or precondition."""
    spec = _spec(spec)
    if n < spec.min_n:
        raise RelationPrecondition("%s needs n >= %d" % (spec.id, spec.min_n))
    build = spec.build if variant is None else spec.variants[variant]
    start = time.perf_counter()
    if gd is None:
        gd = gauss_data(n, L, numeric)
    symbols = Symbols(gd, binding)
    items = spec.instances(n) if instances is None else list(instances)
    status, degree, witness, failures = "pass", None, None, []
    evaluators = {}
    for params in items:
        space_key = (spec.nvars, spec.arity)
        if space_key not in evaluators:
            evaluators[space_key] = Evaluator(Space(spec.nvars, spec.arity, L, gd.ring), symbols)
        ev = evaluators[space_key]
        for k, (lhs, rhs) in enumerate(build(**params)):
            try:
                diff = ev.value(lhs - rhs)
            except (RelationDivisionError, DivisionPreconditionError) as exc:
                failures.append((params, k, "precondition: %s" % exc))
                status = "precondition" if status == "pass" else status
                witness = witness or str(exc)
                continue
            ok, checked, wit = zero_test(diff)
            if checked is not None:
                degree = checked if degree is None else min(degree, checked)
            if not ok:
                status = "fail"
                failures.append((params, k, wit))
                if witness is None:
                    witness = "%s part %d: %s" % (_fmt(params), k, wit)
    seconds = time.perf_counter() - start
    return VerifyResult(spec.id, n, L, status, degree, witness, seconds, len(items), variant,
                        numeric, failures)


def _fmt(params):
    return ",".join("%s=%s" % kv for kv in sorted(params.items()))


def verify_numeric(spec, n, L, **kw):
    """Same check with every series replaced by its image in the defining representation."""
    return verify(spec, n, L, numeric=True, **kw)


def resolve_prime_binding(n=2, L=4):
    """First candidate meaning of h', hbar' under which the e/f bracket relation holds."""
    results = []
    for binding in PRIME_BINDINGS:
        res = verify("eq:Dr:eafa", n, L, binding=binding)
        results.append((binding, res.status))
        if res.passed:
            return binding, results
    return None, results


# --------------------------------------------------------- embedding checks

def psi_embedding(m, n, L, numeric=False):
    """psi_m(T(u)) of Y(q_n) inside Y(q_{m+n}), as a block matrix."""
    if m < 1 or n < 1:
        raise RelationPrecondition("embedding needs m, n >= 1")
    return psi_matrix(gauss_data(m + n, L, numeric), m)


def _image_of_generator(images, code):
    i, j, r = decode(code)
    blk = images.block(abs(i), abs(j))
    series = blk.entry(1 if i > 0 else -1, 1 if j > 0 else -1)
    return series.coefficient((r,))


def substitute_generators(p, images):
    """Apply the homomorphism t_ij^(r) -> coefficient of images_ij(u) at u^{-r}."""
    out = {}
    for word, c in p.items():
        acc = {(): c}
        for code in word:
            acc = nf_mul(acc, _image_of_generator(images, code))
            if not acc:
                break
        for mono, v in acc.items():
            s = out.get(mono, 0) + v
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
    return out


def psi_composition_check(m, n, L):
    """psi_m o psi_1 equals psi_{m+1} on all generators of Y(q_n) up to level L."""
    inner = psi_embedding(1, n, L)
    outer = psi_embedding(m, n + 1, L)
    direct = psi_embedding(m + 1, n, L)
    bad = []
    for a, b in product(range(1, n + 1), repeat=2):
        for i, j in ((a, b), (-a, b)):
            composed = inner.block(a, b).entry(1 if i > 0 else -1, 1)
            want = direct.block(a, b).entry(1 if i > 0 else -1, 1)
            for r in range(1, L + 1):
                got = substitute_generators(composed.coefficient((r,)), outer)
                if got != want.coefficient((r,)):
                    bad.append((i, j, r))
    return bad


def psi_generator_images(m, n, L):
    """{(i, j, r): polynomial} images of t_ij^(r) of Y(q_n) under psi_m."""
    M = psi_embedding(m, n, L)
    out = {}
    for a, b in product(range(1, n + 1), repeat=2):
        for i in (a, -a):
            series = M.block(a, b).entry(1 if i > 0 else -1, 1)
            for r in range(1, L + 1):
                out[(i, b, r)] = series.coefficient((r,))
    return out


def verify_psi_identities(m, n, L, variant=None):
    """Both displayed commutator identities for psi_m, over all admissible indices."""
    if m < 1 or n < 1:
        raise RelationPrecondition("embedding needs m, n >= 1")
    gd = gauss_data(m + n, L)
    out = []
    for rid in ("eq:qnpsi1", "eq:qnpsi2"):
        spec = catalog_by_id()[rid]
        items = [{"m": m, "a": a, "b": b, "c": c}
                 for a in range(m + 1, m + n + 1) for b in range(1, n + 1) for c in range(1, n + 1)]
        v = variant if variant in spec.variants else None
        out.append(verify(spec, m + n, L, variant=v, instances=items, gd=gd))
    return out


def check_psi_instance(m, a, b, c, L):
    """Single instance of the first identity; requires m < a."""
    if a <= m:
        raise RelationPrecondition("the identity needs m < a")
    return verify("eq:qnpsi1", max(a, m + max(b, c)), L, instances=[{"m": m, "a": a, "b": b, "c": c}])


# -------------------------------------------------------------- extraction

def serresim_extraction(a, b, L):
    """Coefficient of u^{-1} in each term of the trivariate Serre identity equals the
    corresponding term of the simplified identity (first argument renamed).

    Returns (agrees, number of nonzero tensor entries compared)."""
    from .catalog import E, P12, Q12, br, dm, dp, u, v, w
    from .expr import Space as _Space

    gd = gauss_data(3, L)
    symbols = Symbols(gd)
    big = Evaluator(_Space(3, 3, L, gd.ring), symbols)
    small = Evaluator(_Space(2, 3, L, gd.ring), symbols)

    def Ea(k, slot, x):
        return E(k, k + 1, slot, x)

    terms3 = [
        dm(P12 * br(Ea(a, 1, u) - Ea(a, 1, v), br(Ea(a, 2, u) - Ea(a, 2, v), Ea(b, 3, w)))),
        dp(Q12 * br(Ea(a, 1, u) - Ea(a, 1, -v), br(Ea(a, 2, -u) - Ea(a, 2, v), Ea(b, 3, w)))),
    ]
    terms2 = [
        P12 * br(Ea(a, 1, u), br(Ea(a, 2, u), Ea(b, 3, v))),
        Q12 * br(Ea(a, 1, -u), br(Ea(a, 2, u), Ea(b, 3, v))),
    ]
    ok = True
    nonzero = 0
    for t3, t2 in zip(terms3, terms2):
        t3v = _pure_part(big.value(t3))
        t2v = _pure_part(small.value(t2))
        extracted = t3v.map(lambda s: _coefficient_in_first(s, 1), ring=small.space.ring)
        nonzero += len(t2v.terms)
        diff = extracted - t2v
        for s in diff.terms.values():
            if any(sum(e) <= L - 1 for e in s.coeffs):
                ok = False
    return ok, nonzero


def _pure_part(val):
    from .tensor import SuperTensor
    if any(k != val.space.zero_key for k in val.orders):
        raise ValueError("expected a value without formal denominators")
    t = val.parts.get(val.space.zero_key)
    if t is None:
        return SuperTensor((1, -1), val.space.arity, val.space.ring, {})
    return t


def _coefficient_in_first(s, power):
    """Coefficient of x_0^power of a trivariate series, as a bivariate series."""
    from .series import Series
    out = {}
    for e, c in s.coeffs.items():
        if e[0] == power:
            out[e[1:]] = c
    return Series._raw(s.ring, s.nvars - 1, s.order - power, out, s.parity)


# --------------------------------------------------------------- mutation

def mutated_eafa_check(n=2, L=4):
    """The e/f bracket relation with one sign flipped must fail with a witness."""
    from .catalog import RelationSpec, br, dm, dp, e, f, h, hb, hbp, hp, u, v

    def build(a):
        return [(br(e(a, u), f(a, v)),
                 dm(hp(a, u) * h(a + 1, u) - h(a + 1, v) * hp(a, v))
                 - dp(hbp(a, -u) * hb(a + 1, u) + hb(a + 1, -v) * hbp(a, v)))]

    spec = RelationSpec("eq:Dr:eafa", "drinfeld", 2, 0, 2, lambda n: ({"a": a} for a in range(1, n)),
                        build)
    return verify(spec, n, L)


def verify_suite(suite, n, L, numeric=False):
    out = []
    for spec in catalog():
        if spec.suite != suite or n < spec.min_n:
            continue
        out.append(verify(spec, n, L, numeric=numeric))
        for name in spec.variants:
            out.append(verify(spec, n, L, variant=name, numeric=numeric))
    return out


__all__ = [
    "Symbols", "VerifyResult", "RelationPrecondition", "verify", "verify_numeric", "gauss_data",
    "psi_matrix", "psi_embedding", "psi_composition_check", "psi_generator_images",
    "verify_psi_identities", "check_psi_instance", "serresim_extraction", "mutated_eafa_check",
    "resolve_prime_binding", "verify_suite", "PRIME_BINDINGS", "DEFAULT_BINDING",
]
