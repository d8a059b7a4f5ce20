"""Machine catalog of relations among Gauss generators and block series.

Each entry gives a relation id, the suite it belongs to, the number of
spectral variables, the tensor arity, the smallest admissible n, a generator
of index assignments for a given n, and a builder returning the list of
(lhs, rhs) pairs that must agree.  Chains A = B = C are split into adjacent
pairs.  Some entries carry alternative forms ("variants") that are checked and
reported next to the printed form.
"""

from itertools import product

from .expr import Blk, Op, Ser, Tau, U, V, W, br, dm, dp, lm, lp, times_var, u, v, w


class RelationSpec:
    """One relation family: instances over index tuples, each a list of (lhs, rhs) pairs.

    min_n is the smallest rank where the relation makes sense; fixed_n records
    the rank of the algebra the relation is stated in, when it is a fixed one.
    """

    __slots__ = ("id", "suite", "nvars", "arity", "min_n", "indices", "build", "variants",
                 "fixed_n", "note")

    def __init__(self, id, suite, nvars, arity, min_n, indices, build, variants=None,
                 fixed_n=None, note=""):
        self.id = id
        self.suite = suite
        self.nvars = nvars
        self.arity = arity
        self.min_n = min_n
        self.indices = indices
        self.build = build
        self.variants = dict(variants or {})
        self.fixed_n = fixed_n
        self.note = note

    def instances(self, n):
        return list(self.indices(n))

    def __repr__(self):
        return "RelationSpec(%s)" % self.id


# ------------------------------------------------------------ symbol helpers

def zc(x):
    return Ser("z", (), x)


def h(a, x):
    return Ser("h", (a,), x)


def hb(a, x):
    return Ser("hb", (a,), x)


def hp(a, x):
    return Ser("hp", (a,), x)


def hbp(a, x):
    return Ser("hbp", (a,), x)


def e(b, x):
    return Ser("e", (b,), x)


def eb(b, x):
    return Ser("eb", (b,), x)


def f(b, x):
    return Ser("f", (b,), x)


def fb(b, x):
    return Ser("fb", (b,), x)


def ec(b, x):
    return Ser("ec", (b,), x)


def ebc(b, x):
    return Ser("ebc", (b,), x)


def fc(b, x):
    return Ser("fc", (b,), x)


def fbc(b, x):
    return Ser("fbc", (b,), x)


def eE(a, b, x):
    return Ser("Ea", (a, b), x)


def ebE(a, b, x):
    return Ser("Eb", (a, b), x)


def H(a, slot, x):
    return Blk("H", (a,), slot, x)


def Ht(a, slot, x):
    return Blk("Ht", (a,), slot, x)


def E(a, b, slot, x):
    return Blk("E", (a, b), slot, x)


def F(b, a, slot, x):
    return Blk("F", (b, a), slot, x)


def T(a, b, slot, x):
    return Blk("T", (a, b), slot, x)


def Tt(a, b, slot, x):
    return Blk("Tt", (a, b), slot, x)


def calE(a, slot, x):
    return Blk("calE", (a,), slot, x)


def psiT(m, b, c, slot, x):
    return Blk("psiT", (m, b, c), slot, x)


def psiTt(m, b, c, slot, x):
    return Blk("psiTt", (m, b, c), slot, x)


P = Op("P")
Q = Op("Q")
K = Op("K")
Lam0 = Op("Lambda0")
P12 = Op("P", (1, 2), (U, V))
Q12 = Op("Q", (1, 2), (U, V))

ZERO = 0


def chain(*items):
    return [(items[k], items[k + 1]) for k in range(len(items) - 1)]


def zero_all(*items):
    return [(x, ZERO) for x in items]


# ------------------------------------------------------------- index ranges

def each_a(n):
    for a in range(1, n + 1):
        yield {"a": a}


def each_simple(n):
    for a in range(1, n):
        yield {"a": a}


def each_consecutive(n):
    for a in range(1, n - 1):
        yield {"a": a}


def pairs_distinct(n):
    for a, b in product(range(1, n + 1), repeat=2):
        if a != b:
            yield {"a": a, "b": b}


def h_apart_from_root(n):
    for a in range(1, n + 1):
        for b in range(1, n):
            if a not in (b, b + 1):
                yield {"a": a, "b": b}


def simple_distinct(n):
    for a, b in product(range(1, n), repeat=2):
        if a != b:
            yield {"a": a, "b": b}


def simple_far(n):
    for a, b in product(range(1, n), repeat=2):
        if abs(a - b) > 1:
            yield {"a": a, "b": b}


def simple_adjacent(n):
    for a, b in product(range(1, n), repeat=2):
        if abs(a - b) == 1:
            yield {"a": a, "b": b}


def single(**kw):
    def gen(n):
        yield dict(kw)
    return gen


def all_blocks4(n):
    for a, b, c, d in product(range(1, n + 1), repeat=4):
        yield {"a": a, "b": b, "c": c, "d": d}


# ------------------------------------------------------- Drinfeld relations

def _dr():
    R = []

    def rel(name, nvars, min_n, indices, build, variants=None, note=""):
        R.append(RelationSpec("eq:Dr:" + name, "serre" if "serre" in name else "drinfeld",
                              nvars, 0, min_n, indices, build, variants, note=note))

    rel("hahb", 2, 2, pairs_distinct, lambda a, b: zero_all(
        br(h(a, u), h(b, v)), br(h(a, u), hb(b, v)), br(hb(a, u), h(b, v)), br(hb(a, u), hb(b, v))))

    def haha(sign):
        def build(a):
            lhs = br(h(a, u), h(a, v))
            cleared = lp(lm(lhs) - lhs)
            num = hb(a, u) * hb(a, v) - hb(a, -v) * hb(a, -u)
            return [(cleared, sign * lm(num))]
        return build
    rel("haha", 2, 1, each_a, haha(1), {"opposite_sign": haha(-1)},
        note="both sides multiplied by (u+v)(u-v-1)")

    rel("hahta", 2, 1, each_a, lambda a: [(
        br(h(a, u), hb(a, v)),
        dm(hb(a, u) * h(a, v) - hb(a, v) * h(a, u)) + dp(h(a, u) * hb(a, v) - h(a, -v) * hb(a, -u)))])

    def htahta(sign):
        def build(a):
            return [(br(hb(a, u), hb(a, v)),
                     sign * dp(h(a, u) * h(a, v) - h(a, -v) * h(a, -u))
                     - dm(hb(a, u) * hb(a, v) - hb(a, v) * hb(a, u)))]
        return build
    rel("htahta", 2, 1, each_a, htahta(1), {"opposite_first_term": htahta(-1)})

    rel("haeb", 2, 3, h_apart_from_root, lambda a, b: zero_all(
        br(h(a, u), e(b, v)), br(h(a, u), eb(b, v)), br(hb(a, u), e(b, v)), br(hb(a, u), eb(b, v))))

    def haea(sign):
        def build(a):
            return chain(
                br(h(a, u), e(a, v)), br(hb(a, -u), eb(a, v)),
                h(a, u) * dm(e(a, v) - e(a, u)) + sign * hb(a, -u) * dm(eb(a, v) - eb(a, u)))
        return build
    rel("haea", 2, 2, each_simple, haea(1), {"opposite_hbar_term": haea(-1)})

    rel("haeta", 2, 2, each_simple, lambda a: chain(
        br(h(a, u), eb(a, v)), -br(hb(a, -u), e(a, v)),
        h(a, u) * dp(eb(a, v) - eb(a, -u)) + hb(a, -u) * dp(e(a, v) - e(a, -u))))

    rel("htaea", 2, 2, each_simple, lambda a: [(
        br(hb(a, u), e(a, v)),
        hb(a, u) * dm(e(a, v) - e(a, u)) + h(a, -u) * dm(eb(a, v) - eb(a, u)))])

    rel("ha1ea", 2, 2, each_simple, lambda a: [(
        br(h(a + 1, u), e(a, v)),
        h(a + 1, u) * dm(e(a, u) - e(a, v)) + hb(a + 1, -u) * dp(eb(a, u) - eb(a, -v)))])

    rel("ha1eta", 2, 2, each_simple, lambda a: [(
        br(h(a + 1, u), eb(a, v)),
        h(a + 1, u) * dm(eb(a, u) - eb(a, v)) + hb(a + 1, -u) * dp(e(a, u) - e(a, -v)))])

    rel("hta1ea", 2, 2, each_simple, lambda a: [(
        br(hb(a + 1, u), e(a, v)),
        hb(a + 1, u) * dm(e(a, u) - e(a, v)) - h(a + 1, -u) * dp(eb(a, u) - eb(a, -v)))])

    rel("hta1eta", 2, 2, each_simple, lambda a: [(
        br(hb(a + 1, u), eb(a, v)),
        hb(a + 1, u) * dm(eb(a, u) - eb(a, v)) - h(a + 1, -u) * dp(e(a, u) - e(a, -v)))])

    rel("hafb", 2, 3, h_apart_from_root, lambda a, b: zero_all(
        br(h(a, u), f(b, v)), br(h(a, u), fb(b, v)), br(hb(a, u), f(b, v)), br(hb(a, u), fb(b, v))))

    rel("hafa", 2, 2, each_simple, lambda a: chain(
        br(h(a, u), f(a, v)), -br(hb(a, u), fb(a, -v)),
        dm(f(a, u) - f(a, v)) * h(a, u) - dm(fb(a, -u) - fb(a, -v)) * hb(a, u)))

    rel("hafta", 2, 2, each_simple, lambda a: chain(
        br(h(a, u), fb(a, v)), -br(hb(a, u), f(a, -v)),
        dm(fb(a, u) - fb(a, v)) * h(a, u) + dm(f(a, -u) - f(a, -v)) * hb(a, u)))

    rel("ha1fa", 2, 2, each_simple, lambda a: [(
        br(h(a + 1, u), f(a, v)),
        dm(f(a, v) - f(a, u)) * h(a + 1, u) - dp(fb(a, -u) - fb(a, v)) * hb(a + 1, u))])

    def ha1fta(second):
        def build(a):
            first = f if second == "printed" else fb
            third = fb if second == "printed" else f
            return [(br(h(a + 1, u), fb(a, v)),
                     dm(first(a, v) - first(a, u)) * hb(a + 1, u)
                     - dp(third(a, -u) - third(a, v)) * h(a + 1, u))]
        return build
    rel("ha1fta", 2, 2, each_simple, ha1fta("printed"))

    rel("hta1fa", 2, 2, each_simple, lambda a: [(
        br(hb(a + 1, u), f(a, v)),
        dm(fb(a, v) - fb(a, u)) * h(a + 1, u) + dp(f(a, -u) - f(a, v)) * hb(a + 1, u))])

    rel("hta1fta", 2, 2, each_simple, lambda a: [(
        br(hb(a + 1, u), fb(a, v)),
        dm(fb(a, v) - fb(a, u)) * hb(a + 1, u) + dp(f(a, -u) - f(a, v)) * h(a + 1, u))])

    rel("eafb", 2, 3, simple_distinct, lambda a, b: zero_all(
        br(e(a, u), f(b, v)), br(e(a, u), fb(b, v)), br(eb(a, u), f(b, v)), br(eb(a, u), fb(b, v))))

    rel("eafa", 2, 2, each_simple, lambda a: [(
        br(e(a, u), f(a, v)),
        dm(hp(a, u) * h(a + 1, u) - h(a + 1, v) * hp(a, v))
        + dp(hbp(a, -u) * hb(a + 1, u) + hb(a + 1, -v) * hbp(a, v)))])

    rel("eafta", 2, 2, each_simple, lambda a: [(
        br(e(a, u), fb(a, v)),
        dm(hp(a, u) * hb(a + 1, u) - hb(a + 1, v) * hp(a, v))
        + dp(hbp(a, -u) * h(a + 1, u) - h(a + 1, -v) * hbp(a, v)))])

    rel("etafa", 2, 2, each_simple, lambda a: [(
        br(eb(a, u), f(a, v)),
        dm(hbp(a, u) * h(a + 1, u) - h(a + 1, v) * hbp(a, v))
        - dp(hp(a, -u) * hb(a + 1, u) - hb(a + 1, -v) * hp(a, v)))])

    rel("etafta", 2, 2, each_simple, lambda a: [(
        br(eb(a, u), fb(a, v)),
        dm(hbp(a, u) * hb(a + 1, u) + hb(a + 1, v) * hbp(a, v))
        - dp(hp(a, -u) * h(a + 1, u) - h(a + 1, -v) * hp(a, v)))])

    rel("eaeb", 2, 4, simple_far, lambda a, b: zero_all(
        br(e(a, u), e(b, v)), br(e(a, u), eb(b, v)), br(eb(a, u), e(b, v)), br(eb(a, u), eb(b, v))))

    rel("eaea", 2, 2, each_simple, lambda a: [(
        br(e(a, u), e(a, v)),
        dm((e(a, v) - e(a, u)) * (e(a, v) - e(a, u)))
        - dp((eb(a, -v) - eb(a, u)) * (eb(a, v) - eb(a, -u))))])

    rel("eaeta", 2, 2, each_simple, lambda a: [(
        br(e(a, u), eb(a, v)),
        dm((e(a, u) - e(a, v)) * (eb(a, u) - eb(a, v)))
        + dp((eb(a, -u) - eb(a, v)) * (e(a, u) - e(a, -v))))])

    rel("etaeta", 2, 2, each_simple, lambda a: [(
        br(eb(a, u), eb(a, v)),
        -dm((eb(a, v) - eb(a, u)) * (eb(a, v) - eb(a, u)))
        - dp((e(a, -v) - e(a, u)) * (e(a, v) - e(a, -u))))])

    rel("eaea1", 2, 3, each_consecutive, lambda a: [(
        br(e(a, u), e(a + 1, v)), br(eb(a, -u), eb(a + 1, v)))])

    rel("eaeta1", 2, 3, each_consecutive, lambda a: [(
        br(e(a, u), eb(a + 1, v)), -br(eb(a, -u), e(a + 1, v)))])

    rel("ecircle", 2, 3, each_consecutive, lambda a: [(
        times_var(br(ec(a, u), e(a + 1, v)), U) - times_var(br(e(a, u), ec(a + 1, v)), V),
        e(a, u) * e(a + 1, v) - eb(a, -u) * eb(a + 1, v))])

    rel("etcircle", 2, 3, each_consecutive, lambda a: [(
        times_var(br(ebc(a, u), e(a + 1, v)), U) - times_var(br(eb(a, u), ec(a + 1, v)), V),
        eb(a, u) * e(a + 1, v) + e(a, -u) * eb(a + 1, v))])

    rel("fafb", 2, 4, simple_far, lambda a, b: zero_all(
        br(f(a, u), f(b, v)), br(f(a, u), fb(b, v)), br(fb(a, u), f(b, v)), br(fb(a, u), fb(b, v))))

    rel("fafa", 2, 2, each_simple, lambda a: [(
        br(f(a, u), f(a, v)),
        -dm((f(a, v) - f(a, u)) * (f(a, v) - f(a, u)))
        + dp((fb(a, -v) - fb(a, u)) * (fb(a, v) - fb(a, -u))))])

    rel("fafta", 2, 2, each_simple, lambda a: [(
        br(f(a, u), fb(a, v)),
        -dp((fb(a, -u) - fb(a, v)) * (f(a, u) - f(a, -v)))
        - dm((f(a, u) - f(a, v)) * (fb(a, u) - fb(a, v))))])

    def ftafta(last):
        def build(a):
            return [(br(fb(a, u), fb(a, v)),
                     dm((fb(a, v) - fb(a, u)) * (fb(a, v) - fb(a, u)))
                     + dp((f(a, -v) - f(a, u)) * (f(a, v) - f(a, last))))]
        return build
    rel("ftafta", 2, 2, each_simple, ftafta(u), {"last_factor_at_minus_u": ftafta(-u)})

    rel("fafa1", 2, 3, each_consecutive, lambda a: [(
        br(f(a, u), f(a + 1, v)), -br(fb(a, u), fb(a + 1, -v)))])

    rel("ftafa1", 2, 3, each_consecutive, lambda a: [(
        br(f(a, u), fb(a + 1, v)), -br(fb(a, u), f(a + 1, -v)))])

    rel("fcircle", 2, 3, each_consecutive, lambda a: [(
        times_var(br(fc(a, u), f(a + 1, v)), U) - times_var(br(f(a, u), fc(a + 1, v)), V),
        -f(a + 1, v) * f(a, u) + fb(a + 1, -v) * fb(a, u))])

    rel("ftcirlce", 2, 3, each_consecutive, lambda a: [(
        times_var(br(fbc(a, u), f(a + 1, v)), U) + times_var(br(fb(a, u), fc(a + 1, v)), V),
        f(a + 1, v) * fb(a, u) + fb(a + 1, -v) * f(a, u))])

    rel("eserre1", 2, 3, simple_adjacent, lambda a, b: zero_all(
        br(e(a, u), br(e(a, u), e(b, v))) - br(eb(a, -u), br(eb(a, u), e(b, v)))))
    rel("eserre2", 2, 3, simple_adjacent, lambda a, b: zero_all(
        br(e(a, -u), br(e(a, u), e(b, v))) + br(eb(a, u), br(eb(a, u), e(b, v)))))
    rel("eserre3", 2, 3, simple_adjacent, lambda a, b: zero_all(
        br(e(a, -u), br(eb(a, u), e(b, v))) + br(eb(a, u), br(e(a, u), e(b, v)))))
    rel("eserre4", 2, 3, simple_adjacent, lambda a, b: zero_all(
        br(e(a, u), br(eb(a, u), e(b, v))) - br(eb(a, -u), br(e(a, u), e(b, v)))))
    rel("fserre1", 2, 3, simple_adjacent, lambda a, b: zero_all(
        br(f(a, u), br(f(a, u), f(b, v))) + br(fb(a, u), br(fb(a, -u), f(b, v)))))
    rel("fserre2", 2, 3, simple_adjacent, lambda a, b: zero_all(
        br(f(a, u), br(f(a, -u), f(b, v))) - br(fb(a, u), br(fb(a, u), f(b, v)))))
    rel("fserre3", 2, 3, simple_adjacent, lambda a, b: zero_all(
        br(f(a, u), br(fb(a, u), f(b, v))) + br(fb(a, u), br(f(a, -u), f(b, v)))))
    rel("fserre4", 2, 3, simple_adjacent, lambda a, b: zero_all(
        br(f(a, u), br(fb(a, -u), f(b, v))) - br(fb(a, u), br(f(a, u), f(b, v)))))
    return R


# ------------------------------------------------ rank-two block relations

def _rank2():
    R = []

    def rel(id, nvars, build, indices=None, arity=2, variants=None, note=""):
        R.append(RelationSpec(id, "gauss", nvars, arity, 2, indices or single(), build,
                              variants, fixed_n=2, note=note))

    rel("q2:eq:HaHa", 2, lambda a: [(
        br(H(a, 1, u), H(a, 2, v)),
        K * H(a, 1, u) * H(a, 2, v) - H(a, 2, v) * H(a, 1, u) * K)], indices=lambda n: each_a(2))
    rel("q2:eq:H1H2", 2, lambda: zero_all(br(H(1, 1, u), H(2, 2, v))))
    rel("q2:eq:H1E1", 2, lambda: [(
        br(H(1, 1, u), E(1, 2, 2, v)),
        H(1, 1, u) * (K * E(1, 2, 2, v) - E(1, 2, 1, u) * K))])
    rel("q2:eq:H2E1", 2, lambda: [(
        br(H(2, 1, u), E(1, 2, 2, v)),
        H(2, 1, u) * (K * E(1, 2, 1, u) - E(1, 2, 2, v) * K))])
    rel("q2:eq:E1F1", 2, lambda: [(
        br(E(1, 2, 1, u), F(2, 1, 2, v)),
        Ht(1, 1, u) * K * H(2, 1, u) - H(2, 2, v) * K * Ht(1, 2, v))])

    def E1(slot, x):
        return E(1, 2, slot, x)

    rel("q2:eq:E1E1", 2, lambda: [(
        br(E1(1, u), E1(2, v)),
        dm(P * (E1(1, v) - E1(1, u)) * (E1(2, v) - E1(2, u)))
        + dp(Q * (E1(1, -v) - E1(1, u)) * (E1(2, v) - E1(2, -u))))])
    rel("eq:q2:E1uE1u", 1, lambda: zero_all(
        P * br(E1(1, u), E1(2, u)) - Q * br(E1(1, u), E1(2, -u))))
    rel("eq:q2:E1uE1u2", 1, lambda: [(
        2 * times_var(br(E1(1, u), E1(2, u)), U),
        -(Q * (E1(1, u) - E1(1, -u)) * (E1(2, u) - E1(2, -u))))])

    def entries(kind):
        def build():
            e1, eb1 = (lambda x: e(1, x)), (lambda x: eb(1, x))
            if kind == "E1E1":
                return [
                    (br(e1(u), e1(v)), dm((e1(v) - e1(u)) * (e1(v) - e1(u)))
                     - dp((eb1(-v) - eb1(u)) * (eb1(v) - eb1(-u)))),
                    (br(e1(u), eb1(v)), dm((eb1(v) - eb1(u)) * (e1(v) - e1(u)))
                     + dp((e1(-v) - e1(u)) * (eb1(v) - eb1(-u)))),
                    (br(e1(u), eb1(v)), dm((e1(u) - e1(v)) * (eb1(u) - eb1(v)))
                     + dp((eb1(-u) - eb1(v)) * (e1(u) - e1(-v)))),
                    (br(eb1(u), eb1(v)), -dm((eb1(v) - eb1(u)) * (eb1(v) - eb1(u)))
                     - dp((e1(-v) - e1(u)) * (e1(v) - e1(-u)))),
                ]
            return [
                (br(e1(u), e1(u)), br(eb1(-u), eb1(u))),
                (br(e1(u), e1(-u)), br(eb1(u), eb1(u))),
                (br(e1(u), eb1(u)), br(eb1(-u), e1(u))),
                (br(e1(u), eb1(u)), br(e1(-u), eb1(u))),
            ]
        return build

    R.append(RelationSpec("q2:eq:E1E1#entries", "gauss", 2, 0, 2, single(), entries("E1E1"),
                          fixed_n=2, note="entry-level form of the matrix identity"))
    R.append(RelationSpec("eq:q2:E1uE1u#entries", "gauss", 1, 0, 2, single(), entries("E1uE1u"),
                          fixed_n=2, note="entry-level form of the equal-argument identities"))
    return R


# ---------------------------------------------- rank-three block relations

def _rank3():
    R = []

    def rel(id, nvars, build, arity=2, variants=None, suite="gauss", indices=None, note=""):
        R.append(RelationSpec(id, suite, nvars, arity, 3, indices or single(), build, variants,
                              fixed_n=3, note=note))

    def E1(slot, x):
        return E(1, 2, slot, x)

    def E2(slot, x):
        return E(2, 3, slot, x)

    def E13(slot, x):
        return E(1, 3, slot, x)

    def cE(slot, x):
        return calE(1, slot, x)

    rel("re:q3:E1E2", 2, lambda: [(
        br(E1(1, u), E2(2, v)),
        K * E13(2, v) - E13(1, u) * K + (E1(1, u) * K - K * E1(2, v)) * E2(2, v))])

    def e1e2(sign):
        def build():
            return [(lm(br(e(1, u), e(2, v))),
                     eE(1, 3, v) - eE(1, 3, u) + (e(1, u) - e(1, v)) * e(2, v)
                     - (eb(1, -u) + sign * eb(1, -v)) * eb(2, v))]
        return build
    rel("eq:q3:e1e2", 2, e1e2(-1), arity=0, variants={"plus_sign": e1e2(1)},
        note="printed sign choice inside the last factor is ambiguous; both are checked")
    rel("eq:q3:e1be2", 2, lambda: [(
        lp(br(e(1, u), eb(2, v))),
        ebE(1, 3, v) - ebE(1, 3, -u) + (e(1, u) - e(1, -v)) * eb(2, v) + (eb(1, -u) - eb(1, v)) * e(2, v))],
        arity=0)
    rel("eq:q3:be1e2", 2, lambda: [(
        lm(br(eb(1, u), e(2, v))),
        ebE(1, 3, v) - ebE(1, 3, u) + (e(1, -u) - e(1, -v)) * eb(2, v) + (eb(1, u) - eb(1, v)) * e(2, v))],
        arity=0)
    rel("eq:q3:be1be2", 2, lambda: [(
        lp(br(eb(1, u), eb(2, v))),
        eE(1, 3, -u) - eE(1, 3, v) - (e(1, -u) - e(1, v)) * e(2, v) + (eb(1, u) - eb(1, -v)) * eb(2, v))],
        arity=0)
    rel("eq:q3:ee", 2, lambda: [(br(e(1, u), e(2, v)), br(eb(1, -u), eb(2, v)))], arity=0)
    rel("eq:q3:ebe", 2, lambda: [(br(e(1, u), eb(2, v)), -br(eb(1, -u), e(2, v)))], arity=0)
    rel("eq:q3:e1circle", 2, lambda: [(
        times_var(br(ec(1, u), e(2, v)), U) - times_var(br(e(1, u), ec(2, v)), V),
        e(1, u) * e(2, v) - eb(1, -u) * eb(2, v))], arity=0)
    rel("eq:q3:be1circle", 2, lambda: [(
        times_var(br(ebc(1, u), e(2, v)), U) - times_var(br(eb(1, u), ec(2, v)), V),
        eb(1, u) * e(2, v) + e(1, -u) * eb(2, v))], arity=0)

    rel("re:q3:E1E13", 2, lambda: [(
        br(E1(1, u), E13(2, v) - E1(2, v) * E2(2, v)),
        -(br(E1(1, u), E2(2, v)) * E1(1, u)))])
    rel("re:q3:E13E2", 2, lambda: [(
        br(E13(1, u), E2(2, v)),
        E2(2, v) * br(E1(1, u), E2(2, v)))])
    rel("eq:q3:E1uE13v", 2, lambda: [(
        br(E1(1, u), E13(2, v)),
        dm(P * (E1(1, v) - E1(1, u)) * (E13(2, v) - E13(2, u)))
        + dp(Q * (E1(1, -v) - E1(1, u)) * (E13(2, v) - E13(2, -u))))])
    rel("eq:q3:E1uE13u1", 1, lambda: zero_all(
        P * br(E1(1, u), E13(2, u)) - Q * br(E1(1, u), E13(2, -u))))
    rel("eq:q3:E1uE13u2", 1, lambda: [(
        2 * times_var(br(E1(1, u), E13(2, u)), U),
        -(Q * (E1(1, u) - E1(1, -u)) * (E13(2, u) - E13(2, -u))))])
    rel("eq:q3:E13uuE2v", 2, lambda: [(
        br(cE(1, u), E2(2, v)),
        dm((cE(1, v) - cE(1, u)) * (E2(2, v) - E2(2, u)) * P)
        + dp((cE(1, -v) - cE(1, u)) * (E2(2, v) - E2(2, -u)) * Q))])
    rel("eq:q3:E13vvE2v1", 1, lambda: zero_all(
        br(cE(1, u), E2(2, u)) * P + br(cE(1, -u), E2(2, u)) * Q))
    rel("eq:q3:E13vvE2v2", 1, lambda: [(
        2 * times_var(br(cE(1, u), E2(2, u)), U),
        -((cE(1, u) - cE(1, -u)) * (E2(2, u) - E2(2, -u)) * Q))])

    def serre_pairs(n):
        yield {"a": 1, "b": 2}
        yield {"a": 2, "b": 1}

    def Ea(a, slot, x):
        return E(a, a + 1, slot, x)

    rel("eq:q3:Serre", 3, lambda a, b: zero_all(
        dm(P12 * br(Ea(a, 1, u) - Ea(a, 1, v), br(Ea(a, 2, u) - Ea(a, 2, v), Ea(b, 3, w))))
        + dp(Q12 * br(Ea(a, 1, u) - Ea(a, 1, -v), br(Ea(a, 2, -u) - Ea(a, 2, v), Ea(b, 3, w))))),
        arity=3, suite="serre", indices=serre_pairs)
    rel("eq:serresim", 2, lambda a, b: zero_all(
        P12 * br(Ea(a, 1, u), br(Ea(a, 2, u), Ea(b, 3, v)))
        + Q12 * br(Ea(a, 1, -u), br(Ea(a, 2, u), Ea(b, 3, v)))),
        arity=3, suite="serre", indices=serre_pairs,
        note="first argument renamed: the identity involves two spectral parameters")

    def serre_entries(a, b):
        ea = lambda x: e(a, x)
        eba = lambda x: eb(a, x)
        eb_ = lambda x: e(b, x)
        return zero_all(
            br(ea(u), br(ea(u), eb_(v))) - br(eba(-u), br(eba(u), eb_(v))),
            br(ea(-u), br(ea(u), eb_(v))) + br(eba(u), br(eba(u), eb_(v))),
            br(ea(-u), br(eba(u), eb_(v))) + br(eba(u), br(ea(u), eb_(v))),
            br(ea(u), br(eba(u), eb_(v))) - br(eba(-u), br(ea(u), eb_(v))))
    rel("eq:serresim#entries", 2, serre_entries, arity=0, suite="serre", indices=serre_pairs,
        note="entry-level form of the simplified Serre relation")
    return R


# ------------------------------------------------------------- embeddings

def _embedding():
    R = []

    def qnpsi1(m, a, b, c):
        return [(br(E(m, a, 1, u), psiT(m, b, c, 2, v)),
                 psiT(m, b, a - m, 2, v) * (K * E(m, c + m, 2, v) - E(m, c + m, 1, u) * K))]

    def qnpsi2(arg, sign):
        def build(m, a, b, c):
            return [(br(F(a, m, 1, u), psiT(m, b, c, 2, v)),
                     sign * (F(b + m, m, 2, v) * K - K * F(b + m, m, 1, arg)) * psiT(m, a - m, c, 2, v))]
        return build

    def psi_indices(n):
        # n is the target rank m + k; m = 1 here, admissible a > m
        m = 1
        k = n - m
        for a in range(m + 1, m + k + 1):
            for b in range(1, k + 1):
                for c in range(1, k + 1):
                    yield {"m": m, "a": a, "b": b, "c": c}

    R.append(RelationSpec("eq:qnpsi1", "embedding", 2, 2, 2, psi_indices, qnpsi1))
    R.append(RelationSpec("eq:qnpsi2", "embedding", 2, 2, 2, psi_indices, qnpsi2(v, 1),
                          {"first_factor_at_u": qnpsi2(u, 1),
                           "opposite_sign_first_factor_at_u": qnpsi2(u, -1)}))

    def psi_rtt(m, a, b, c, d):
        return [(br(psiT(m, a, b, 1, u), psiT(m, c, d, 2, v)),
                 K * psiT(m, c, b, 1, u) * psiT(m, a, d, 2, v)
                 - psiT(m, c, b, 2, v) * psiT(m, a, d, 1, u) * K)]

    def psi_rtt_indices(n):
        for a, b, c, d in product(range(1, n), repeat=4):
            yield {"m": 1, "a": a, "b": b, "c": c, "d": d}

    R.append(RelationSpec("psi:rtt", "embedding", 2, 2, 2, psi_rtt_indices, psi_rtt,
                          note="block RTT relation for the image of the embedding"))

    def psi_com(m, a, b, c, d):
        return zero_all(br(T(a, b, 1, u), psiT(m, c, d, 2, v)))

    def psi_com_indices(n):
        for a, b in product(range(1, 2), repeat=2):
            for c, d in product(range(1, n), repeat=2):
                yield {"m": 1, "a": a, "b": b, "c": c, "d": d}

    R.append(RelationSpec("psi:commute", "embedding", 2, 2, 2, psi_com_indices, psi_com,
                          note="upper-left blocks commute with the image of the embedding"))
    return R


# ------------------------------------------------------------ block RTT

def _block_rtt():
    R = []
    R.append(RelationSpec("re:BTT", "rtt", 2, 2, 1, all_blocks4, lambda a, b, c, d: [(
        br(T(a, b, 1, u), T(c, d, 2, v)),
        K * T(c, b, 1, u) * T(a, d, 2, v) - T(c, b, 2, v) * T(a, d, 1, u) * K)]))

    def btwt_indices(n):
        for k in all_blocks4(n):
            k = dict(k)
            k["n"] = n
            yield k

    R.append(RelationSpec("re:BTWT", "rtt", 2, 2, 1, btwt_indices, _btwt))
    return R



def _btwt(a, b, c, d, n):
    rhs = 0
    if b == c:
        for p in range(1, n + 1):
            rhs = rhs + T(a, p, 1, u) * K * Tt(p, d, 2, v)
    if a == d:
        for p in range(1, n + 1):
            rhs = rhs - Tt(c, p, 2, v) * K * T(p, b, 1, u)
    return [(br(T(a, b, 1, u), Tt(c, d, 2, v)), rhs)]


# ----------------------------------------------------------- central part

def _center():
    R = []

    def each_r(n):
        for r in range(2, n + 1):
            yield {"r": r, "n": n}

    def each_ab(n):
        for a, b in product(range(2, n + 1), repeat=2):
            yield {"a": a, "b": b, "n": n}

    def psi(a, b, slot, x):
        return psiT(1, a - 1, b - 1, slot, x)

    def psit(a, b, slot, x):
        return psiTt(1, a - 1, b - 1, slot, x)

    def thef1(column):
        def build(a, b, n):
            pairs = [(T(1, 1, 1, u), H(1, 1, u)),
                     (T(1, b, 1, u), H(1, 1, u) * E(1, b, 1, u)),
                     (T(a, 1, 1, u), F(a, 1, 1, u) * H(1, 1, u))]
            col = a if column == "printed" else b
            pairs.append((T(a, b, 1, u), F(a, 1, 1, u) * H(1, 1, u) * E(1, col, 1, u) + psi(a, b, 1, u)))
            return pairs
        return build

    def thef2(a, b, n):
        rest = range(2, n + 1)
        t11 = Ht(1, 1, u)
        for r in rest:
            for s in rest:
                t11 = t11 + E(1, r, 1, u) * psit(r, s, 1, u) * F(s, 1, 1, u)
        t1b = 0
        ta1 = 0
        for p in rest:
            t1b = t1b - E(1, p, 1, u) * psit(p, b, 1, u)
            ta1 = ta1 - psit(a, p, 1, u) * F(p, 1, 1, u)
        return [(Tt(1, 1, 1, u), t11), (Tt(a, b, 1, u), psit(a, b, 1, u)),
                (Tt(1, b, 1, u), t1b), (Tt(a, 1, 1, u), ta1)]

    def rel(id, nvars, arity, indices, build, variants=None, note=""):
        R.append(RelationSpec(id, "center", nvars, arity, 2, indices, build, variants, note=note))

    def blc(b, c, n):
        lhs = 0
        for p in range(1, n + 1):
            lhs = lhs + Lam0 * T(p, b, 1, u) * Tau(Tt(c, p, 2, u), 2)
        return [(lhs, Lam0 * zc(u) if b == c else 0)]

    def all_bc(n):
        for b, c in product(range(1, n + 1), repeat=2):
            yield {"b": b, "c": c, "n": n}

    R.append(RelationSpec("eq:ct:TT", "center", 1, 2, 1, all_bc, blc,
                          note="full identity, assembled from all of its 2x2 blocks"))
    R.append(RelationSpec("eq:ct:blcTT", "center", 1, 2, 1, all_bc, blc))
    rel("eq:ct:THEF1", 1, 1, each_ab, thef1("printed"), {"column_b": thef1("b")})
    rel("eq:ct:THEF2", 1, 1, each_ab, thef2)
    rel("eq:ct:HFr", 2, 2, each_r, lambda r, n: [(
        br(H(1, 1, u), F(r, 1, 2, v)),
        (K * F(r, 1, 1, u) - F(r, 1, 2, v) * K) * H(1, 1, u))])

    def tfr(r, n):
        rhs = 0
        for p in range(1, n + 1):
            fp = F(p, 1, 1, u)
            rhs = rhs - Tt(n, p, 2, v) * K * fp
        return [(br(F(r, 1, 1, u), Tt(n, r, 2, v)), rhs)]
    rel("eq:ct:TFr", 2, 2, each_r, tfr)
    rel("eq:ct:EFr", 2, 2, each_r, lambda r, n: [(
        br(E(1, n, 1, u), F(r, 1, 2, v)),
        Ht(1, 1, u) * K * psi(r, n, 1, u) - psi(r, n, 2, v) * K * Ht(1, 2, v))])
    rel("eq:ct:TnH", 2, 2, lambda n: iter([{"n": n}]), lambda n: [(
        br(T(1, n, 1, u), H(1, 2, v)),
        K * T(1, n, 1, u) * H(1, 2, v) - T(1, n, 2, v) * H(1, 1, u) * K)])
    rel("eq:ct:FrHuu", 1, 2, each_r, lambda r, n: [(
        Lam0 * F(r, 1, 1, u) * H(1, 1, u),
        Lam0 * H(1, 1, u) * Tau(F(r, 1, 2, u), 2))])
    rel("eq:ct:FrTuu", 1, 1, each_r, lambda r, n: [(
        Tau(Tt(n, r, 1, u) * F(r, 1, 1, u), 1),
        Tau(F(r, 1, 1, u), 1) * Tau(Tt(n, r, 1, u), 1))])
    return R


def catalog():
    """All relations, in a stable order."""
    return _dr() + _rank2() + _rank3() + _embedding() + _block_rtt() + _center()


def catalog_by_id():
    return {spec.id: spec for spec in catalog()}


DRINFELD_IDS = tuple("eq:Dr:" + s for s in (
    "hahb haha hahta htahta haeb haea haeta htaea ha1ea ha1eta hta1ea hta1eta "
    "hafb hafa hafta ha1fa ha1fta hta1fa hta1fta eafb eafa eafta etafa etafta "
    "eaeb eaea eaeta etaeta eaea1 eaeta1 ecircle etcircle fafb fafa fafta ftafta "
    "fafa1 ftafa1 fcircle ftcirlce eserre1 eserre2 eserre3 eserre4 "
    "fserre1 fserre2 fserre3 fserre4").split())

RANK2_IDS = ("q2:eq:HaHa", "q2:eq:H1H2", "q2:eq:H1E1", "q2:eq:H2E1", "q2:eq:E1F1",
             "q2:eq:E1E1", "eq:q2:E1uE1u", "eq:q2:E1uE1u2")

RANK3_IDS = ("re:q3:E1E2", "eq:q3:e1e2", "eq:q3:e1be2", "eq:q3:be1e2", "eq:q3:be1be2",
             "eq:q3:ee", "eq:q3:ebe", "eq:q3:e1circle", "eq:q3:be1circle", "re:q3:E1E13",
             "re:q3:E13E2", "eq:q3:E1uE13v", "eq:q3:E1uE13u1", "eq:q3:E1uE13u2",
             "eq:q3:E13uuE2v", "eq:q3:E13vvE2v1", "eq:q3:E13vvE2v2", "eq:q3:Serre", "eq:serresim")

EMBEDDING_IDS = ("eq:qnpsi1", "eq:qnpsi2")

CENTER_IDS = ("eq:ct:TT", "eq:ct:blcTT", "eq:ct:THEF1", "eq:ct:THEF2", "eq:ct:HFr", "eq:ct:TFr", "eq:ct:EFr", "eq:ct:TnH",
              "eq:ct:FrHuu", "eq:ct:FrTuu")

MANIFEST = DRINFELD_IDS + RANK2_IDS + RANK3_IDS + EMBEDDING_IDS + CENTER_IDS + ("re:BTT", "re:BTWT")


__all__ = ["RelationSpec", "catalog", "catalog_by_id", "MANIFEST", "DRINFELD_IDS", "RANK2_IDS",
           "RANK3_IDS", "EMBEDDING_IDS", "CENTER_IDS"]
