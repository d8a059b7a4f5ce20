"""Leading-term checks in the loop-graded algebra for Gauss generators.

An element of second-filtration degree d is compared through its component
of loop degree exactly d, where a monomial has loop degree sum(level - 1).
"""

from .gauss import _super_bracket, gauss_decompose, higher_e, symbolic_T
from .superalgebra import mono_loop_degree, padd


def loop_component(p, degree):
    return {m: c for m, c in p.items() if mono_loop_degree(m) == degree}


def loop_degree(p):
    return max((mono_loop_degree(m) for m in p), default=-1)


def leading_equal(x, y, degree):
    """x and y agree in loop degree `degree` and neither exceeds it."""
    if loop_degree(x) > degree or loop_degree(y) > degree:
        return False
    return loop_component(x, degree) == loop_component(y, degree)


def generator_matching(gd, ctx, max_level=None):
    """T_aa vs H_a, T_ab vs E_ab and T_ba vs F_ba (a < b), entrywise, at each level r."""
    from .yangian import t_coeff
    max_level = gd.order if max_level is None else max_level
    failures = []
    for r in range(1, max_level + 1):
        for a in range(1, gd.n + 1):
            for b in range(a, gd.n + 1):
                blk = gd.H[a] if a == b else gd.E[(a, b)]
                for row, series in ((a, blk.a), (-a, blk.b)):
                    if not leading_equal(series.coefficient((r,)), t_coeff(row, b, r), r - 1):
                        failures.append(("T", row, b, r))
                if a == b:
                    continue
                blk = gd.F[(b, a)]
                for row, series in ((b, blk.a), (-b, blk.b)):
                    if not leading_equal(series.coefficient((r,)), t_coeff(row, a, r), r - 1):
                        failures.append(("T", row, a, r))
    return failures


def _combo(terms):
    out = {}
    for c, p in terms:
        if c:
            padd(out, p, c)
    return out


def _sign(k):
    return -1 if k % 2 else 1


def grhat_tables(gd, max_total=3):
    """Leading-bracket tables for h, h-bar, e_ab and e-bar_ab.

    Returns {family: (checked, failures)}.  Two families are also checked in
    a second sign convention: "htht_opposite" flips the h-bar/h-bar right side,
    and "etet_symmetric" flips the delta_bc term so that the right side is
    symmetric under swapping the two odd arguments.
    """
    ring = gd.ring
    n = gd.n
    results = {}

    def record(name, lhs, rhs, degree, key):
        count, failures = results.setdefault(name, [0, []])
        results[name][0] = count + 1
        if not leading_equal(lhs, rhs, degree):
            failures.append(key)

    for a in range(1, n + 1):
        h, hb = gd.h(a), gd.hb(a)
        for r in range(max_total + 1):
            for s in range(max_total + 1 - r):
                if r + s + 1 > gd.order:
                    continue
                hr, hs = h.coefficient((r + 1,)), h.coefficient((s + 1,))
                hbr, hbs = hb.coefficient((r + 1,)), hb.coefficient((s + 1,))
                top = r + s
                record("hh", _super_bracket(ring, hr, hs), {}, top, (a, r, s))
                record("hht", _super_bracket(ring, hr, hbs),
                       _combo([(_sign(r) - 1, hb.coefficient((r + s + 1,)))]), top, (a, r, s))
                hbhb = _super_bracket(ring, hbr, hbs)
                hsum = h.coefficient((r + s + 1,))
                record("htht", hbhb, _combo([(_sign(r) + _sign(s), hsum)]), top, (a, r, s))
                record("htht_opposite", hbhb, _combo([(-_sign(r) - _sign(s), hsum)]), top, (a, r, s))

    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    cache = {}

    def root(a, b, r, bar):
        key = (a, b, r, bar)
        if key not in cache:
            cache[key] = higher_e(gd, a, b, r, bar)
        return cache[key]

    for (a, b) in pairs:
        for (c, d) in pairs:
            for r in range(max_total + 1):
                for s in range(max_total + 1 - r):
                    if r + s + 1 > gd.order:
                        continue
                    m = r + s + 1
                    top = r + s
                    key = (a, b, c, d, r, s)
                    x, xb = root(a, b, r + 1, False), root(a, b, r + 1, True)
                    y, yb = root(c, d, s + 1, False), root(c, d, s + 1, True)
                    rhs_ee = _combo([(int(b == c), root(a, d, m, False) if b == c else {}),
                                     (-int(a == d), root(c, b, m, False) if a == d else {})])
                    record("ee", _super_bracket(ring, x, y), rhs_ee, top, key)
                    rhs_eet = _combo([(int(b == c) * _sign(r), root(a, d, m, True) if b == c else {}),
                                      (-int(a == d), root(c, b, m, True) if a == d else {})])
                    record("eet", _super_bracket(ring, x, yb), rhs_eet, top, key)
                    rhs_etet = _combo([(int(b == c) * _sign(r), root(a, d, m, False) if b == c else {}),
                                       (-int(a == d) * _sign(s), root(c, b, m, False) if a == d else {})])
                    xbyb = _super_bracket(ring, xb, yb)
                    record("etet", xbyb, rhs_etet, top, key)
                    rhs_sym = _combo([(-int(b == c) * _sign(r), root(a, d, m, False) if b == c else {}),
                                      (-int(a == d) * _sign(s), root(c, b, m, False) if a == d else {})])
                    record("etet_symmetric", xbyb, rhs_sym, top, key)
    return {name: (count, failures) for name, (count, failures) in sorted(results.items())}


def grprime_report(ctx, max_total=3):
    gd = gauss_decompose(symbolic_T(ctx))
    return {"generator_matching": generator_matching(gd, ctx), "tables": grhat_tables(gd, max_total)}


__all__ = ["loop_component", "leading_equal", "generator_matching", "grhat_tables", "grprime_report"]
