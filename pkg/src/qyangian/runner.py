"""Verification sweeps: task lists per suite, parallel execution, report assembly."""

import json
import os
import random
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor

from gmpy2 import mpq

SUITES = ("tensor", "rtt", "gauss", "drinfeld", "serre", "embedding", "center", "grprime")
SCHEMA = 1
VERSION = "0.1.0"


class ConfigError(ValueError):
    """The run configuration violates its invariants."""


class RunConfig:
    def __init__(self, n=2, order=4, suites=SUITES, threads=1, report=None, seed=0):
        self.n = n
        self.order = order
        self.suites = tuple(sorted(set(suites), key=SUITES.index))
        self.threads = threads
        self.report = report
        self.seed = seed
        self.validate()

    def validate(self):
        if self.n < 1:
            raise ConfigError("n must be at least 1")
        if self.order < 2:
            raise ConfigError("order must be at least 2")
        if self.threads < 1:
            raise ConfigError("threads must be at least 1")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ConfigError("unknown suite(s): %s" % ", ".join(unknown))
        if "serre" in self.suites and self.n < 3:
            raise ConfigError("the serre suite needs n >= 3")

    def echo(self):
        return {"n": self.n, "order": self.order, "suites": list(self.suites), "seed": self.seed}


def record(id, n, L, status, degree=None, detail=None, variant=None, seconds=0.0, route="symbolic"):
    return {"id": id, "variant": variant, "n": n, "order": L, "status": status,
            "degree": degree, "detail": detail, "route": route, "seconds": seconds}


def _from_result(res):
    return record(res.id, res.n, res.order, res.status, res.max_degree, res.witness,
                  res.variant, res.seconds, "numeric" if res.numeric else "symbolic")


def _flag(id, n, L, ok, detail=None, start=None):
    seconds = time.perf_counter() - start if start is not None else 0.0
    return record(id, n, L, "pass" if ok else "fail", None, detail, seconds=seconds)


# ------------------------------------------------------------ task bodies

def _task_catalog(spec_id, n, L, variant):
    from .verifier import verify
    return [_from_result(verify(spec_id, n, L, variant=variant))]


def _task_tensor(n, L):
    from .tensor import verify_operator_facts, verify_pq_identities
    start = time.perf_counter()
    out = [_flag("tensor:pq:" + label, 1, 0, ok) for label, ok in verify_pq_identities()]
    out += [_flag("tensor:op:" + label, n, 0, ok) for label, ok in verify_operator_facts(n)]
    if n != 1:
        out += [_flag("tensor:op:" + label, 1, 0, ok) for label, ok in verify_operator_facts(1)
                if label.startswith(("Q =", "K =", "P J"))]
    for r in out:
        r["seconds"] = 0.0
    out[0]["seconds"] = time.perf_counter() - start
    return out


def random_word(rng, n, L, max_len=4):
    from .superalgebra import all_generators
    gens = all_generators(n, L)
    word, total = [], 0
    for _ in range(rng.randint(2, max_len)):
        choices = [g for g in gens if total + g.level <= L]
        if not choices:
            break
        g = rng.choice(choices)
        word.append(g.code())
        total += g.level
    return tuple(word)


def confluence_check(n, L, count, seed):
    """Production normal form against leftmost-first and rightmost-first rewriting."""
    from .yangian import nf_by_strategy, nf_dict
    rng = random.Random(seed)
    bad = 0
    left, right = {}, {}
    for _ in range(count):
        w = random_word(rng, n, L)
        prod = nf_dict({w: mpq(1)})
        if nf_by_strategy(w, True, left) != prod or nf_by_strategy(w, False, right) != prod:
            bad += 1
    return bad


def ev_factorization_check(n, L, count, seed):
    """ev of a random element equals ev of its normal form."""
    from .rings import MatrixRing
    from .yangian import ev_poly, nf_dict
    rng = random.Random(seed)
    ring = MatrixRing(n)
    bad = 0
    for _ in range(count):
        p = {}
        for _ in range(rng.randint(1, 3)):
            p[random_word(rng, n, L, 3)] = mpq(rng.randint(-3, 3) or 1, rng.randint(1, 3))
        if ring.add(ev_poly(p, n), ring.neg(ev_poly(nf_dict(p), n))):
            bad += 1
    return bad


def _task_rtt(n, L, seed):
    from .oracle import numeric_rtt_check
    out = []
    start = time.perf_counter()
    out.append(_flag("rtt:numeric-oracle", n, L, numeric_rtt_check(n), start=start))
    start = time.perf_counter()
    bad = confluence_check(min(n, 2), L, 1000, seed)
    out.append(_flag("rtt:confluence", min(n, 2), L, bad == 0, "%d/1000 discrepancies" % bad, start))
    start = time.perf_counter()
    bad = ev_factorization_check(n, L, 500, seed)
    out.append(_flag("rtt:ev-factors-through-normal-form", n, L, bad == 0,
                     "%d/500 discrepancies" % bad, start))
    return out


def _task_gauss(n, L):
    from .gauss import gauss_decompose, numeric_T, omega_checks, symbolic_T
    from .yangian import YangianContext, ev_poly
    ctx = YangianContext(n, L)
    out = []
    start = time.perf_counter()
    T = symbolic_T(ctx)
    gd = gauss_decompose(T)
    out.append(_flag("gauss:FHE=T", n, L, (gd.reconstruct() - T).is_zero(), start=start))
    start = time.perf_counter()
    qd = gauss_decompose(T, "quasideterminant")
    same = all((gd.H[a] - qd.H[a]).is_zero() for a in gd.H) and \
        all((gd.E[k] - qd.E[k]).is_zero() for k in gd.E) and \
        all((gd.F[k] - qd.F[k]).is_zero() for k in gd.F)
    out.append(_flag("gauss:quasideterminant=elimination", n, L, same, start=start))
    start = time.perf_counter()
    Tn = numeric_T(ctx)
    nd = gauss_decompose(Tn)
    ring = Tn.ring
    image = gd.map(lambda p: ev_poly(p, n), ring)
    match = all((image.H[a] - nd.H[a]).is_zero() for a in nd.H) and \
        all((image.E[k] - nd.E[k]).is_zero() for k in nd.E) and \
        all((image.F[k] - nd.F[k]).is_zero() for k in nd.F)
    out.append(_flag("gauss:numeric-factor-match", n, L, match and (nd.reconstruct() - Tn).is_zero(),
                     start=start))
    start = time.perf_counter()
    checks = omega_checks(gd)
    bad = [(fam, key) for fam, key, ok in checks if not ok]
    out.append(_flag("gauss:omega-images", n, L, not bad,
                     "%d/%d instances fail" % (len(bad), len(checks)), start))
    return out


def _task_embedding(n, L):
    from .verifier import psi_composition_check
    out = []
    if n >= 3:
        start = time.perf_counter()
        bad = psi_composition_check(1, n - 2, L)
        out.append(_flag("embedding:composition", n, L, not bad, "%d mismatches" % len(bad), start))
    return out


def _task_center(n, L):
    from .center import berezinian_check, center_report, ev_trace_formula, ev_symbolic_agreement
    out = []
    start = time.perf_counter()
    rep = center_report(n, L)
    out.append(_flag("center:routes-equal", n, L, rep["routes_equal"], start=start))
    out.append(_flag("center:product-order", n, L, rep["product_order_irrelevant"]))
    out.append(_flag("center:even", n, L, rep["even"]))
    out.append(_flag("center:factors", n, L,
                     all(f["even"] and f["commutes_with_block"] for f in rep["factors"])))
    bad = sum(rep["centrality"].values())
    out.append(_flag("center:central", n, L, bad == 0,
                     "%d nonzero commutators over %d cells" % (bad, len(rep["centrality"]))))
    start = time.perf_counter()
    out.append(_flag("center:ev-of-symbolic", n, L, ev_symbolic_agreement(n, L), start=start))
    start = time.perf_counter()
    ev = ev_trace_formula(n, L)
    out.append(_flag("center:ev-formula", n, L, ev["printed"], "G^(k+1) u^-(k+1)", start))
    r = _flag("center:ev-formula", n, L, ev["shifted"], "G^k u^-(k+1)")
    r["variant"] = "shifted_power"
    out.append(r)
    start = time.perf_counter()
    ber = berezinian_check(n, L)
    out.append(_flag("center:berezinian", n, L, all(b["ok"] for b in ber), start=start))
    return out, {"z": rep["z"]}


def _task_grprime(n, L):
    from .grcheck import grprime_report
    from .lie import gr_sweep, iota_check
    from .yangian import YangianContext
    ctx = YangianContext(n, L)
    out = []
    start = time.perf_counter()
    count, bad = gr_sweep(ctx, L)
    out.append(_flag("grprime:leading-term-map", n, L, not bad,
                     "%d/%d pairs fail" % (len(bad), count), start))
    start = time.perf_counter()
    out.append(_flag("grprime:iota", n, L, iota_check(ctx), start=start))
    start = time.perf_counter()
    rep = grprime_report(ctx, min(3, L - 1))
    out.append(_flag("grprime:generator-matching", n, L, not rep["generator_matching"], start=start))
    for name, (checked, failures) in rep["tables"].items():
        base, _, var = name.partition("_")
        r = _flag("grprime:" + base, n, L, not failures, "%d/%d fail" % (len(failures), checked))
        r["variant"] = var or None
        out.append(r)
    return out


def _task(kind, *args):
    if kind == "catalog":
        return _task_catalog(*args), None
    if kind == "center":
        return _task_center(*args)
    body = {"tensor": _task_tensor, "rtt": _task_rtt, "gauss": _task_gauss,
            "embedding": _task_embedding, "grprime": _task_grprime}[kind]
    return body(*args), None


def _run_one(task):
    from .expr import RelationDivisionError
    from .series import DivisionPreconditionError
    try:
        return _task(*task)
    except (RelationDivisionError, DivisionPreconditionError) as exc:
        name = task[1] if task[0] == "catalog" else task[0]
        return [record(str(name), task[2] if task[0] == "catalog" else task[1], None,
                       "precondition", detail=str(exc))], None


def tasks_for(config):
    from .catalog import catalog
    n, L = config.n, config.order
    tasks = []
    for suite in config.suites:
        if suite == "tensor":
            tasks.append(("tensor", n, L))
        elif suite == "rtt":
            tasks.append(("rtt", n, L, config.seed))
        elif suite == "gauss":
            tasks.append(("gauss", n, L))
        elif suite == "embedding":
            tasks.append(("embedding", n, L))
        elif suite == "center":
            tasks.append(("center", n, L))
        elif suite == "grprime":
            tasks.append(("grprime", n, L))
        for spec in catalog():
            if spec.suite != suite or n < spec.min_n:
                continue
            tasks.append(("catalog", spec.id, n, L, None))
            for name in spec.variants:
                tasks.append(("catalog", spec.id, n, L, name))
    return tasks


def _sort_key(r):
    return (r["id"], r["variant"] or "", r["route"])


def run(config):
    """Execute the configured suites; returns the report dictionary."""
    start = time.perf_counter()
    tasks = tasks_for(config)
    if config.threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.threads) as pool:
            outputs = list(pool.map(_run_one, tasks))
    else:
        outputs = [_run_one(t) for t in tasks]
    results, extras = [], {}
    for recs, extra in outputs:
        results.extend(recs)
        if extra:
            extras.update(extra)
    results.sort(key=_sort_key)
    timing = {}
    body = []
    for r in results:
        key = r["id"] + ("[%s]" % r["variant"] if r["variant"] else "")
        timing[key] = round(r.pop("seconds"), 6)
        body.append(r)
    report = {
        "schema": SCHEMA,
        "tool": {"name": "qyangian", "version": VERSION},
        "config": config.echo(),
        "results": body,
        "summary": summarize(body),
    }
    if "drinfeld" in config.suites or "gauss" in config.suites:
        from .verifier import DEFAULT_BINDING
        report["prime_binding"] = {
            "hp": "%s entry of H_a(u)^-1%s" % _binding_text(DEFAULT_BINDING[0]),
            "hbp": "%s entry of H_a(u)^-1%s" % _binding_text(DEFAULT_BINDING[1]),
        }
    if extras:
        report["center"] = extras
    report["timing"] = {"total_seconds": round(time.perf_counter() - start, 6), "results": timing}
    return report


def _binding_text(b):
    entry, sign, neg = b
    name = "(1,1)" if entry == "a" else "(-1,1)"
    suffix = (" at -u" if neg else "") + (", negated" if sign < 0 else "")
    return name, suffix


def summarize(results):
    """Counts for printed forms (variant None) and, separately, for variants."""
    primary = [r for r in results if r["variant"] is None]
    variants = [r for r in results if r["variant"] is not None]

    def counts(rs):
        out = {"pass": 0, "fail": 0, "precondition": 0}
        for r in rs:
            out[r["status"]] += 1
        return out

    return {"primary": counts(primary), "variants": counts(variants), "total": len(results)}


def exit_code(report):
    """0 when every primary result passes, 3 on a precondition failure, 1 otherwise."""
    s = report["summary"]["primary"]
    if s["precondition"]:
        return 3
    if s["fail"]:
        return 1
    return 0


def write_report(report, path):
    """Atomic write: temporary file in the target directory, then rename."""
    path = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), prefix=".report-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True, default=str)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def report_body(report):
    """The report without its timing section, for determinism comparisons."""
    return {k: v for k, v in report.items() if k != "timing"}


def text_lines(report):
    lines = []
    for r in report["results"]:
        tag = r["id"] + ("[%s]" % r["variant"] if r["variant"] else "")
        extra = []
        if r["degree"] is not None:
            extra.append("degree %s" % r["degree"])
        if r["detail"]:
            extra.append(str(r["detail"]))
        lines.append("%-12s %s n=%s L=%s %s" % (r["status"].upper(), tag, r["n"], r["order"],
                                                ("(" + "; ".join(extra) + ")") if extra else ""))
    s = report["summary"]
    lines.append("primary: %(pass)d pass, %(fail)d fail, %(precondition)d precondition" % s["primary"])
    lines.append("variants: %(pass)d pass, %(fail)d fail, %(precondition)d precondition" % s["variants"])
    return [l.rstrip() for l in lines]
