"""Command-line front end: verification sweeps and a normal-form calculator."""

import ast
import json
import sys

import click
from gmpy2 import mpq

from .runner import SUITES, ConfigError, RunConfig, exit_code, run, text_lines, write_report

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class ExprError(ValueError):
    def __init__(self, message, position):
        super().__init__("%s at position %d" % (message, position))
        self.position = position


SERIES_NAMES = ("h", "hb", "e", "eb", "f", "fb")


class Calculator:
    """Evaluates the expression grammar to PBW normal forms.

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := integer | integer "/" integer | "-" factor | "(" expr ")"
            | "[" expr "," expr "]"             super commutator
            | "t[" i "," j "," r "]"            generator t_ij^(r)
            | name "[" index "," r "]"          coefficient of u^-r of a Gauss series,
                                                name in h hb e eb f fb
            | "z[" r "]"                        coefficient of the central series
    """

    def __init__(self, n, order):
        from .yangian import YangianContext
        self.n = n
        self.order = order
        self.ctx = YangianContext(n, order)
        self._gd = None
        self._z = None

    def gauss(self):
        if self._gd is None:
            from .gauss import gauss_decompose, symbolic_T
            self._gd = gauss_decompose(symbolic_T(self.ctx))
        return self._gd

    def evaluate(self, text):
        from .superalgebra import poly_text
        from .yangian import normal_form
        try:
            tree = ast.parse(text.strip(), mode="eval")
        except SyntaxError as exc:
            raise ExprError("syntax error", max((exc.offset or 1) - 1, 0))
        value = self._eval(tree.body)
        return poly_text(normal_form(self.ctx, value).terms)

    def _ints(self, node, count):
        items = node.elts if isinstance(node, ast.Tuple) else [node]
        if len(items) != count:
            raise ExprError("expected %d indices" % count, node.col_offset)
        out = []
        for item in items:
            sign = 1
            if isinstance(item, ast.UnaryOp) and isinstance(item.op, ast.USub):
                sign, item = -1, item.operand
            if not (isinstance(item, ast.Constant) and type(item.value) is int):
                raise ExprError("expected an integer index", item.col_offset)
            out.append(sign * item.value)
        return out

    def _eval(self, node):
        from .yangian import nf_mul, t_coeff
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return {(): mpq(node.value)} if node.value else {}
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            inner = self._eval(node.operand)
            return _scale(inner, -1) if isinstance(node.op, ast.USub) else inner
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Div):
                num, den = node.left, node.right
                if not (isinstance(num, ast.Constant) and isinstance(den, ast.Constant)
                        and type(num.value) is int and type(den.value) is int and den.value):
                    raise ExprError("division is only allowed between integers", node.col_offset)
                return {(): mpq(num.value, den.value)}
            a, b = self._eval(node.left), self._eval(node.right)
            if isinstance(node.op, ast.Add):
                return _add(a, b, 1)
            if isinstance(node.op, ast.Sub):
                return _add(a, b, -1)
            if isinstance(node.op, ast.Mult):
                return nf_mul(a, b)
            raise ExprError("unsupported operator", node.col_offset)
        if isinstance(node, ast.List):
            if len(node.elts) != 2:
                raise ExprError("a bracket takes two arguments", node.col_offset)
            a, b = (self._eval(x) for x in node.elts)
            odd = _parity(a) and _parity(b)
            return _add(nf_mul(a, b), nf_mul(b, a), 1 if odd else -1)
        if isinstance(node, ast.Subscript) and isinstance(node.value, ast.Name):
            name = node.value.id
            index = node.slice
            if name == "t":
                i, j, r = self._ints(index, 3)
                if not (1 <= abs(i) <= self.n and 1 <= abs(j) <= self.n and r >= 1):
                    raise ExprError("generator index out of range", node.col_offset)
                return t_coeff(i, j, r)
            if name in SERIES_NAMES:
                a, r = self._ints(index, 2)
                limit = self.n if name in ("h", "hb") else self.n - 1
                if not (1 <= a <= limit and 0 <= r <= self.order):
                    raise ExprError("series index out of range", node.col_offset)
                return dict(getattr(self.gauss(), name)(a).coefficient((r,)))
            if name == "z":
                (r,) = self._ints(index, 1)
                if not 0 <= r <= self.order:
                    raise ExprError("coefficient out of range", node.col_offset)
                if self._z is None:
                    from .center import z_of
                    from .gauss import symbolic_T
                    self._z = z_of(symbolic_T(self.ctx))
                return dict(self._z.coefficient(r))
            raise ExprError("unknown symbol %r" % name, node.col_offset)
        raise ExprError("unsupported syntax", getattr(node, "col_offset", 0))


def _scale(p, c):
    return {m: v * c for m, v in p.items()}


def _add(a, b, c):
    out = dict(a)
    for m, v in b.items():
        w = out.get(m, mpq(0)) + c * v
        if w:
            out[m] = w
        else:
            out.pop(m, None)
    return out


def _parity(p):
    from .superalgebra import mono_parity
    pars = {mono_parity(m) for m in p}
    if len(pars) > 1:
        raise ExprError("bracket of an inhomogeneous element", 0)
    return pars.pop() if pars else 0


@click.group()
def main():
    """Exact verification toolkit for the queer super-Yangian Y(q_n)."""


@main.command()
@click.option("--n", "n", type=int, default=2, show_default=True, help="Rank n of Y(q_n).")
@click.option("--order", type=int, default=4, show_default=True, help="Truncation order L.")
@click.option("--suite", "suites", multiple=True, type=click.Choice(SUITES),
              help="Suite to run (repeatable); default all that apply.")
@click.option("--threads", type=int, default=1, show_default=True, help="Worker processes.")
@click.option("--report", type=click.Path(dir_okay=False), default=None, help="JSON report path.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for random tests.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
def verify(n, order, suites, threads, report, seed, fmt):
    """Run verification suites; exit 0 iff every primary check passes."""
    if not suites:
        suites = [s for s in SUITES if not (s == "serre" and n < 3)]
    try:
        config = RunConfig(n, order, suites, threads, report, seed)
    except ConfigError as exc:
        raise click.UsageError(str(exc))
    rep = run(config)
    if report:
        write_report(rep, report)
    if fmt == "json":
        click.echo(json.dumps(rep, indent=2, sort_keys=True, default=str))
    else:
        for line in text_lines(rep):
            click.echo(line)
    code = exit_code(rep)
    if code == EXIT_PRECONDITION:
        for r in rep["results"]:
            if r["status"] == "precondition":
                click.echo("precondition failure in %s: %s" % (r["id"], r["detail"]), err=True)
    sys.exit(code)


@main.command("eval")
@click.argument("expression")
@click.option("--n", "n", type=int, default=1, show_default=True)
@click.option("--order", type=int, default=4, show_default=True)
def eval_command(expression, n, order):
    """Print the normal form of EXPRESSION at the given truncation."""
    if n < 1 or order < 1:
        raise click.UsageError("n and order must be positive")
    try:
        click.echo(Calculator(n, order).evaluate(expression))
    except ExprError as exc:
        raise click.UsageError("parse error: %s" % exc)


if __name__ == "__main__":
    main()
