import json

from click.testing import CliRunner
import pytest

from qyangian.cli import Calculator, ExprError, main
from qyangian.runner import ConfigError, RunConfig, exit_code, report_body, run, write_report


def invoke(*args):
    return CliRunner().invoke(main, list(args))


def test_eval_ordered_square():
    res = invoke("eval", "t[1,1,1]*t[1,1,1]", "--n", "1")
    assert res.exit_code == 0
    assert res.output.strip() == "1 * t[1,1,1] t[1,1,1]"


def test_eval_bracket_drops_to_degree_one():
    res = invoke("eval", "[t[1,2,1], t[2,1,1]]", "--n", "2", "--order", "3")
    assert res.exit_code == 0
    assert res.output.strip() == "1 * t[1,1,1] + -1 * t[2,2,1]"


def test_eval_constant():
    assert invoke("eval", "1").output.strip() == "1"


def test_eval_series_and_center_accessors():
    calc = Calculator(2, 3)
    assert calc.evaluate("h[1,1] - t[1,1,1]") == "0"
    assert calc.evaluate("z[2] + 2*t[1,1,1] + 2*t[2,2,1]") == "0"
    assert calc.evaluate("1/2 + 1/2") == "1"


def test_eval_parse_error_reports_position():
    res = invoke("eval", "t[1,1,1] * (")
    assert res.exit_code == 2
    assert "position" in res.output
    with pytest.raises(ExprError) as info:
        Calculator(1, 2).evaluate("t[1,1,1] + foo[2]")
    assert info.value.position == 11


def test_eval_rejects_out_of_range_generator():
    with pytest.raises(ExprError):
        Calculator(1, 2).evaluate("t[2,1,1]")


def test_serre_suite_needs_rank_three():
    res = invoke("verify", "--suite", "serre", "--n", "2")
    assert res.exit_code == 2
    with pytest.raises(ConfigError):
        RunConfig(n=2, suites=["serre"])


def test_config_invariants():
    for kw in ({"n": 0}, {"order": 1}, {"threads": 0}):
        with pytest.raises(ConfigError):
            RunConfig(**kw)


def test_tensor_suite_passes_quickly(tmp_path):
    path = tmp_path / "report.json"
    res = invoke("verify", "--suite", "tensor", "--report", str(path))
    assert res.exit_code == 0
    rep = json.loads(path.read_text())
    assert rep["schema"] == 1
    assert rep["summary"]["primary"]["fail"] == 0
    assert rep["timing"]["total_seconds"] < 1.0
    ids = [r["id"] for r in rep["results"]]
    assert ids == sorted(ids)


def test_failing_printed_form_sets_exit_code(tmp_path):
    res = invoke("verify", "--suite", "center", "--n", "1", "--order", "4", "--format", "json")
    assert res.exit_code == 1
    rep = json.loads(res.output)
    failing = {(r["id"], r["variant"]) for r in rep["results"] if r["status"] == "fail"}
    assert failing == {("center:ev-formula", None)}


def test_report_is_deterministic_apart_from_timing(tmp_path):
    cfg = dict(n=2, order=4, suites=["gauss", "embedding"], seed=3)
    a = run(RunConfig(threads=1, **cfg))
    b = run(RunConfig(threads=2, **cfg))
    assert json.dumps(report_body(a), sort_keys=True) == json.dumps(report_body(b), sort_keys=True)
    write_report(a, tmp_path / "a.json")
    assert not [p for p in tmp_path.iterdir() if p.name.startswith(".report-")]


def test_exit_code_contract():
    def rep(p, f, c):
        return {"summary": {"primary": {"pass": p, "fail": f, "precondition": c}}}
    assert exit_code(rep(3, 0, 0)) == 0
    assert exit_code(rep(3, 1, 0)) == 1
    assert exit_code(rep(3, 1, 1)) == 3


def test_precondition_failure_is_reported_distinctly(monkeypatch):
    from qyangian import runner
    from qyangian.series import DivisionPreconditionError

    def boom(*args):
        raise DivisionPreconditionError("numerator does not vanish")
    monkeypatch.setattr(runner, "_task_gauss", boom)
    res = invoke("verify", "--suite", "gauss", "--n", "1", "--order", "2")
    assert res.exit_code == 3
