from gmpy2 import mpq
import pytest

from qyangian.catalog import Lam0, T, Tau, Tt, h
from qyangian.center import (
    CentralSeries, berezinian_check, centrality_check, ev_trace_formula, ev_symbolic_agreement,
    factor_checks, filtration_bounded, verify_lambda_defining, z_from_product, z_from_supertrace,
)
from qyangian.center import _gauss
from qyangian.catalog import RelationSpec
from qyangian.expr import u
from qyangian.rings import MatrixRing
from qyangian.superalgebra import padd
from qyangian.verifier import verify
from qyangian.yangian import nf_mul, t_coeff


def test_second_coefficient_oracle():
    # T dT~ = T^(1) u^-2 + ...; the supertrace of T^(1) on one block is 2 t11^(1)
    z = z_from_supertrace(1, 4)
    assert z.coefficient(0) == {(): 1}
    assert z.coefficient(1) == {}
    assert z.coefficient(2) == {m: -2 * c for m, c in t_coeff(1, 1, 1).items()}


def test_second_coefficient_oracle_rank_two():
    z = z_from_supertrace(2, 3)
    want = {}
    padd(want, t_coeff(1, 1, 1), mpq(-2))
    padd(want, t_coeff(2, 2, 1), mpq(-2))
    assert z.coefficient(2) == want


@pytest.mark.parametrize("n,L", [(1, 6), (2, 5)])
def test_supertrace_and_product_routes_agree(n, L):
    assert z_from_supertrace(n, L) == z_from_product(n, L)
    assert z_from_product(n, L) == z_from_product(n, L, reverse=True)


@pytest.mark.parametrize("n,L", [(1, 6), (2, 5), (3, 4)])
def test_central_series_is_even(n, L):
    z = z_from_supertrace(n, L)
    assert z.is_even()
    assert filtration_bounded(z)


def test_central_series_commutes_with_generators():
    for n in (1, 2):
        table = centrality_check(n, 6)
        assert table and not any(table.values())


def test_centrality_check_catches_a_non_central_term():
    z = z_from_supertrace(2, 6)
    extra = z.series._like({(4,): nf_mul(t_coeff(1, 1, 1), t_coeff(1, 2, 1))})
    table = centrality_check(2, 6, CentralSeries(z.series + extra))
    assert any(table.values())


def test_block_factors_are_even_and_commute_with_their_block():
    for f in factor_checks(_gauss(2, 5)):
        assert f["even"] and f["commutes_with_block"]


def test_lambda_identity_whole_and_blockwise():
    for n, L in ((1, 5), (2, 4)):
        whole, blocks = verify_lambda_defining(n, L)
        assert whole.passed and blocks.passed


def test_lambda_identity_fails_with_a_wrong_right_side():
    def build(b, c, n):
        lhs = 0
        for p in range(1, n + 1):
            lhs = lhs + Lam0 * T(p, b, 1, u) * Tau(Tt(c, p, 2, u), 2)
        return [(lhs, Lam0 * h(1, u) if b == c else 0)]
    spec = RelationSpec("negative", "center", 1, 2, 1, lambda n: iter([{"b": 1, "c": 1, "n": n}]), build)
    assert verify(spec, 1, 4).status == "fail"


def test_evaluation_formula_shifted_power_holds():
    for n in (1, 2, 3):
        rep = ev_trace_formula(n, 6)
        assert rep["shifted"]
        assert not rep["printed"]


def test_evaluation_oracle_rank_one():
    # ev(t11^(1)) = -(E11 + E-1-1), so ev(z_2) = 2
    rep = ev_trace_formula(1, 2)
    ring = MatrixRing(1)
    assert rep["ev_z"][2] == ring.text(ring.from_scalar(2))


def test_evaluation_commutes_with_the_construction():
    assert ev_symbolic_agreement(1, 5)
    assert ev_symbolic_agreement(2, 4)


def test_berezinian_identity():
    for row in berezinian_check(1, 6):
        assert row["ok"] and row["D_constant_zero"]
    for row in berezinian_check(1, 5, numeric=True):
        assert row["ok"]


def test_order_is_validated():
    with pytest.raises(ValueError):
        z_from_supertrace(1, 1)
