from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from qyangian.rings import ScalarRing
from qyangian.series import DivisionPreconditionError, Series

R = ScalarRing()
L = 5


def bivariate(order=L):
    keys = st.tuples(st.integers(0, order), st.integers(0, order)).filter(lambda e: sum(e) <= order)
    return st.dictionaries(keys, st.integers(-4, 4).map(mpq), max_size=8).map(
        lambda d: Series(R, 2, order, d))


def univariate(order=L):
    return st.lists(st.integers(-4, 4).map(mpq), min_size=1, max_size=order + 1).map(
        lambda cs: Series.from_list(R, cs, order))


@settings(max_examples=80)
@given(bivariate(), bivariate(), bivariate())
def test_product_is_associative_and_commutative_over_scalars(a, b, c):
    assert ((a * b) * c - a * (b * c)).is_zero()
    assert (a * b - b * a).is_zero()


@settings(max_examples=80)
@given(bivariate())
def test_division_by_u_minus_v_inverts_multiplication(q):
    # (u - v) = (y - x) / (xy) with x = 1/u, y = 1/v
    s = q.mul_scalar_poly({(0, 1): 1, (1, 0): -1}).truncate(L)
    got = s.divide_u_minus_v()
    want = q.mul_scalar_poly({(1, 1): 1}).truncate(L)
    assert (got.truncate(L) - want).is_zero()


@settings(max_examples=80)
@given(bivariate())
def test_division_by_u_plus_v_inverts_multiplication(q):
    s = q.mul_scalar_poly({(0, 1): 1, (1, 0): 1}).truncate(L)
    got = s.divide_u_plus_v()
    want = q.mul_scalar_poly({(1, 1): 1}).truncate(L)
    assert (got.truncate(L) - want).is_zero()


def test_division_precondition_is_enforced():
    s = Series(R, 2, L, {(1, 0): mpq(1)})
    with pytest.raises(DivisionPreconditionError):
        s.divide_u_minus_v()


@given(univariate())
def test_negating_the_argument_is_an_involution(a):
    assert (a.substitute_neg().substitute_neg() - a).is_zero()


@given(univariate(), univariate())
def test_derivative_obeys_leibniz_rule(a, b):
    lhs = (a * b).derivative()
    rhs = a.derivative() * b + a * b.derivative()
    assert (lhs - rhs).is_zero()


def test_derivative_oracle():
    # d/du (u^-1 + 3 u^-2) = -u^-2 - 6 u^-3
    s = Series.from_list(R, [0, 1, 3], 4)
    assert s.derivative().coeffs == {(2,): -1, (3,): -6}


@given(bivariate())
def test_diagonal_restriction_matches_substitution(s):
    d = s.diagonal()
    for (r,), c in d.coeffs.items():
        assert c == sum((v for e, v in s.coeffs.items() if sum(e) == r), mpq(0))
