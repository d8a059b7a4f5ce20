from gmpy2 import mpq
import pytest

from qyangian.gauss import (
    BlockMatrix, YQMatrix, full_multiply, gauss_decompose, numeric_T, symbolic_T, yq_invert,
    yq_multiply,
)
from qyangian.rings import ScalarRing
from qyangian.series import DivisionPreconditionError, Series
from qyangian.yangian import YangianContext, ev_poly, t_coeff

R = ScalarRing()


def _yq(a, b, L=5):
    return YQMatrix(Series.from_list(R, [mpq(x) for x in a], L),
                    Series.from_list(R, [mpq(x) for x in b], L))


def test_yq_product_matches_full_matrix_product():
    X, Y = _yq([1, 2, -1, 3], [0, 1, 4]), _yq([2, 0, 5], [0, -3, 1, 1])
    got = yq_multiply(X, Y).full()
    want = full_multiply(X.full(), Y.full())
    assert all((got[k] - want[k]).is_zero() for k in got)


def test_yq_inverse_is_two_sided():
    X = _yq([1, 2, -1, 3], [0, 1, 4])
    inv = yq_invert(X)
    one = YQMatrix.identity(R, 5)
    assert (X * inv - one).is_zero()
    assert (inv * X - one).is_zero()


def test_yq_inverse_needs_invertible_constant():
    with pytest.raises(DivisionPreconditionError):
        yq_invert(_yq([0, 1], [0, 1]))


@pytest.mark.parametrize("n,L", [(1, 5), (2, 6), (3, 4)])
def test_factors_reconstruct_the_generator_matrix(n, L):
    ctx = YangianContext(n, L)
    T = symbolic_T(ctx)
    gd = gauss_decompose(T)
    assert (gd.reconstruct() - T).is_zero()


def test_both_routes_give_the_same_factors():
    T = symbolic_T(YangianContext(3, 4))
    a, b = gauss_decompose(T), gauss_decompose(T, "quasideterminant")
    for k in a.H:
        assert (a.H[k] - b.H[k]).is_zero()
    for k in a.E:
        assert (a.E[k] - b.E[k]).is_zero()
        assert (a.F[(k[1], k[0])] - b.F[(k[1], k[0])]).is_zero()


def test_level_one_gauss_generators_are_level_one_entries():
    # H = 1 + O(u^-1), so every factor agrees with T at u^-1
    gd = gauss_decompose(symbolic_T(YangianContext(2, 3)))
    assert gd.h(1).coefficient((1,)) == t_coeff(1, 1, 1)
    assert gd.h(2).coefficient((1,)) == t_coeff(2, 2, 1)
    assert gd.hb(2).coefficient((1,)) == t_coeff(-2, 2, 1)
    assert gd.e(1).coefficient((1,)) == t_coeff(1, 2, 1)
    assert gd.eb(1).coefficient((1,)) == t_coeff(-1, 2, 1)
    assert gd.f(1).coefficient((1,)) == t_coeff(2, 1, 1)


def test_second_coefficient_of_e_oracle():
    # e^(2) = t12^(2) - (H^(1) T12^(1))_{11 entry}, with the odd-odd sign
    from qyangian.yangian import nf_mul
    from qyangian.superalgebra import padd
    gd = gauss_decompose(symbolic_T(YangianContext(2, 3)))
    want = dict(t_coeff(1, 2, 2))
    padd(want, nf_mul(t_coeff(1, 1, 1), t_coeff(1, 2, 1)), mpq(-1))
    # x_{1,-1}^(1) = -x_{-1,1}^(1), and the odd-odd product carries a minus sign
    padd(want, nf_mul(t_coeff(-1, 1, 1), t_coeff(-1, 2, 1)), mpq(-1))
    assert gd.e(1).coefficient((2,)) == want


def test_numeric_factors_match_evaluation_of_symbolic_factors():
    for n in (2, 3):
        ctx = YangianContext(n, 4)
        gd = gauss_decompose(symbolic_T(ctx))
        Tn = numeric_T(ctx)
        nd = gauss_decompose(Tn)
        image = gd.map(lambda p: ev_poly(p, n), Tn.ring)
        for k in nd.H:
            assert (image.H[k] - nd.H[k]).is_zero()
        for k in nd.E:
            assert (image.E[k] - nd.E[k]).is_zero()


def test_perturbed_factor_breaks_reconstruction():
    ctx = YangianContext(2, 4)
    T = symbolic_T(ctx)
    gd = gauss_decompose(T)
    blk = gd.E[(1, 2)]
    bump = Series(ctx.ring, 1, 4, {(3,): t_coeff(1, 1, 1)})
    gd.E[(1, 2)] = YQMatrix(blk.a + bump, blk.b)
    assert not (gd.reconstruct() - T).is_zero()


def test_block_matrix_identity_is_neutral():
    T = symbolic_T(YangianContext(2, 3))
    one = BlockMatrix.identity(2, T.ring, 3)
    assert (one * T - T).is_zero()
