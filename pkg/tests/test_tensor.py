from gmpy2 import mpq

from qyangian.gauss import symbolic_T
from qyangian.tensor import (
    SeriesRing, pq_identity_list, verify_lambda_theta_rules, verify_operator_facts,
    verify_pq_identities, verify_pq_transform, yq_tensor,
)
from qyangian.yangian import YangianContext


def test_all_three_factor_permutation_identities_hold():
    results = verify_pq_identities()
    assert len(results) == 26
    assert all(ok for _, ok in results)


def test_identity_list_is_not_trivially_true():
    # distinct operators really differ, so the equalities carry content
    items = pq_identity_list()
    _, p12p13, _ = items[0]
    _, _, q13q23 = items[8]
    assert not (p12p13 == q13q23)


def test_operator_facts_for_small_ranks():
    for n in (1, 2):
        for label, ok in verify_operator_facts(n):
            assert ok, label


def _block_tensor(n=1, L=3):
    ctx = YangianContext(n, L)
    T = symbolic_T(ctx)
    blk = T.block(1, 1)
    ring = SeriesRing(ctx.ring, 1, L)
    return yq_tensor(blk.a, blk.b, ring)


def test_permutation_operators_move_a_yq_matrix_between_slots():
    X = _block_tensor()
    for label, ok in verify_pq_transform(X, arity=3):
        assert ok, label


def test_lambda_theta_rules_on_a_yq_matrix():
    X = _block_tensor()
    for label, ok in verify_lambda_theta_rules(X):
        assert ok, label


def test_lambda_theta_rules_reject_a_non_yq_matrix():
    X = _block_tensor()
    bad = X.map(lambda s: s)
    key = ((1, 1),)
    bad.terms[key] = bad.terms[key].scale(mpq(2))
    try:
        verify_lambda_theta_rules(bad)
    except ValueError:
        return
    raise AssertionError("non-YQ input was accepted")
