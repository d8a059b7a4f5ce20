import pytest

from qyangian.catalog import (
    CENTER_IDS, DRINFELD_IDS, EMBEDDING_IDS, MANIFEST, RANK2_IDS, RANK3_IDS, catalog, catalog_by_id,
)
from qyangian.expr import RelationDivisionError, Space, Evaluator, dm, u, v
from qyangian.verifier import (
    DEFAULT_BINDING, RelationPrecondition, Symbols, check_psi_instance, gauss_data,
    mutated_eafa_check, psi_composition_check, psi_embedding, substitute_generators, resolve_prime_binding,
    serresim_extraction, verify, verify_numeric, verify_psi_identities,
)


def test_manifest_is_covered_by_the_catalog():
    ids = set(catalog_by_id())
    assert set(MANIFEST) <= ids
    extras = ids - set(MANIFEST)
    assert all("#" in x or x.startswith("psi:") for x in extras), extras


def test_catalog_ids_are_unique_and_counts_match():
    ids = [s.id for s in catalog()]
    assert len(ids) == len(set(ids))
    assert len(DRINFELD_IDS) == 48
    assert len(RANK2_IDS) == 8 and len(RANK3_IDS) == 19
    assert len(EMBEDDING_IDS) == 2 and len(CENTER_IDS) == 10


@pytest.mark.parametrize("rid", ["eq:Dr:hahb", "eq:Dr:hafa", "eq:Dr:eaea", "eq:Dr:fafta"])
def test_symbolic_and_numeric_routes_agree_on_passing_relations(rid):
    assert verify(rid, 2, 4).passed
    assert verify_numeric(rid, 2, 4).passed


def test_mutated_relation_fails_with_a_witness():
    res = mutated_eafa_check(2, 4)
    assert res.status == "fail"
    assert res.witness and "x^" in res.witness


def test_prime_series_binding_is_the_plain_inverse_entries():
    binding, tried = resolve_prime_binding(2, 4)
    assert binding == DEFAULT_BINDING
    assert tried == [(DEFAULT_BINDING, "pass")]


def test_relation_below_its_minimal_rank_is_rejected():
    with pytest.raises(RelationPrecondition):
        verify("eq:q3:Serre", 2, 3)


def test_exact_division_precondition_is_reported():
    gd = gauss_data(2, 3)
    ev = Evaluator(Space(2, 0, 3, gd.ring), Symbols(gd))
    from qyangian.catalog import h
    with pytest.raises(RelationDivisionError):
        ev.value(dm(h(1, u)))


def test_simplified_serre_is_the_leading_coefficient_of_the_full_one():
    for a, b in ((1, 2), (2, 1)):
        ok, compared = serresim_extraction(a, b, 5)
        assert ok and compared > 0


def test_embedding_composes():
    assert psi_composition_check(1, 1, 3) == []
    assert psi_composition_check(1, 2, 3) == []


def test_embedding_composition_detects_a_wrong_map():
    # psi_1 o psi_1 compared against psi_1 itself must disagree somewhere
    inner = psi_embedding(1, 1, 3)
    outer = psi_embedding(1, 2, 3)
    wrong = psi_embedding(1, 1, 3)
    composed = inner.block(1, 1).entry(1, 1)
    target = wrong.block(1, 1).entry(1, 1)
    diffs = [r for r in range(1, 4)
             if substitute_generators(composed.coefficient((r,)), outer) != target.coefficient((r,))]
    assert diffs


def test_embedding_identity_requires_row_beyond_the_shift():
    with pytest.raises(RelationPrecondition):
        check_psi_instance(2, 2, 1, 1, 3)
    assert check_psi_instance(1, 2, 1, 1, 3).passed


def test_embedding_identities_printed_and_corrected():
    first, second = verify_psi_identities(1, 1, 4)
    assert first.passed and second.status == "fail"
    _, fixed = verify_psi_identities(1, 1, 4, "opposite_sign_first_factor_at_u")
    assert fixed.passed


def test_colored_sign_variant():
    assert verify("eq:q3:e1e2", 3, 4).passed
    assert verify("eq:q3:e1e2", 3, 4, variant="plus_sign").status == "fail"


@pytest.mark.parametrize("rid,variant", [
    ("eq:Dr:haha", "opposite_sign"),
    ("eq:Dr:htahta", "opposite_first_term"),
    ("eq:Dr:haea", "opposite_hbar_term"),
    ("eq:Dr:ftafta", "last_factor_at_minus_u"),
])
def test_printed_form_fails_and_recorded_correction_passes(rid, variant):
    printed = verify(rid, 2, 5)
    fixed = verify(rid, 2, 5, variant=variant)
    assert printed.status == "fail" and printed.witness
    assert fixed.passed


def test_diagonal_bracket_sign_is_undetected_at_low_order():
    # both signs agree through order 4; order 5 is the first that tells them apart
    assert verify("eq:Dr:haha", 2, 4).passed
    assert verify("eq:Dr:haha", 2, 4, variant="opposite_sign").passed


def test_decomposition_column_correction():
    assert verify("eq:ct:THEF1", 3, 3).status == "fail"
    assert verify("eq:ct:THEF1", 3, 3, variant="column_b").passed
    assert verify("eq:ct:THEF1", 2, 4).passed
