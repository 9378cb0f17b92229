"""Smoke tests for the compiled module: worked examples and a few invariants."""

import pytest

import inckk


def test_rank_unrank_roundtrip():
    assert inckk.rank([1, 2, 3]) == 1
    assert inckk.rank([2, 3, 5]) == 7
    assert inckk.unrank(7, 3) == [2, 3, 5]
    for d in (1, 2, 3, 4):
        for m in range(1, 200):
            assert inckk.rank(inckk.unrank(m, d)) == m


def test_binomial_rep_resums():
    assert inckk.binomial_rep(7, 3) == [(4, 3), (3, 2)]
    assert inckk.binomial_rep(0, 5) == []


def test_orders():
    assert inckk.squashed_cmp([1, 3, 4], [2, 3, 4]) == -1
    assert inckk.squashed_cmp([2, 3, 4], [1, 2, 5]) == -1
    assert inckk.borel_leq([1, 3, 4], [2, 3, 4])
    assert not inckk.borel_leq([2, 3, 4], [1, 2, 5])
    assert inckk.family_cmp([[1, 2, 3]], [[1, 2, 4]]) == -1


def test_inc_image_worked_example():
    image = inckk.inc_image([[1, 2, 4], [1, 3, 5]])
    assert image == [
        [1, 2, 4],
        [1, 2, 5],
        [1, 3, 5],
        [2, 3, 5],
        [1, 3, 6],
        [1, 4, 6],
        [2, 4, 6],
    ]
    assert inckk.inc_image_set([3]) == [[3], [4]]


def test_partial_compressions_worked_example():
    family = [[1, 2, 6], [1, 3, 5], [2, 3, 5], [3, 5, 6]]
    assert inckk.left_compress(family) == [[1, 2, 3], [1, 2, 4], [2, 3, 4], [3, 4, 5]]
    assert inckk.right_compress(family) == [[1, 2, 5], [1, 3, 5], [1, 2, 6], [1, 3, 6]]
    assert inckk.fixpoint(family) == [[1, 2, 3], [1, 2, 4], [1, 3, 4], [1, 2, 5]]
    assert inckk.is_shifted(inckk.fixpoint(family))


def test_numeric_operators():
    assert inckk.shadow_num(0, 3) == 0
    assert inckk.shadow_num(2, 3) == 5
    assert inckk.inc_num(7, 3) == 16
    assert inckk.inc_num(0, 3) == 0


def test_feasibility():
    assert inckk.kk_feasible([3, 3, 1]) == (True, None)
    assert inckk.kk_feasible([1, 1]) == (False, 2)
    feasible, n, d, which = inckk.chain_feasible([[2], [2]])
    assert (feasible, n, d, which) == (False, 1, 1, "growth")


def test_complex_round_trip():
    grades = {1: [[1], [2]], 2: [[1, 2]]}
    assert inckk.complex_f_vector(grades) == [2, 1]
    image = inckk.inc_complex(grades)
    assert image[1] == [[1], [2], [3]]
    assert image[2] == [[1, 2], [1, 3], [2, 3]]
    with pytest.raises(ValueError):
        inckk.validate_complex({2: [[1, 2]]})


def test_chain_construction():
    chain = inckk.construct_chain([[2], [3]])
    assert chain == [{1: [[1], [2]]}, {1: [[1], [2], [3]]}]
    invariant, _, _ = inckk.check_chain(chain)
    assert invariant


def test_minimality_sweep():
    report = inckk.verify_min_theorem(4, 2, 2)
    assert report["checked"] == 15
    assert report["violation_count"] == 0
    assert report["minimum"] == inckk.inc_num(2, 2) == 5
    assert report["minimizers"][0] == inckk.compressed_family(2, 2)


def test_shift_witness_exists():
    witness = inckk.search_shift_noninclusion(6, 2, 4)
    assert witness is not None


def test_segment_lemmas():
    report = inckk.verify_segment_lemmas(6, 3)
    assert report["violations"] == []


def test_identities_on_random_slice():
    assert inckk.verify_identities([[1, 2, 6], [1, 3, 5], [2, 3, 5], [3, 5, 6]])
