import numpy as np
import pytest

from octotriple.hadamard import (
    RowPermutation,
    SignMatrix,
    build,
    classify_symmetry,
    column_set_preserving_permutations,
    doubling_order_permutations,
    row_group_check,
)

A4_PRINTED = np.array([
    [1, 1, 1, 1],
    [1, -1, 1, -1],
    [1, 1, -1, -1],
    [1, -1, -1, 1],
])


def test_build_4_matches_printed_matrix():
    np.testing.assert_array_equal(build(4).entries, A4_PRINTED)


def test_build_8_row_ab():
    np.testing.assert_array_equal(build(8).entries[3], [1, -1, -1, 1, 1, -1, -1, 1])


@pytest.mark.parametrize("n", (2, 4, 8))
def test_build_is_normalized_symmetric_hadamard(n):
    m = build(n)
    assert np.all(m.entries[0] == 1)
    assert np.all(m.entries[:, 0] == 1)
    assert m.is_symmetric()
    np.testing.assert_array_equal(m.entries @ m.entries.T, n * np.eye(n, dtype=np.int64))
    np.testing.assert_array_equal(m.entries @ m.entries, n * np.eye(n, dtype=np.int64))


def test_build_rejects_bad_orders():
    for n in (1, 3, 6, 16):
        with pytest.raises(ValueError):
            build(n)


def test_sign_matrix_validation():
    with pytest.raises(ValueError):
        SignMatrix(4, np.zeros((4, 4)))
    with pytest.raises(ValueError):
        SignMatrix(4, np.ones((4, 2)))
    with pytest.raises(ValueError):
        SignMatrix(3, np.ones((3, 3)))


def test_render():
    assert build(2).render() == "++\n+-"
    assert build(4).render().splitlines()[1] == "+-+-"


# -- row group ------------------------------------------------------------------


@pytest.mark.parametrize("n", (2, 4, 8))
def test_rows_form_group_under_termwise_multiplication(n):
    assert row_group_check(build(n))


def test_flipped_sign_breaks_row_group():
    entries = build(8).entries.copy()
    entries[4, 6] = -entries[4, 6]
    assert not row_group_check(SignMatrix(8, entries))


# -- permutations -----------------------------------------------------------------


def test_row_permutation_validation_and_algebra():
    with pytest.raises(ValueError):
        RowPermutation((0, 0, 1))
    p = RowPermutation((1, 2, 0))
    q = p.inverse()
    assert q.map == (2, 0, 1)
    assert p.compose(q).map == (0, 1, 2)
    assert p.cycle_notation() == "(0 1 2)"
    assert RowPermutation((0, 1, 2)).cycle_notation() == "()"
    assert RowPermutation((1, 0, 3, 2)).cycle_notation() == "(0 1)(2 3)"


def test_identity_permutation_always_preserves_columns():
    for n in (2, 4):
        perms = column_set_preserving_permutations(build(n))
        assert tuple(range(n)) in {p.map for p in perms}


def test_a4_column_preserving_permutations_fix_the_top_row():
    perms = column_set_preserving_permutations(build(4))
    maps = {p.map for p in perms}
    # all six permutations of rows 1..3 qualify
    from itertools import permutations as iperm

    for rest in iperm((1, 2, 3)):
        assert (0,) + rest in maps
    assert len(maps) == 6


def test_doubling_order_permutations_count_168():
    perms = doubling_order_permutations(build(8))
    assert len(perms) == 168
    assert len({p.map for p in perms}) == 168


def test_doubling_order_permutations_rejects_other_orders():
    with pytest.raises(ValueError):
        doubling_order_permutations(build(4))


def test_automorphism_permutations_form_a_group():
    perms = doubling_order_permutations(build(8))
    maps = {p.map for p in perms}
    assert tuple(range(8)) in maps
    for p in perms:
        assert p.inverse().map in maps
    # closure on a deterministic sample plus full closure of a subgroup copy
    for p in perms[:20]:
        for q in perms[:20]:
            assert p.compose(q).map in maps


def test_every_automorphism_preserves_the_column_set():
    m = build(8)
    original = sorted(map(tuple, m.entries.T.tolist()))
    for p in doubling_order_permutations(m):
        permuted = m.permuted_rows(p)
        assert sorted(map(tuple, permuted.entries.T.tolist())) == original


def test_automorphisms_are_exactly_the_column_preserving_permutations():
    # brute force agrees with the linear-automorphism construction
    m = build(8)
    brute = {p.map for p in column_set_preserving_permutations(m)}
    linear = {p.map for p in doubling_order_permutations(m)}
    assert linear <= brute


def test_bit_swap_automorphism_exchanges_paired_rows():
    # swapping label bits 0 and 1 exchanges rows 1,2 and rows 5,6
    perms = doubling_order_permutations(build(8))
    target = (0, 2, 1, 3, 4, 6, 5, 7)
    assert target in {p.map for p in perms}
    m = build(8)
    original = sorted(map(tuple, m.entries.T.tolist()))
    permuted = m.permuted_rows(RowPermutation(target))
    assert sorted(map(tuple, permuted.entries.T.tolist())) == original


def test_classification_counts_28_symmetric_140_asymmetric():
    m = build(8)
    perms = doubling_order_permutations(m)
    sym, asym = classify_symmetry(perms, m)
    assert (sym, asym) == (28, 140)


def test_identity_is_in_the_symmetric_bucket():
    m = build(8)
    assert m.permuted_rows(RowPermutation(tuple(range(8)))).is_symmetric()


def test_an_asymmetric_automorphism_exists():
    m = build(8)
    perms = doubling_order_permutations(m)
    asym = [p for p in perms if not m.permuted_rows(p).is_symmetric()]
    assert asym
    for p in asym[:5]:
        permuted = m.permuted_rows(p)
        assert sorted(map(tuple, permuted.entries.T.tolist())) == \
            sorted(map(tuple, m.entries.T.tolist()))


def test_a4_swap_of_last_two_rows_reorders_columns_1342():
    # after swapping the last two rows, reading the columns left to right
    # gives the matrix's own rows in the order 1, 3, 4, 2
    swapped = build(4).permuted_rows(RowPermutation((0, 1, 3, 2)))
    order = (0, 2, 3, 1)
    for j in range(4):
        np.testing.assert_array_equal(swapped.entries[:, j], swapped.entries[order[j]])
    assert not swapped.is_symmetric()
