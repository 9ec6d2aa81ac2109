from collections import Counter
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

import modules.stirling as stirling_module
from modules.families import bell_number_from_poly
from modules.stirling import (
    MODERN_LAYOUT,
    STIRLING_LAYOUT,
    SizeLimitError,
    bell_number,
    count_set_partitions,
    first_kind_table,
    orthogonality_sum,
    second_kind_table,
    set_partitions,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
    stirling2_explicit,
)


def test_second_kind_examples():
    assert stirling2(0, 0) == 1
    assert stirling2(4, 2) == 7
    assert stirling2(9, 7) == 462
    assert stirling2(10, 5) == 42525
    assert stirling2(3, 5) == 0
    assert stirling2(5, 0) == 0


def test_second_kind_table_rows():
    table = second_kind_table(3)
    assert [list(table.row(m)) for m in range(4)] == [[1], [0, 1], [0, 1, 1], [0, 1, 3, 1]]
    assert second_kind_table(0).row(0) == (1,)


def test_first_kind_table_rows():
    table = first_kind_table(9)
    assert table.row(4) == (0, 6, 11, 6, 1)
    assert table.row(5) == (0, 24, 50, 35, 10, 1)
    assert table.entry(9, 3) == 118124


def test_signed_first_kind():
    assert [stirling1_signed(3, k) for k in range(4)] == [0, 2, -3, 1]
    assert first_kind_table(3).signed().row(3) == (0, 2, -3, 1)
    assert stirling1_unsigned(4, 2) == 11


def test_triangle_entry_above_diagonal_is_zero():
    table = second_kind_table(4)
    assert table.entry(2, 3) == 0
    with pytest.raises(IndexError):
        table.entry(5, 1)


@pytest.mark.parametrize("m", range(13))
def test_three_second_kind_routes_agree(m):
    row = second_kind_table(12).row(m)
    for n in range(m + 1):
        assert stirling2(m, n) == stirling2_explicit(m, n) == count_set_partitions(m, n) == row[n]


def test_recurrence_and_explicit_sum_agree_to_sixty():
    table = second_kind_table(60)
    for m in range(61):
        for n in range(m + 1):
            assert stirling2_explicit(m, n) == table.entry(m, n)


def test_set_partitions_of_three():
    partitions = list(set_partitions(3))
    assert len(partitions) == 5
    assert partitions[0] == ((1, 2, 3),)
    assert ((1,), (2,), (3,)) in partitions
    for p in partitions:
        assert sorted(x for block in p for x in block) == [1, 2, 3]


def test_set_partitions_of_empty_set():
    assert list(set_partitions(0)) == [()]


def test_enumeration_size_limit():
    with pytest.raises(SizeLimitError):
        list(set_partitions(13))
    with pytest.raises(SizeLimitError):
        count_set_partitions(13, 2)


def test_table_size_limit():
    with pytest.raises(SizeLimitError):
        second_kind_table(201)
    with pytest.raises(ValueError):
        first_kind_table(-1)


def test_negative_indices_rejected():
    with pytest.raises(ValueError):
        stirling2(-1, 0)


def test_bell_numbers():
    assert [bell_number(m) for m in range(9)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140]


@pytest.mark.parametrize("m", range(15))
def test_row_sums_match_exponential_polynomial(m):
    assert second_kind_table(14).row_sums()[m] == bell_number_from_poly(m)


@given(st.integers(min_value=0, max_value=25), st.integers(min_value=0, max_value=25))
def test_orthogonality(m, n):
    assert orthogonality_sum(m, n) == (1 if m == n else 0)


def test_layouts():
    table = second_kind_table(2)
    assert table.rows(MODERN_LAYOUT) == [[1, None, None], [0, 1, None], [0, 1, 1]]
    assert table.rows(STIRLING_LAYOUT) == [[1, 0, 0], [None, 1, 1], [None, None, 1]]
    with pytest.raises(ValueError):
        table.rows("diagonal")


@pytest.mark.parametrize("m", range(9))
def test_partition_count_matches_block_tally(m):
    tally = Counter(len(partition) for partition in set_partitions(m))
    for n in range(m + 2):
        assert count_set_partitions(m, n) == tally[n]


def test_partition_count_enumerates_full_length_strings(monkeypatch):
    lengths = []
    original = stirling_module._restricted_growth_strings

    def recording(length):
        lengths.append(length)
        return original(length)

    stirling_module._block_count_histogram.cache_clear()
    monkeypatch.setattr(stirling_module, "_restricted_growth_strings", recording)
    try:
        assert count_set_partitions(4, 2) == 7
        assert count_set_partitions(4, 3) == 6
    finally:
        stirling_module._block_count_histogram.cache_clear()
    assert lengths == [4]


@pytest.mark.parametrize("m", range(1, 21))
def test_single_cycle_counts(m):
    assert stirling1_unsigned(m, 1) == factorial(m - 1)
    assert first_kind_table(20).entry(m, 1) == factorial(m - 1)


@pytest.mark.parametrize("n", range(51))
def test_one_pair_partitions(n):
    assert stirling2(n + 1, n) == n * (n + 1) // 2
    assert second_kind_table(51).entry(n + 1, n) == n * (n + 1) // 2


def test_orthogonality_exhaustive():
    for m in range(26):
        for n in range(26):
            assert orthogonality_sum(m, n) == (1 if m == n else 0), (m, n)
