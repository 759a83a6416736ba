import pytest

from flagcone.subsets import (complement, even_sets, fibonacci_dim,
                              interval_mask, is_even_set, mask_key, mask_of,
                              maximal_runs, parse_mask_key, ranks_of,
                              reverse_mask, submasks)


def test_mask_round_trip():
    mask = mask_of([1, 3, 4])
    assert ranks_of(mask) == (1, 3, 4)
    assert mask_key(mask) == "1,3,4"
    assert parse_mask_key("1,3,4") == mask
    assert parse_mask_key("") == 0


def test_interval_and_runs():
    assert interval_mask(2, 4) == mask_of([2, 3, 4])
    assert maximal_runs(mask_of([1, 2, 4, 5])) == [(1, 2), (4, 5)]
    assert maximal_runs(0) == []
    assert maximal_runs(mask_of([1, 2, 3])) == [(1, 3)]


def test_even_sets():
    assert is_even_set(0)
    assert is_even_set(mask_of([1, 2]))
    assert not is_even_set(mask_of([1, 2, 3]))
    assert is_even_set(mask_of([1, 2, 3, 4]))
    assert not is_even_set(mask_of([2]))
    # Fibonacci dimensions: e_2=2, e_6=13 with 13 even subsets of [1,6]
    assert [fibonacci_dim(n) for n in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]
    for n in range(9):
        assert len(even_sets(n)) == fibonacci_dim(n)


def test_complement_reverse_submasks():
    mask = mask_of([1, 4])
    assert complement(mask, 4) == mask_of([2, 3])
    assert reverse_mask(mask, 4) == mask_of([1, 4])
    assert reverse_mask(mask_of([1]), 4) == mask_of([4])
    assert sorted(submasks(mask_of([1, 2]))) == [0, 1, 2, 3]


def test_bad_interval():
    with pytest.raises(ValueError):
        interval_mask(3, 2)
