"""Lexicographic permutation table and ranking."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bipfs import factorials, perm_table, rank_of, unrank


def test_factorials_values():
    assert factorials(6).tolist() == [1, 1, 2, 6, 24, 120, 720]


def test_table_shape_and_dtype():
    t = perm_table(5)
    assert t.shape == (120, 5)
    assert t.dtype == np.uint8


def test_table_rows_are_permutations():
    t = perm_table(4)
    for row in t:
        assert sorted(row.tolist()) == [0, 1, 2, 3]
    # all distinct
    assert len({tuple(r) for r in t.tolist()}) == 24


def test_table_is_lexicographically_sorted():
    t = perm_table(4).tolist()
    assert t == sorted(t)
    assert t[0] == [0, 1, 2, 3]
    assert t[-1] == [3, 2, 1, 0]


def test_rank_matches_table_position():
    t = perm_table(5)
    for i in (0, 1, 17, 59, 118, 119):
        assert rank_of(t[i]) == i


@given(st.integers(min_value=1, max_value=7), st.data())
@settings(max_examples=60, deadline=None)
def test_rank_unrank_roundtrip(n, data):
    import math

    rank = data.draw(st.integers(min_value=0, max_value=math.factorial(n) - 1))
    perm = unrank(n, rank)
    assert sorted(perm) == list(range(n))
    assert rank_of(perm) == rank


def test_unrank_rejects_out_of_range():
    with pytest.raises(ValueError):
        unrank(3, 6)
    with pytest.raises(ValueError):
        unrank(3, -1)
