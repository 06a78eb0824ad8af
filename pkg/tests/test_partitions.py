"""Tests for Young diagram combinatorics."""
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cue_moments.partitions import Partition, enumerate_partitions


def brute_force_count(n, max_part=None, max_len=None):
    """Independent partition counter (simple recursion, no shared code)."""

    def count(remaining, cap, length):
        if remaining == 0:
            return 1
        if max_len is not None and length >= max_len:
            return 0
        return sum(
            count(remaining - p, p, length + 1)
            for p in range(min(cap, remaining), 0, -1)
        )

    return count(n, n if max_part is None else min(n, max_part), 0)


@st.composite
def partition_strategy(draw, max_n=12):
    n = draw(st.integers(min_value=0, max_value=max_n))
    parts = []
    cap = n
    remaining = n
    while remaining > 0:
        p = draw(st.integers(min_value=1, max_value=min(cap, remaining)))
        parts.append(p)
        cap = p
        remaining -= p
    return Partition(tuple(parts))


def test_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_enumerate_p4():
    got = enumerate_partitions(4)
    assert [p.parts for p in got] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumerate_empty():
    assert enumerate_partitions(0) == [Partition()]
    assert Partition().size == 0


def test_enumerate_max_part():
    got = enumerate_partitions(4, max_part=2)
    assert [p.parts for p in got] == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumerate_max_len():
    got = enumerate_partitions(4, max_len=2)
    assert [p.parts for p in got] == [(4,), (3, 1), (2, 2)]


@given(st.integers(min_value=0, max_value=20))
def test_counts_match_brute_force(n):
    assert len(enumerate_partitions(n)) == brute_force_count(n)


@given(
    st.integers(min_value=0, max_value=14),
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=6),
)
def test_constrained_counts_match_brute_force(n, mp, ml):
    assert len(enumerate_partitions(n, max_part=mp, max_len=ml)) == brute_force_count(
        n, max_part=mp, max_len=ml
    )


def test_transpose_examples():
    assert Partition((2, 1)).transpose() == Partition((2, 1))
    assert Partition((3,)).transpose() == Partition((1, 1, 1))


@given(partition_strategy())
def test_transpose_involution_and_size(lam):
    assert lam.transpose().transpose() == lam
    assert lam.transpose().size == lam.size


def test_hook_length_examples():
    assert Partition((1,)).hook_length(1, 1) == 1
    lam = Partition((2, 1))
    assert lam.hook_length(1, 1) == 3
    assert lam.hook_length(1, 2) == 1
    assert lam.hook_length(2, 1) == 1
    square = Partition((2, 2))
    prod = 1
    for i, j in square.boxes():
        prod *= square.hook_length(i, j)
    assert prod == 12


def test_hook_length_outside_box_raises():
    with pytest.raises(ValueError):
        Partition((2, 1)).hook_length(2, 2)


@given(partition_strategy(max_n=8))
def test_hook_product_divides_factorial(lam):
    # The number of standard tableaux |lam|! / prod(hooks) is an integer.
    prod = 1
    for i, j in lam.boxes():
        prod *= lam.hook_length(i, j)
    assert factorial(lam.size) % prod == 0


@given(partition_strategy())
def test_box_count_is_size(lam):
    assert sum(1 for _ in lam.boxes()) == lam.size


def test_part_access_zero_padded():
    lam = Partition((3, 1))
    assert lam.part(1) == 3
    assert lam.part(2) == 1
    assert lam.part(5) == 0
    assert lam.to_json() == [3, 1]
