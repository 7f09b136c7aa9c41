import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import brute_max_subpair_length, selections
from pascalrank import (
    DimensionError,
    SubPairIndices,
    index_matrix,
    is_ordered_subpair,
    maximal_subpair,
    oracle_max_length,
)

R1 = [2, 7, 11, 14, 17, 20]
C1 = [0, 4, 9, 10, 15]

sel = st.sets(st.integers(0, 30), max_size=8).map(sorted)


@pytest.mark.parametrize(
    "rhat,chat,expected",
    [
        ([2, 11], [4, 15], True),
        ([2, 7, 11], [9, 10, 15], True),
        ([2, 7, 14], [4, 9, 15], True),
        ([], [], True),
        ([7], [4], False),  # 7 > 4
        ([2, 7], [4], False),  # unequal lengths
        ([3], [4], False),  # 3 is not in r
        ([2], [5], False),  # 5 is not in c
        ([7, 2], [9, 10], False),
    ],
)
def test_is_ordered_subpair(rhat, chat, expected):
    if rhat != sorted(set(rhat)):
        with pytest.raises(ValueError):
            is_ordered_subpair(rhat, chat, R1, C1)
    else:
        assert is_ordered_subpair(rhat, chat, R1, C1) is expected


def test_six_by_five_pair():
    pair = maximal_subpair(R1, C1)
    assert pair.alpha == (0, 1, 2)
    assert pair.beta == (1, 2, 4)
    assert list(pair.rows(R1)) == [2, 7, 11]
    assert list(pair.cols(C1)) == [4, 9, 15]


@pytest.mark.parametrize(
    "r,c,alpha,beta",
    [
        ([5], [0, 1], (), ()),
        ([0, 1, 2], [0, 1, 2], (0, 1, 2), (0, 1, 2)),
        ([], [0, 1], (), ()),
        ([0, 1], [], (), ()),
        ([3], [3], (0,), (0,)),
        # every row fits under the last column but pairing runs out of columns
        ([0, 1, 2, 3], [5, 6], (0, 1), (0, 1)),
    ],
)
def test_maximal_subpair_small(r, c, alpha, beta):
    pair = maximal_subpair(r, c)
    assert (pair.alpha, pair.beta) == (alpha, beta)


@pytest.mark.parametrize(
    "r,c,expected", [(R1, C1, 3), ([5], [0, 1], 0), ([], [], 0), ([0, 1, 2, 3], [5, 6], 2)]
)
def test_oracle_examples(r, c, expected):
    assert oracle_max_length(r, c) == expected


def test_dp_oracle_matches_brute_force():
    family = list(selections(range(7), 4))
    for r in family:
        for c in family:
            assert oracle_max_length(r, c) == brute_max_subpair_length(r, c), (r, c)


def test_greedy_matches_dp_on_random_pairs():
    rng = random.Random(20161)
    for _ in range(200):
        r = sorted(rng.sample(range(31), rng.randint(0, 8)))
        c = sorted(rng.sample(range(31), rng.randint(0, 8)))
        assert len(maximal_subpair(r, c)) == oracle_max_length(r, c), (r, c)


@settings(max_examples=300)
@given(sel, sel)
def test_greedy_certificate_properties(r, c):
    pair = maximal_subpair(r, c)
    assert len(pair) == oracle_max_length(r, c)
    assert pair.alpha == tuple(range(len(pair)))
    assert is_ordered_subpair(pair.rows(r), pair.cols(c), r, c)
    assert all(0 <= b < len(c) for b in pair.beta)


@given(
    st.sets(st.integers(0, 10**6), max_size=40).map(sorted),
    st.sets(st.integers(0, 10**6), max_size=40).map(sorted),
)
def test_greedy_matches_dp_large_values(r, c):
    assert len(maximal_subpair(r, c)) == oracle_max_length(r, c)


def test_index_matrix_six_by_five():
    im = index_matrix(SubPairIndices((0, 1, 2), (1, 2, 4)), 6, 5)
    ones = [(i, j) for i in range(6) for j in range(5) if im[i, j]]
    assert ones == [(0, 1), (1, 2), (2, 4)]
    assert sum(sum(row) for row in im.entries) == 3


def test_index_matrix_trivial():
    assert index_matrix(SubPairIndices(), 2, 2).tolist() == [[0, 0], [0, 0]]
    assert index_matrix(SubPairIndices((0,), (0,)), 1, 1).tolist() == [[1]]


def test_index_matrix_bounds():
    with pytest.raises(DimensionError):
        index_matrix(SubPairIndices((0, 3), (0, 1)), 3, 2)


@given(sel, sel)
def test_index_matrix_ones_in_distinct_rows_and_columns(r, c):
    pair = maximal_subpair(r, c)
    im = index_matrix(pair, len(r), len(c))
    ones = [(i, j) for i in range(im.rows) for j in range(im.cols) if im[i, j] == 1]
    assert len(ones) == len(pair)
    assert len({i for i, _ in ones}) == len({j for _, j in ones}) == len(pair)


def test_subpair_indices_validation():
    with pytest.raises(ValueError):
        SubPairIndices((0, 1), (2,))
    with pytest.raises(ValueError):
        SubPairIndices((1, 0), (0, 1))
