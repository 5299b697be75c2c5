import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from warplis.lis import banded_his_weight, banded_lis_length, lis_length


def exhaustive_lis(seq, band_lo=None, band_hi=None):
    best = 0
    n = len(seq)
    for mask in range(1 << n):
        picked = [seq[i] for i in range(n) if mask >> i & 1]
        if band_lo is not None and any(not band_lo <= x <= band_hi for x in picked):
            continue
        if all(x < y for x, y in zip(picked, picked[1:])):
            best = max(best, len(picked))
    return best


def exhaustive_his(values, weights, band_lo, band_hi):
    best = 0
    n = len(values)
    for mask in range(1 << n):
        picked = [(values[i], weights[i]) for i in range(n) if mask >> i & 1]
        if any(not band_lo <= v <= band_hi for v, _ in picked):
            continue
        if all(v < u for (v, _), (u, _) in zip(picked, picked[1:])):
            best = max(best, sum(w for _, w in picked))
    return best


def test_lis_examples():
    assert lis_length([]) == 0
    assert lis_length([2, 1, 3]) == 2
    assert lis_length(list(range(1, 9))) == 8
    assert lis_length([3, 3, 3]) == 1  # strict


def test_banded_lis_examples():
    assert banded_lis_length([2, 1, 3], 1, 3, 1, 3) == 2
    assert banded_lis_length([2, 1, 3], 1, 0, 1, 3) == 0
    assert banded_lis_length([2, 1, 3], 2, 3, 1, 3) == 2


def test_banded_his_examples():
    assert banded_his_weight([1, 4, 3, 2, 5], [0, 0, 1, 1, 1], 1, 5, 1, 5) == 2
    assert banded_his_weight([1, 2], [0, 0], 1, 2, 1, 2) == 0
    assert banded_his_weight([7], [5], 1, 1, 1, 9) == 5


@settings(max_examples=200, derandomize=True)
@given(st.lists(st.integers(min_value=-5, max_value=5), max_size=10))
def test_lis_matches_exhaustive(seq):
    assert lis_length(seq) == exhaustive_lis(seq)


@settings(max_examples=150, derandomize=True)
@given(
    st.lists(st.integers(min_value=0, max_value=6), max_size=9),
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=0, max_value=6),
)
def test_banded_lis_matches_exhaustive(seq, lo, hi):
    assert banded_lis_length(seq, 1, len(seq), lo, hi) == exhaustive_lis(seq, lo, hi)


@settings(max_examples=150, derandomize=True)
@given(
    st.lists(
        st.tuples(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=4)),
        max_size=8,
    )
)
def test_his_matches_exhaustive(pairs):
    values = [v for v, _ in pairs]
    weights = [w for _, w in pairs]
    assert banded_his_weight(values, weights, 1, len(values), 0, 6) == exhaustive_his(
        values, weights, 0, 6
    )


@settings(max_examples=100, derandomize=True)
@given(st.lists(st.integers(min_value=0, max_value=9), max_size=12))
def test_unit_weights_reduce_his_to_lis(seq):
    ones = [1] * len(seq)
    assert banded_his_weight(seq, ones, 1, len(seq), 0, 9) == banded_lis_length(
        seq, 1, len(seq), 0, 9
    )


def test_full_band_equals_plain_lis():
    for seq in itertools.permutations(range(1, 6)):
        assert lis_length(seq) == banded_lis_length(seq, 1, len(seq), 1, 5)


def test_real_weights():
    assert banded_his_weight([1, 2], [0.5, 0.25], 1, 2, 1, 2) == pytest.approx(0.75)


def test_negative_weights_rejected():
    with pytest.raises(ValueError):
        banded_his_weight([1], [-1], 1, 1, 1, 1)
