
import pytest

from conftest import random_instance
from warplis.dp import dtw_alignment, dtw_all_semilocal_naive, dtw_distance
from warplis.errors import RangeError
from warplis.model import DissimilaritySpec, TimeSeries, build_dissimilarity


def _table(a, b, kind="absolute-difference"):
    return build_dissimilarity(TimeSeries(a), TimeSeries(b), DissimilaritySpec(kind=kind))


def _brute_force(table, i_lo, i_hi, j_lo, j_hi):
    """Enumerate every alignment recursively; exponential but exact."""

    def go(i, j):
        cost = table.at(i, j)
        if i == i_hi and j == j_hi:
            return cost
        best = None
        for di, dj in ((1, 1), (1, 0), (0, 1)):
            if i + di <= i_hi and j + dj <= j_hi:
                sub = go(i + di, j + dj)
                if best is None or sub < best:
                    best = sub
        return cost + best

    return go(i_lo, j_lo)


def test_examples():
    assert dtw_distance(_table((0, 1), (1, 1))) == 1
    assert dtw_distance(_table((3, 1, 4), (3, 1, 4))) == 0
    assert dtw_distance(_table((0,), (0, 1))) == 1


def test_against_exhaustive_enumeration(rng):
    for _ in range(60):
        a, b, spec, table = random_instance(rng, 4)
        assert dtw_distance(table) == _brute_force(table, 1, table.m, 1, table.n)


def test_alignment_examples():
    d, al = dtw_alignment(_table((0, 1), (1, 1)))
    assert (d, al.pairs) == (1, ((1, 1), (2, 2)))
    d, al = dtw_alignment(_table((5,), (5,)))
    assert (d, al.pairs) == (0, ((1, 1),))
    d, al = dtw_alignment(_table((0, 0, 1), (1, 0, 0)))
    assert d == 2
    assert al.discrepancy == 2


def test_alignment_matches_distance(rng):
    for _ in range(80):
        a, b, spec, table = random_instance(rng, 6)
        d, al = dtw_alignment(table)
        assert d == dtw_distance(table)
        assert al.discrepancy == d
        assert sum(table.at(i, j) for i, j in al.pairs) == d
        assert al.pairs[0] == (1, 1)
        assert al.pairs[-1] == (table.m, table.n)


def test_symmetry_via_transposed_table(rng):
    for _ in range(40):
        a, b, spec, table = random_instance(rng, 6)
        transposed = build_dissimilarity(b, a, spec)
        assert dtw_distance(table) == dtw_distance(transposed)


def test_recurrence_structure(rng):
    # D(i, j) - d[i][j] equals the min of the three predecessors.
    a, b, spec, table = random_instance(rng, 6)
    m, n = table.m, table.n
    full = [[dtw_distance(table, 1, i, 1, j) for j in range(1, n + 1)] for i in range(1, m + 1)]
    for i in range(m):
        for j in range(n):
            preds = []
            if i and j:
                preds.append(full[i - 1][j - 1])
            if i:
                preds.append(full[i - 1][j])
            if j:
                preds.append(full[i][j - 1])
            want = min(preds) if preds else 0
            assert full[i][j] - table.at(i + 1, j + 1) == want


def test_subrange_queries(rng):
    for _ in range(30):
        a, b, spec, table = random_instance(rng, 5)
        i_lo = rng.randint(1, table.m)
        i_hi = rng.randint(i_lo, table.m)
        j_lo = rng.randint(1, table.n)
        j_hi = rng.randint(j_lo, table.n)
        assert dtw_distance(table, i_lo, i_hi, j_lo, j_hi) == _brute_force(
            table, i_lo, i_hi, j_lo, j_hi
        )


def test_out_of_range_rejected():
    table = _table((0, 1), (1, 1))
    with pytest.raises(RangeError):
        dtw_distance(table, 0, 2, 1, 2)
    with pytest.raises(RangeError):
        dtw_distance(table, 1, 3, 1, 2)
    with pytest.raises(RangeError):
        dtw_distance(table, 2, 1, 1, 2)


def test_real_grid():
    table = _table((0.25,), (0.5, 1.0))
    assert dtw_distance(table, real=True) == pytest.approx(1.0)


class TestSemiLocalNaive:
    def test_running_instance_spot_values(self):
        table = _table((0, 1), (1, 1))
        tables = dtw_all_semilocal_naive(table)
        assert tables.suf_pre[(2, 2)] == 0
        assert tables.pre_suf[(1, 2)] == 1
        assert tables.sub_a[(1, 1)] == 2

    def test_tables_complete(self, rng):
        a, b, spec, table = random_instance(rng, 4)
        m, n = table.m, table.n
        tables = dtw_all_semilocal_naive(table)
        assert len(tables.sub_a) == m * (m + 1) // 2
        assert len(tables.sub_b) == n * (n + 1) // 2
        assert len(tables.pre_suf) == m * n
        assert len(tables.suf_pre) == m * n
