"""Reduction of DTW to banded increasing-subsequence problems.

The dissimilarity grid becomes a weighted integer sequence: one element
per grid cell (weight ``c - d[i][j]``) plus one "bridge" element per
interior corner (weight ``c``), laid out so positions snake row-wise and
values snake column-wise.  Any alignment then appears as a banded
increasing subsequence, and

    DTW(A[i_lo:i_hi], B[j_lo:j_hi]) = K - (banded HIS weight)

with ``K = c * ((i_hi - i_lo) + (j_hi - j_lo) + 1)``.  Expanding each
element into a run of ``weight`` consecutive integers turns the weighted
sequence into a permutation ``S`` and the HIS into a plain banded LIS,
with auxiliary arrays ``G/H`` mapping series indices to position ranges
and value bands of ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lis import banded_his_weight, lis_length
from .model import DissimilarityTable


@dataclass(frozen=True)
class WeightedReduction:
    """The weighted sequence, position-ordered.

    ``values[f-1]`` and ``weights[f-1]`` describe the element at position
    ``f``; both positions and values are permutations of ``1..length``.
    ``coords`` hold the originating grid cell, with bridge elements at
    half-integer coordinates ``(i - 0.5, j - 0.5)``.  ``real_weights``
    carries the unrounded weight variant when the table has a real grid.
    """

    m: int
    n: int
    c: int
    length: int
    values: np.ndarray
    weights: np.ndarray
    coords: np.ndarray  # shape (length, 2), float
    real_weights: np.ndarray | None = None
    real_c: float = 0.0

    def __post_init__(self):
        for arr in (self.values, self.weights, self.coords, self.real_weights):
            if arr is not None:
                arr.setflags(write=False)

    # Closed forms for positions f(.) and values of the two element kinds.
    def f_of_r(self, i: int, j: int) -> int:
        return (i - 1) * (2 * self.n - 1) + j

    def f_of_rt(self, i: int, j: int) -> int:
        return (i - 1) * (2 * self.n - 1) - j + 2

    def value_of_r(self, i: int, j: int) -> int:
        return (j - 1) * (2 * self.m - 1) + i

    def value_of_rt(self, i: int, j: int) -> int:
        return (j - 1) * (2 * self.m - 1) - i + 2


@dataclass(frozen=True)
class DtwSequence:
    """Permutation ``S`` of 1..w_total plus the query-range arrays.

    ``g_left[i-1] : g_right[i-1]`` is the position range contributed by
    grid rows up to ``i``; ``h_left[j-1] : h_right[j-1]`` the value band
    for grid columns up to ``j``.  Per-element run bookkeeping (position
    order) is kept for inspection: a zero-weight element has an empty run
    with ``run start = end + 1``.
    """

    m: int
    n: int
    c: int
    w_total: int
    s: np.ndarray
    g_left: tuple[int, ...]
    g_right: tuple[int, ...]
    h_left: tuple[int, ...]
    h_right: tuple[int, ...]
    # Per-element bookkeeping; absent on deserialized sequences.
    run_weights: np.ndarray | None = None
    run_g_right: np.ndarray | None = None
    run_h_right: np.ndarray | None = None

    def __post_init__(self):
        for arr in (self.s, self.run_weights, self.run_g_right, self.run_h_right):
            if arr is not None:
                arr.setflags(write=False)


def build_weighted_reduction(table: DissimilarityTable) -> WeightedReduction:
    """Instantiate the weighted sequence for a dissimilarity table."""
    m, n, c = table.m, table.n, table.c
    length = m * n + (m - 1) * (n - 1)
    d = np.asarray(table.d, dtype=np.int64).reshape(m, n)

    i_col = np.arange(1, m + 1, dtype=np.int64)[:, None]
    j_row = np.arange(1, n + 1, dtype=np.int64)[None, :]

    f_r = (i_col - 1) * (2 * n - 1) + j_row
    val_r = (j_row - 1) * (2 * m - 1) + i_col
    w_r = c - d

    values = np.zeros(length, dtype=np.int64)
    weights = np.zeros(length, dtype=np.int64)
    coords = np.zeros((length, 2), dtype=np.float64)

    idx_r = (f_r - 1).ravel()
    values[idx_r] = val_r.ravel()
    weights[idx_r] = w_r.ravel()
    coords[idx_r, 0] = np.broadcast_to(i_col, (m, n)).ravel()
    coords[idx_r, 1] = np.broadcast_to(j_row, (m, n)).ravel()

    real_weights = None
    real_c = 0.0
    if table.real_d is not None:
        real_d = np.asarray(table.real_d, dtype=np.float64).reshape(m, n)
        real_c = float(real_d.max())
        real_weights = np.zeros(length, dtype=np.float64)
        real_weights[idx_r] = (real_c - real_d).ravel()

    if m > 1 and n > 1:
        it = i_col[1:]
        jt = j_row[:, 1:]
        f_rt = (it - 1) * (2 * n - 1) - jt + 2
        val_rt = (jt - 1) * (2 * m - 1) - it + 2
        idx_t = (f_rt - 1).ravel()
        values[idx_t] = val_rt.ravel()
        weights[idx_t] = c
        coords[idx_t, 0] = (np.broadcast_to(it, (m - 1, n - 1)) - 0.5).ravel()
        coords[idx_t, 1] = (np.broadcast_to(jt, (m - 1, n - 1)) - 0.5).ravel()
        if real_weights is not None:
            real_weights[idx_t] = real_c

    return WeightedReduction(
        m=m,
        n=n,
        c=c,
        length=length,
        values=values,
        weights=weights,
        coords=coords,
        real_weights=real_weights,
        real_c=real_c,
    )


def build_dtw_sequence(red: WeightedReduction) -> DtwSequence:
    """Expand each element into its run of consecutive integers."""
    m, n = red.m, red.n
    weights = red.weights
    values = red.values
    length = red.length

    g_right_runs = np.cumsum(weights)
    w_total = int(g_right_runs[-1]) if length else 0

    w_by_value = np.zeros(length, dtype=np.int64)
    w_by_value[values - 1] = weights
    h_right_by_value = np.cumsum(w_by_value)
    h_right_runs = h_right_by_value[values - 1]

    starts = h_right_runs - weights + 1
    if w_total:
        run_offsets = np.repeat(g_right_runs - weights, weights)
        s = np.repeat(starts, weights) + (np.arange(w_total, dtype=np.int64) - run_offsets)
    else:
        s = np.zeros(0, dtype=np.int64)

    def _pos(i, j):
        return red.f_of_r(i, j) - 1

    g_left = tuple(
        int(g_right_runs[_pos(i, 1)] - weights[_pos(i, 1)] + 1) for i in range(1, m + 1)
    )
    g_right = tuple(int(g_right_runs[_pos(i, n)]) for i in range(1, m + 1))
    h_left = tuple(
        int(
            h_right_by_value[red.value_of_r(1, j) - 1]
            - weights[_pos(1, j)]
            + 1
        )
        for j in range(1, n + 1)
    )
    h_right = tuple(int(h_right_by_value[red.value_of_r(m, j) - 1]) for j in range(1, n + 1))

    return DtwSequence(
        m=m,
        n=n,
        c=red.c,
        w_total=w_total,
        s=s,
        g_left=g_left,
        g_right=g_right,
        h_left=h_left,
        h_right=h_right,
        run_weights=weights,
        run_g_right=g_right_runs,
        run_h_right=h_right_runs,
    )


def warp_constant(c, i_lo: int, i_hi: int, j_lo: int, j_hi: int):
    """The alignment-length constant K for a subrange query."""
    return c * ((i_hi - i_lo) + (j_hi - j_lo) + 1)


def _banded_lis_np(s: np.ndarray, pos_lo: int, pos_hi: int, band_lo: int, band_hi: int) -> int:
    lo = max(pos_lo, 1)
    hi = min(pos_hi, len(s))
    if lo > hi or band_lo > band_hi:
        return 0
    window = s[lo - 1 : hi]
    kept = window[(window >= band_lo) & (window <= band_hi)]
    return lis_length(kept.tolist())


def dtw_via_banded_lis(
    seq: DtwSequence, c, i_lo: int, i_hi: int, j_lo: int, j_hi: int
) -> int:
    """DTW of the subranges as K minus a banded LIS length of ``S``."""
    k = warp_constant(c, i_lo, i_hi, j_lo, j_hi)
    lis = _banded_lis_np(
        seq.s,
        seq.g_left[i_lo - 1],
        seq.g_right[i_hi - 1],
        seq.h_left[j_lo - 1],
        seq.h_right[j_hi - 1],
    )
    return k - lis


def dtw_via_banded_his(
    red: WeightedReduction,
    c,
    i_lo: int,
    i_hi: int,
    j_lo: int,
    j_hi: int,
    real: bool = False,
    tight: bool = False,
):
    """DTW of the subranges as K minus a banded HIS weight of the weighted
    sequence.

    ``real=True`` evaluates with the unrounded weights (pass the real cap
    as ``c``).  ``tight=True`` uses the narrow position/band ranges anchored
    at the query corners instead of the widened row/column ranges; both
    give the same distance.
    """
    if real and red.real_weights is None:
        raise ValueError("reduction carries no real-valued weights")
    weights = red.real_weights if real else red.weights
    k = warp_constant(c, i_lo, i_hi, j_lo, j_hi)
    if tight:
        pos_lo, pos_hi = red.f_of_r(i_lo, j_lo), red.f_of_r(i_hi, j_hi)
        band_lo, band_hi = red.value_of_r(i_lo, j_lo), red.value_of_r(i_hi, j_hi)
    else:
        pos_lo, pos_hi = red.f_of_r(i_lo, 1), red.f_of_r(i_hi, red.n)
        band_lo, band_hi = red.value_of_r(1, j_lo), red.value_of_r(red.m, j_hi)
    his = banded_his_weight(
        red.values.tolist(), weights.tolist(), pos_lo, pos_hi, band_lo, band_hi
    )
    return k - his
