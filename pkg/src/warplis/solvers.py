"""Circular, square-root, and periodic DTW solvers.

Each solver has a fast route through the semi-local index and a naive
dynamic-programming baseline used for cross-validation.  Ties break
deterministically: smallest shift, smallest split, and for the periodic
problem the lexicographically smallest cut list, then smallest indices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dp import dtw_distance
from .errors import DataError, SeriesTooShortError
from .index import (
    PrefixAVsSuffixB,
    SubstringVsWholeB,
    SuffixAVsPrefixB,
    WholeAVsSubstring,
    build_index,
    query,
)
from .model import DissimilaritySpec, DissimilarityTable, TimeSeries, build_dissimilarity


@dataclass(frozen=True)
class CircularResult:
    distance: int
    shift: int  # rotation A[shift:] + A[:shift-1] attains the distance


@dataclass(frozen=True)
class SqrtResult:
    distance: int
    split: int  # prefix A[1:split] against suffix A[split+1:]


@dataclass(frozen=True)
class PeriodicResult:
    cost: int
    ell: int
    cuts: tuple[int, ...]  # end index of B_0 .. B_{ell-1}; B_ell runs to |B|
    i_lo: int
    i_hi: int

    def segments(self, n: int) -> tuple[tuple[int, int], ...]:
        """The decomposition of B[1:n] as inclusive (start, end) pairs."""
        if self.ell == 0:
            return ((1, n),)
        bounds = (0,) + self.cuts + (n,)
        return tuple((bounds[k] + 1, bounds[k + 1]) for k in range(len(bounds) - 1))


def _doubled_spec(spec: DissimilaritySpec) -> DissimilaritySpec:
    if spec.matrix is None:
        return spec
    return DissimilaritySpec(
        kind=spec.kind,
        rounding=spec.rounding,
        cap_override=spec.cap_override,
        matrix=spec.matrix + spec.matrix,
    )


def _rotated_spec(spec: DissimilaritySpec, shift: int) -> DissimilaritySpec:
    if spec.matrix is None:
        return spec
    rows = spec.matrix[shift - 1 :] + spec.matrix[: shift - 1]
    return DissimilaritySpec(
        kind=spec.kind,
        rounding=spec.rounding,
        cap_override=spec.cap_override,
        matrix=rows,
    )


def _rotate(a: TimeSeries, shift: int) -> TimeSeries:
    vals = a.values[shift - 1 :] + a.values[: shift - 1]
    return TimeSeries(vals)


def circular_dtw(a: TimeSeries, b: TimeSeries, spec: DissimilaritySpec) -> CircularResult:
    """Best rotation of A against the whole of B.

    Indexes the doubled series A+A against B, then every rotation is one
    substring-vs-whole query.
    """
    m = len(a)
    doubled = TimeSeries(a.values + a.values)
    idx = build_index(doubled, b, _doubled_spec(spec))
    best = None
    best_shift = 0
    for shift in range(1, m + 1):
        d = query(idx, SubstringVsWholeB(shift, shift + m - 1))
        if best is None or d < best:
            best, best_shift = d, shift
    return CircularResult(distance=best, shift=best_shift)


def circular_dtw_naive(a: TimeSeries, b: TimeSeries, spec: DissimilaritySpec) -> CircularResult:
    best = None
    best_shift = 0
    for shift in range(1, len(a) + 1):
        table = build_dissimilarity(_rotate(a, shift), b, _rotated_spec(spec, shift))
        d = dtw_distance(table)
        if best is None or d < best:
            best, best_shift = d, shift
    return CircularResult(distance=best, shift=best_shift)


def sqrt_dtw(a: TimeSeries, spec: DissimilaritySpec) -> SqrtResult:
    """Best split of A into a prefix and suffix minimizing their DTW."""
    m = len(a)
    if m < 2:
        raise SeriesTooShortError("square-root DTW needs at least two samples")
    idx = build_index(a, a, spec)
    best = None
    best_split = 0
    for split in range(1, m):
        d = query(idx, PrefixAVsSuffixB(i_hi=split, j_lo=split + 1))
        if best is None or d < best:
            best, best_split = d, split
    return SqrtResult(distance=best, split=best_split)


def sqrt_dtw_naive(a: TimeSeries, spec: DissimilaritySpec) -> SqrtResult:
    m = len(a)
    if m < 2:
        raise SeriesTooShortError("square-root DTW needs at least two samples")
    table = build_dissimilarity(a, a, spec)
    best = None
    best_split = 0
    for split in range(1, m):
        d = dtw_distance(table, 1, split, split + 1, m)
        if best is None or d < best:
            best, best_split = d, split
    return SqrtResult(distance=best, split=best_split)


def periodic_dtw(a: TimeSeries, b: TimeSeries, spec: DissimilaritySpec) -> PeriodicResult:
    """Cheapest way to read B as consecutive inexact copies of A.

    Minimizes DTW(A[i_lo:i_hi], B) for a single copy, or
    DTW(A[i_lo:|A|], B_0) + sum_k DTW(A, B_k) + DTW(A[1:i_hi], B_ell)
    over all decompositions B_0 .. B_ell of B into nonempty parts.
    """
    if len(a) > len(b):
        raise DataError("periodic DTW requires |A| <= |B|")
    idx = build_index(a, b, spec)

    def q(shape):
        return query(idx, shape)

    return _periodic_sweep(q, len(a), len(b))


def periodic_dtw_naive(a: TimeSeries, b: TimeSeries, spec: DissimilaritySpec) -> PeriodicResult:
    if len(a) > len(b):
        raise DataError("periodic DTW requires |A| <= |B|")
    table = build_dissimilarity(a, b, spec)
    m, n = len(a), len(b)

    def q(shape):
        if isinstance(shape, SubstringVsWholeB):
            return dtw_distance(table, shape.i_lo, shape.i_hi, 1, n)
        if isinstance(shape, WholeAVsSubstring):
            return dtw_distance(table, 1, m, shape.j_lo, shape.j_hi)
        if isinstance(shape, PrefixAVsSuffixB):
            return dtw_distance(table, 1, shape.i_hi, shape.j_lo, n)
        return dtw_distance(table, shape.i_lo, m, 1, shape.j_hi)

    return _periodic_sweep(q, m, n)


def _periodic_sweep(q, m: int, n: int) -> PeriodicResult:
    """Shortest source-to-sink path in the implicit decomposition DAG.

    Vertices: sources u_i (start the copy chain at A[i:]), internal w_j
    (the decomposition so far covers B[1:j]), sinks v_i (finish with
    A[1:i]).  One predecessor per vertex reconstructs the cut list.
    Candidates compare by (cost, cuts, i_lo, i_hi) so ties are stable.
    """
    best_single = None
    for i_lo in range(1, m + 1):
        for i_hi in range(i_lo, m + 1):
            d = q(SubstringVsWholeB(i_lo, i_hi))
            cand = (d, (), i_lo, i_hi)
            if best_single is None or cand < best_single:
                best_single = cand

    # best[j]: (cost, cuts, i_lo) of the cheapest chain covering B[1:j]
    best: list[tuple[int, tuple[int, ...], int] | None] = [None] * n
    for j in range(1, n):
        cur = None
        for i in range(1, m + 1):
            d = q(SuffixAVsPrefixB(i_lo=i, j_hi=j))
            cand = (d, (j,), i)
            if cur is None or cand < cur:
                cur = cand
        for jp in range(2, j + 1):
            prev = best[jp - 1 - 1]
            if prev is None:
                continue
            d = q(WholeAVsSubstring(j_lo=jp, j_hi=j))
            cand = (prev[0] + d, prev[1] + (j,), prev[2])
            if cur is None or cand < cur:
                cur = cand
        best[j - 1] = cur

    overall = best_single
    for j in range(1, n):
        chain = best[j - 1]
        if chain is None:
            continue
        for i in range(1, m + 1):
            d = q(PrefixAVsSuffixB(i_hi=i, j_lo=j + 1))
            cand = (chain[0] + d, chain[1], chain[2], i)
            if overall is None or cand < overall:
                overall = cand

    cost, cuts, i_lo, i_hi = overall
    return PeriodicResult(cost=cost, ell=len(cuts), cuts=tuple(cuts), i_lo=i_lo, i_hi=i_hi)


def periodic_objective(table: DissimilarityTable, result: PeriodicResult) -> int:
    """Recompute the objective of a decomposition from scratch with DP."""
    m, n = table.m, table.n
    if result.ell == 0:
        return dtw_distance(table, result.i_lo, result.i_hi, 1, n)
    cuts = result.cuts
    if list(cuts) != sorted(set(cuts)) or cuts[0] < 1 or cuts[-1] > n - 1:
        raise DataError(f"invalid cut list {cuts}")
    total = dtw_distance(table, result.i_lo, m, 1, cuts[0])
    for k in range(1, result.ell):
        total += dtw_distance(table, 1, m, cuts[k - 1] + 1, cuts[k])
    total += dtw_distance(table, 1, result.i_hi, cuts[-1] + 1, n)
    return total
