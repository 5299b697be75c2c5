"""Classic quadratic dynamic-programming DTW.

This module is the correctness oracle for everything else, so it favors
clarity over speed: full-matrix DP, plain Python numbers.  It works on
both the integer grid and the unrounded real grid of a table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Alignment, DissimilarityTable

_INF = float("inf")


def _dp_matrix(grid, i_lo, i_hi, j_lo, j_hi):
    rows = i_hi - i_lo + 1
    cols = j_hi - j_lo + 1
    dp = [[0] * cols for _ in range(rows)]
    for r in range(rows):
        drow = grid[i_lo - 1 + r]
        dprow = dp[r]
        for s in range(cols):
            cost = drow[j_lo - 1 + s]
            if r == 0 and s == 0:
                dprow[s] = cost
            elif r == 0:
                dprow[s] = cost + dprow[s - 1]
            elif s == 0:
                dprow[s] = cost + dp[r - 1][0]
            else:
                prev = dp[r - 1]
                best = prev[s - 1]
                if prev[s] < best:
                    best = prev[s]
                if dprow[s - 1] < best:
                    best = dprow[s - 1]
                dprow[s] = cost + best
    return dp


def dtw_distance(
    table: DissimilarityTable,
    i_lo: int = 1,
    i_hi: int | None = None,
    j_lo: int = 1,
    j_hi: int | None = None,
    real: bool = False,
):
    """Minimum discrepancy over all alignments of ``A[i_lo:i_hi]`` and
    ``B[j_lo:j_hi]`` (inclusive 1-based ranges, defaulting to the whole
    series)."""
    i_hi = table.m if i_hi is None else i_hi
    j_hi = table.n if j_hi is None else j_hi
    table.check_range(i_lo, i_hi, j_lo, j_hi)
    grid = table.real_d if real and table.real_d is not None else table.d
    dp = _dp_matrix(grid, i_lo, i_hi, j_lo, j_hi)
    return dp[-1][-1]


def dtw_alignment(
    table: DissimilarityTable,
    i_lo: int = 1,
    i_hi: int | None = None,
    j_lo: int = 1,
    j_hi: int | None = None,
    real: bool = False,
):
    """Distance plus one optimal alignment.

    Ties during path recovery prefer the diagonal step, then the vertical
    (advance in A), then the horizontal, which makes the result
    deterministic.
    """
    i_hi = table.m if i_hi is None else i_hi
    j_hi = table.n if j_hi is None else j_hi
    table.check_range(i_lo, i_hi, j_lo, j_hi)
    grid = table.real_d if real and table.real_d is not None else table.d
    dp = _dp_matrix(grid, i_lo, i_hi, j_lo, j_hi)

    pairs = []
    r, s = i_hi - i_lo, j_hi - j_lo
    while True:
        pairs.append((i_lo + r, j_lo + s))
        if r == 0 and s == 0:
            break
        diag = dp[r - 1][s - 1] if r > 0 and s > 0 else _INF
        vert = dp[r - 1][s] if r > 0 else _INF
        horiz = dp[r][s - 1] if s > 0 else _INF
        best = min(diag, vert, horiz)
        if diag == best:
            r, s = r - 1, s - 1
        elif vert == best:
            r -= 1
        else:
            s -= 1
    pairs.reverse()
    distance = dp[-1][-1]
    return distance, Alignment(pairs=tuple(pairs), discrepancy=distance)


@dataclass(frozen=True)
class SemiLocalTables:
    """Exact answers for the four semi-local query shapes.

    Keys: ``sub_a[(i_lo, i_hi)]`` is substring-of-A vs whole B,
    ``sub_b[(j_lo, j_hi)]`` whole A vs substring-of-B,
    ``pre_suf[(i_hi, j_lo)]`` prefix ``A[1:i_hi]`` vs suffix ``B[j_lo:n]``,
    ``suf_pre[(i_lo, j_hi)]`` suffix ``A[i_lo:m]`` vs prefix ``B[1:j_hi]``.
    """

    sub_a: dict
    sub_b: dict
    pre_suf: dict
    suf_pre: dict


def dtw_all_semilocal_naive(table: DissimilarityTable) -> SemiLocalTables:
    """Answer every semi-local query by repeated DP.  Oracle-grade: cubic
    and happy about it."""
    m, n = table.m, table.n
    sub_a = {}
    for i_lo in range(1, m + 1):
        for i_hi in range(i_lo, m + 1):
            sub_a[(i_lo, i_hi)] = dtw_distance(table, i_lo, i_hi, 1, n)
    sub_b = {}
    for j_lo in range(1, n + 1):
        for j_hi in range(j_lo, n + 1):
            sub_b[(j_lo, j_hi)] = dtw_distance(table, 1, m, j_lo, j_hi)
    pre_suf = {}
    for i_hi in range(1, m + 1):
        for j_lo in range(1, n + 1):
            pre_suf[(i_hi, j_lo)] = dtw_distance(table, 1, i_hi, j_lo, n)
    suf_pre = {}
    for i_lo in range(1, m + 1):
        for j_hi in range(1, n + 1):
            suf_pre[(i_lo, j_hi)] = dtw_distance(table, i_lo, m, 1, j_hi)
    return SemiLocalTables(sub_a=sub_a, sub_b=sub_b, pre_suf=pre_suf, suf_pre=suf_pre)
