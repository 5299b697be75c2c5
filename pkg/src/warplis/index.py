"""The semi-local DTW index.

Build pipeline: dissimilarity table -> weighted reduction -> permutation
``S`` with its G/H range arrays -> seaweed permutation -> dominance-count
index.  A query picks the (k_lo, k_hi) pair whose dominance count yields
the banded LIS length of the query's position range and value band:

* substring of A vs whole B:   k_lo = W - Gl[i_lo] + 1, k_hi = 2W - Gr[i_hi]
* whole A vs substring of B:   k_lo = Hl[j_lo] + W - 1, k_hi = Hr[j_hi]
* prefix of A vs suffix of B:  k_lo = Hl[j_lo] + W - 1, k_hi = 2W - Gr[i_hi]
* suffix of A vs prefix of B:  k_lo = W - Gl[i_lo] + 1, k_hi = Hr[j_hi]

The distance is the warp constant minus that length.  Degenerate
boundaries (empty runs at the ends of the grid) can push the pair out of
the supported parameter space; those queries fall back to a direct banded
LIS scan of ``S`` and are flagged.  Fully-local substring-vs-substring
queries are refused; use the DP oracle or the reduction directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DataError, InternalError, RangeError, UnsupportedQueryError
from .model import DissimilaritySpec, DissimilarityTable, TimeSeries, build_dissimilarity
from .rangecount import RangeCountIndex, build_range_index, dominance_count
from .reduction import (
    DtwSequence,
    build_dtw_sequence,
    build_weighted_reduction,
    warp_constant,
    _banded_lis_np,
)
from .seaweed import SeaweedPermutation, build_seaweed_dc, covered_cases, semilocal_lis_value

INDEX_FORMAT = "warplis-index"
INDEX_VERSION = 1


@dataclass(frozen=True)
class SubstringVsWholeB:
    i_lo: int
    i_hi: int


@dataclass(frozen=True)
class WholeAVsSubstring:
    j_lo: int
    j_hi: int


@dataclass(frozen=True)
class PrefixAVsSuffixB:
    i_hi: int
    j_lo: int


@dataclass(frozen=True)
class SuffixAVsPrefixB:
    i_lo: int
    j_hi: int


QueryShape = Union[SubstringVsWholeB, WholeAVsSubstring, PrefixAVsSuffixB, SuffixAVsPrefixB]

_SHAPE_CASE = {
    SuffixAVsPrefixB: 1,
    PrefixAVsSuffixB: 2,
    WholeAVsSubstring: 3,
    SubstringVsWholeB: 4,
}


@dataclass(frozen=True)
class QueryResult:
    distance: int
    fallback: bool
    case: int | None
    k_lo: int
    k_hi: int


@dataclass(frozen=True, eq=False)
class SemiLocalDtwIndex:
    m: int
    n: int
    c: int
    seq: DtwSequence
    sw: SeaweedPermutation
    rc: RangeCountIndex


def build_index(a: TimeSeries, b: TimeSeries, spec: DissimilaritySpec) -> SemiLocalDtwIndex:
    return build_index_from_table(build_dissimilarity(a, b, spec))


def build_index_from_table(table: DissimilarityTable) -> SemiLocalDtwIndex:
    red = build_weighted_reduction(table)
    seq = build_dtw_sequence(red)
    return _assemble(seq)


def _assemble(seq: DtwSequence) -> SemiLocalDtwIndex:
    _check_boundaries(seq)
    sw = build_seaweed_dc(seq.s)
    rc = build_range_index(sw)
    return SemiLocalDtwIndex(m=seq.m, n=seq.n, c=seq.c, seq=seq, sw=sw, rc=rc)


def _check_boundaries(seq: DtwSequence) -> None:
    w = seq.w_total
    ok = (
        seq.g_left[0] == 1
        and seq.h_left[0] == 1
        and seq.g_right[-1] == w
        and seq.h_right[-1] == w
    )
    if not ok:
        raise InternalError("sequence boundary identities violated")


def query_subranges(shape: QueryShape, m: int, n: int) -> tuple[int, int, int, int]:
    """The (i_lo, i_hi, j_lo, j_hi) subranges a shape stands for."""
    if isinstance(shape, SubstringVsWholeB):
        r = (shape.i_lo, shape.i_hi, 1, n)
    elif isinstance(shape, WholeAVsSubstring):
        r = (1, m, shape.j_lo, shape.j_hi)
    elif isinstance(shape, PrefixAVsSuffixB):
        r = (1, shape.i_hi, shape.j_lo, n)
    elif isinstance(shape, SuffixAVsPrefixB):
        r = (shape.i_lo, m, 1, shape.j_hi)
    else:
        raise UnsupportedQueryError(
            f"unsupported query shape {shape!r}; fully-local queries need the DP oracle"
        )
    i_lo, i_hi, j_lo, j_hi = r
    if not (1 <= i_lo <= i_hi <= m and 1 <= j_lo <= j_hi <= n):
        raise RangeError(f"shape {shape!r} out of bounds for {m}x{n}")
    return r


def map_query_to_count_params(shape: QueryShape, seq: DtwSequence) -> tuple[int, int, int]:
    """(k_lo, k_hi, case) for a shape; may land outside the supported space
    when boundary runs are empty (the caller then falls back)."""
    w = seq.w_total
    case = _SHAPE_CASE.get(type(shape))
    if case is None:
        raise UnsupportedQueryError(f"unsupported query shape {shape!r}")
    query_subranges(shape, seq.m, seq.n)  # bounds check
    if case == 4:
        k_lo = w - seq.g_left[shape.i_lo - 1] + 1
        k_hi = 2 * w - seq.g_right[shape.i_hi - 1]
    elif case == 3:
        k_lo = seq.h_left[shape.j_lo - 1] + w - 1
        k_hi = seq.h_right[shape.j_hi - 1]
    elif case == 2:
        k_lo = seq.h_left[shape.j_lo - 1] + w - 1
        k_hi = 2 * w - seq.g_right[shape.i_hi - 1]
    else:
        k_lo = w - seq.g_left[shape.i_lo - 1] + 1
        k_hi = seq.h_right[shape.j_hi - 1]
    return k_lo, k_hi, case


def query_info(index: SemiLocalDtwIndex, shape: QueryShape) -> QueryResult:
    """Distance plus how it was obtained (dominance count or flagged fallback)."""
    seq = index.seq
    i_lo, i_hi, j_lo, j_hi = query_subranges(shape, index.m, index.n)
    k = warp_constant(index.c, i_lo, i_hi, j_lo, j_hi)
    k_lo, k_hi, case = map_query_to_count_params(shape, seq)
    w = seq.w_total
    if w > 0 and case in covered_cases(w, k_lo, k_hi):
        lis = semilocal_lis_value(
            index.sw, lambda kl, kh: dominance_count(index.rc, kl, kh), k_lo, k_hi
        )
        return QueryResult(distance=k - lis, fallback=False, case=case, k_lo=k_lo, k_hi=k_hi)
    lis = _banded_lis_np(
        seq.s,
        seq.g_left[i_lo - 1],
        seq.g_right[i_hi - 1],
        seq.h_left[j_lo - 1],
        seq.h_right[j_hi - 1],
    )
    return QueryResult(distance=k - lis, fallback=True, case=case, k_lo=k_lo, k_hi=k_hi)


def query(index: SemiLocalDtwIndex, shape: QueryShape) -> int:
    """Exact DTW distance for one of the four semi-local shapes."""
    return query_info(index, shape).distance


def save_index(index: SemiLocalDtwIndex, path: str) -> None:
    """Versioned JSON: header plus flat integer arrays (rebuilt on load)."""
    payload = {
        "format": INDEX_FORMAT,
        "version": INDEX_VERSION,
        "m": index.m,
        "n": index.n,
        "c": index.c,
        "W": index.seq.w_total,
        "S": index.seq.s.tolist(),
        "Gl": list(index.seq.g_left),
        "Gr": list(index.seq.g_right),
        "Hl": list(index.seq.h_left),
        "Hr": list(index.seq.h_right),
        "pi": index.sw.pi.tolist(),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, separators=(",", ":"))


def load_index(path: str) -> SemiLocalDtwIndex:
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    if payload.get("format") != INDEX_FORMAT:
        raise DataError(f"not a {INDEX_FORMAT} file: {path}")
    if payload.get("version") != INDEX_VERSION:
        raise DataError(f"unsupported index version {payload.get('version')!r}")
    s = np.asarray(payload["S"], dtype=np.int64)
    w = int(payload["W"])
    if len(s) != w:
        raise DataError("index file is inconsistent: |S| != W")
    seq = DtwSequence(
        m=int(payload["m"]),
        n=int(payload["n"]),
        c=int(payload["c"]),
        w_total=w,
        s=s,
        g_left=tuple(int(x) for x in payload["Gl"]),
        g_right=tuple(int(x) for x in payload["Gr"]),
        h_left=tuple(int(x) for x in payload["Hl"]),
        h_right=tuple(int(x) for x in payload["Hr"]),
        run_weights=None,
        run_g_right=None,
        run_h_right=None,
    )
    _check_boundaries(seq)
    pi = np.asarray(payload["pi"], dtype=np.int64)
    if len(pi) != 2 * w:
        raise DataError("index file is inconsistent: |pi| != 2W")
    sw = SeaweedPermutation(n=w, pi=pi)
    rc = build_range_index(sw)
    return SemiLocalDtwIndex(m=seq.m, n=seq.n, c=seq.c, seq=seq, sw=sw, rc=rc)
