"""Compiled kernels for seaweed construction.

Everything here works on 0-based int64 arrays.  A seaweed "core" for an
m-row by n-column comparison grid is an array ``p`` of length m+n mapping
entry slots to exit slots:

* entry slot t in [0, m):       left edge, grid row r = m - t
* entry slot t in [m, m+n):     top edge, grid column c = t - m + 1
* exit  slot v in [0, n):       bottom edge, grid column c = v + 1
* exit  slot v in [n, m+n):     right edge, grid row r = m + n - v

Rows are compared against columns; strands braid through the grid,
crossing in a mismatch cell unless the pair has crossed before, and
turning around a match.  The dominance counts of the core encode every
prefix/suffix/band comparison of the two strings.

Falls back to pure Python when numba is unavailable (slow but identical).
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def deco(func):
            return func

        return deco


@njit(cache=True)
def comb_core(s0):
    """Quadratic cell-by-cell combing of a permutation against the identity.

    ``s0``: 0-based permutation of 0..n-1 (column p holds value s0[p]).
    Returns the core of the n-row (values) by n-column (positions) grid.
    """
    n = s0.shape[0]
    size = 2 * n
    p = np.empty(size, np.int64)
    if n == 0:
        return p
    out = np.empty(size, np.int64)
    top = np.arange(n)
    crossed = np.zeros((size, size), np.uint8)
    for vrow in range(n):
        cur = n + vrow
        for pc in range(n):
            t = top[pc]
            if s0[pc] == vrow or crossed[cur, t] == 1:
                # turn: left strand heads down, top strand heads right
                top[pc] = cur
                cur = t
            else:
                # first meeting at a mismatch: cross, both go straight
                crossed[cur, t] = 1
                crossed[t, cur] = 1
        out[cur] = 2 * n - 1 - vrow  # exits right edge at row vrow+1
    for pc in range(n):
        out[top[pc]] = pc  # exits bottom of column pc+1
    # strand ids to entry slots: top id c-1 entered slot n+c-1, left id
    # n+r-1 entered slot n-r
    for c in range(n):
        p[n + c] = out[c]
    for idx in range(n):
        p[n - 1 - idx] = out[n + idx]
    return p


@njit(cache=True)
def steady_ant(a, b):
    """Distance product of two k-permutations.

    With the dominance convention D_P(i, j) = #{(r, c) in P : r > i, c <= j}
    (corner indices 0..k), the result C satisfies
    D_C(i, j) = min_s (D_a(i, s) + D_b(s, j)).  O(k log k).
    """
    k = a.shape[0]
    if k <= 1:
        return a.copy()
    h = k // 2

    # Split a by column half (columns < h are "lo"), b by row half.
    ra_lo = np.empty(h, np.int64)
    ra_hi = np.empty(k - h, np.int64)
    a_lo = np.empty(h, np.int64)
    a_hi = np.empty(k - h, np.int64)
    il = 0
    ih = 0
    for r in range(k):
        c = a[r]
        if c < h:
            ra_lo[il] = r
            a_lo[il] = c
            il += 1
        else:
            ra_hi[ih] = r
            a_hi[ih] = c - h
            ih += 1

    colhalf = np.zeros(k, np.uint8)
    for j in range(h):
        colhalf[b[j]] = 1
    cb_lo = np.empty(h, np.int64)
    cb_hi = np.empty(k - h, np.int64)
    colrank = np.empty(k, np.int64)
    nlo = 0
    nhi = 0
    for c in range(k):
        if colhalf[c] == 1:
            cb_lo[nlo] = c
            colrank[c] = nlo
            nlo += 1
        else:
            cb_hi[nhi] = c
            colrank[c] = nhi
            nhi += 1
    b_lo = np.empty(h, np.int64)
    b_hi = np.empty(k - h, np.int64)
    for j in range(h):
        b_lo[j] = colrank[b[j]]
    for j in range(h, k):
        b_hi[j - h] = colrank[b[j]]

    c_lo = steady_ant(a_lo, b_lo)
    c_hi = steady_ant(a_hi, b_hi)

    # Expand both sub-results into original coordinates.
    row_is_lo = np.zeros(k, np.uint8)
    row_col = np.empty(k, np.int64)
    col_is_lo = np.zeros(k, np.uint8)
    col_row = np.empty(k, np.int64)
    for x in range(h):
        r = ra_lo[x]
        c = cb_lo[c_lo[x]]
        row_is_lo[r] = 1
        row_col[r] = c
        col_is_lo[c] = 1
        col_row[c] = r
    for x in range(k - h):
        r = ra_hi[x]
        c = cb_hi[c_hi[x]]
        row_col[r] = c
        col_row[c] = r

    # Ant walk along the lo/hi crossover staircase, bottom-left corner
    # (i=k, j=0) to top-right.  delta tracks (lo term) - (hi term) of the
    # combined dominance minimum; it only moves up while positive.
    out = np.empty(k, np.int64)
    i = k
    delta = 0
    for j in range(1, k + 1):
        c0 = j - 1
        crow = col_row[c0] + 1
        if col_is_lo[c0] == 1:
            if crow > i:
                delta += 1
        else:
            if crow <= i:
                delta += 1
        while delta > 0 and i > 0:
            r0 = i - 1
            rcol = row_col[r0] + 1
            if row_is_lo[r0] == 1:
                if rcol > j:
                    delta -= 1
            else:
                if rcol <= j:
                    delta -= 1
            i -= 1
        # tau(j) = i: survivors keep their row, the rest sit on the path
        if col_is_lo[c0] == 1 and crow <= i:
            out[crow - 1] = c0
        elif col_is_lo[c0] == 0 and crow > i:
            out[crow - 1] = c0
        else:
            out[i] = c0
    return out


@njit(cache=True)
def embed_cols(p, m, keep, n_total):
    """Insert never-matching columns into the column string.

    ``p`` is the core of an m x nc grid; ``keep`` (ascending, length nc)
    maps its columns to their positions in the widened 0..n_total-1 range.
    Each inserted column contributes a straight top-to-bottom strand; all
    other slots shift around them.
    """
    nc = keep.shape[0]
    out = np.empty(m + n_total, np.int64)
    iskeep = np.zeros(n_total, np.uint8)
    for x in range(nc):
        iskeep[keep[x]] = 1
    for t in range(n_total):
        if iskeep[t] == 0:
            out[m + t] = t
    for t in range(m + nc):
        v = p[t]
        vn = keep[v] if v < nc else v - nc + n_total
        tn = t if t < m else m + keep[t - m]
        out[tn] = vn
    return out


@njit(cache=True)
def transpose_core(p):
    """Core of the transposed grid (rows and columns swap roles)."""
    size = p.shape[0]
    out = np.empty(size, np.int64)
    for t in range(size):
        out[size - 1 - t] = size - 1 - p[t]
    return out


@njit(cache=True)
def glue_cols(p1, p2, m, n1, n2):
    """Combine cores of two horizontally adjacent blocks sharing m rows.

    Strands exiting block 1's right edge feed block 2's left edge; the
    braid across that interface is the steady-ant product of the two
    m-sized interface sub-permutations.  Everything else copies over with
    shifted slots.
    """
    out = np.empty(m + n1 + n2, np.int64)

    q1_rows = np.empty(m, np.int64)
    q1 = np.empty(m, np.int64)
    cnt = 0
    for t in range(m + n1):
        v = p1[t]
        if v >= n1:
            q1_rows[cnt] = t
            q1[cnt] = v - n1
            cnt += 1
        else:
            out[t] = v

    mark = np.zeros(m + n2, np.uint8)
    for t in range(m):
        mark[p2[t]] = 1
    vrank = np.empty(m + n2, np.int64)
    vlist = np.empty(m, np.int64)
    r = 0
    for v in range(m + n2):
        if mark[v] == 1:
            vrank[v] = r
            vlist[r] = v
            r += 1
    q2 = np.empty(m, np.int64)
    for t in range(m):
        q2[t] = vrank[p2[t]]
    for t in range(m, m + n2):
        out[t + n1] = p2[t] + n1

    q = steady_ant(q1, q2)
    for x in range(m):
        out[q1_rows[x]] = vlist[q[x]] + n1
    return out


@njit(cache=True)
def seaweed_dc_core(s0, cutoff):
    """Divide and conquer on the value range; O(n log^2 n).

    Splits the permutation into its low and high values, builds each core
    on the compressed subsequence, re-embeds the skipped columns, and
    glues the two value blocks (a row split, done as a column glue of the
    transposed cores).
    """
    n = s0.shape[0]
    if n <= cutoff:
        return comb_core(s0)
    h = (n + 1) // 2
    nhi = n - h
    lo_pos = np.empty(h, np.int64)
    hi_pos = np.empty(nhi, np.int64)
    s_lo = np.empty(h, np.int64)
    s_hi = np.empty(nhi, np.int64)
    il = 0
    ih = 0
    for pidx in range(n):
        v = s0[pidx]
        if v < h:
            lo_pos[il] = pidx
            s_lo[il] = v
            il += 1
        else:
            hi_pos[ih] = pidx
            s_hi[ih] = v - h
            ih += 1
    p_lo = seaweed_dc_core(s_lo, cutoff)
    p_hi = seaweed_dc_core(s_hi, cutoff)
    p_lo_e = embed_cols(p_lo, h, lo_pos, n)
    p_hi_e = embed_cols(p_hi, nhi, hi_pos, n)
    t_full = glue_cols(transpose_core(p_lo_e), transpose_core(p_hi_e), n, h, nhi)
    return transpose_core(t_full)
