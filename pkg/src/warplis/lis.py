"""Reference LIS/HIS kernels.

"Increasing" is strict throughout.  Banded variants restrict element
values to a closed interval and positions to a closed 1-based range;
empty ranges are fine and give 0.
"""

from __future__ import annotations

from bisect import bisect_left


def lis_length(seq) -> int:
    """Length of the longest strictly increasing subsequence (patience piles)."""
    tails: list = []
    for x in seq:
        pos = bisect_left(tails, x)
        if pos == len(tails):
            tails.append(x)
        else:
            tails[pos] = x
    return len(tails)


def banded_lis_length(seq, pos_lo: int, pos_hi: int, band_lo, band_hi) -> int:
    """LIS length using only positions in [pos_lo, pos_hi] (1-based, inclusive)
    and values in [band_lo, band_hi]."""
    lo = max(pos_lo, 1)
    hi = min(pos_hi, len(seq))
    if lo > hi:
        return 0
    return lis_length([x for x in seq[lo - 1 : hi] if band_lo <= x <= band_hi])


class _MaxFenwick:
    """Prefix-maximum Fenwick tree over 1..size; all stored values >= 0."""

    __slots__ = ("tree",)

    def __init__(self, size: int):
        self.tree = [0] * (size + 1)

    def update(self, i: int, value) -> None:
        tree = self.tree
        while i < len(tree):
            if tree[i] < value:
                tree[i] = value
            i += i & (-i)

    def prefix_max(self, i: int):
        best = 0
        tree = self.tree
        while i > 0:
            if tree[i] > best:
                best = tree[i]
            i -= i & (-i)
        return best


def banded_his_weight(values, weights, pos_lo: int, pos_hi: int, band_lo, band_hi):
    """Maximum total weight of a strictly increasing subsequence within the
    given position range and value band.

    Weights must be nonnegative; integers and reals both work.  Runs in
    O(k log k) over the k in-range elements via a prefix-max Fenwick tree.
    """
    if len(values) != len(weights):
        raise ValueError("values and weights must have equal length")
    lo = max(pos_lo, 1)
    hi = min(pos_hi, len(values))
    if lo > hi:
        return 0
    vals = []
    wts = []
    for idx in range(lo - 1, hi):
        v = values[idx]
        if band_lo <= v <= band_hi:
            w = weights[idx]
            if w < 0:
                raise ValueError("weights must be nonnegative")
            vals.append(v)
            wts.append(w)
    if not vals:
        return 0
    ranks = {v: r + 1 for r, v in enumerate(sorted(set(vals)))}
    fen = _MaxFenwick(len(ranks))
    best = 0
    for v, w in zip(vals, wts):
        r = ranks[v]
        score = fen.prefix_max(r - 1) + w
        if score > best:
            best = score
        fen.update(r, score)
    return best
