"""Dominance counting over a seaweed permutation.

A merge-sort tree: level l stores the permutation in sorted blocks of
2**l elements, so a suffix-position/prefix-value count decomposes into
O(log n) binary searches.  Queries run in O(log^2 n); construction in
O(n log^2 n) with numpy doing the per-level sorting.  Immutable after
build.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RangeError
from .seaweed import SeaweedPermutation


@dataclass(frozen=True, eq=False)
class RangeCountIndex:
    size: int
    padded: int
    levels: tuple[np.ndarray, ...]  # levels[l]: blocks of 2**l, each sorted

    def count(self, k_lo: int, k_hi: int) -> int:
        return dominance_count(self, k_lo, k_hi)


def build_range_index(sw: SeaweedPermutation) -> RangeCountIndex:
    """Index the permutation for suffix-position dominance counts."""
    size = int(len(sw.pi))
    padded = 1
    while padded < max(size, 1):
        padded *= 2
    base = np.full(padded, size + 1, dtype=np.int32)  # sentinel beyond any value
    if size:
        base[:size] = sw.pi.astype(np.int32)
    levels = [base]
    width = 1
    while width < padded:
        width *= 2
        level = base.reshape(-1, width).copy()
        level.sort(axis=1)
        levels.append(level.reshape(-1))
    for arr in levels:
        arr.setflags(write=False)
    return RangeCountIndex(size=size, padded=padded, levels=tuple(levels))


def dominance_count(index: RangeCountIndex, k_lo: int, k_hi: int) -> int:
    """#{k : k_lo + 1 <= k <= size and pi[k] <= k_hi}."""
    size = index.size
    if not (0 <= k_lo <= size and 0 <= k_hi <= size):
        raise RangeError(f"arguments must lie in [0, {size}], got ({k_lo}, {k_hi})")
    if size == 0 or k_hi == 0 or k_lo == size:
        return 0
    levels = index.levels
    total = 0
    lo, hi = k_lo, index.padded  # 0-based half-open block range at level 0
    level = 0
    k_hi = np.int32(k_hi)  # match the level dtype; a plain int forces a copy per search
    while lo < hi:
        if lo & 1:
            total += _block_count(levels[level], level, lo, k_hi)
            lo += 1
        if hi & 1:
            hi -= 1
            total += _block_count(levels[level], level, hi, k_hi)
        lo >>= 1
        hi >>= 1
        level += 1
    return total


def _block_count(arr: np.ndarray, level: int, block: int, limit: int) -> int:
    width = 1 << level
    start = block << level
    if width == 1:
        return 1 if arr[start] <= limit else 0
    return int(np.searchsorted(arr[start : start + width], limit, side="right"))
