"""Semi-local LIS permutations.

For a permutation ``S`` of 1..n there is a permutation ``pi`` of 1..2n
whose dominance counts encode every prefix/suffix/band LIS query on
``S``.  With ``count(k_lo, k_hi) = #{k : k_lo+1 <= k <= 2n, pi[k] <= k_hi}``
and ``1 <= k_lo, k_hi <= 2n-1``, the quantity

    min(k_hi, n) - max(0, k_lo - n) - count(k_lo, k_hi)

equals, depending on which side of n the two parameters fall:

* case 1 (k_lo <= n, k_hi <= n): the [1:k_hi]-banded LIS length of
  ``S[n-k_lo+1 : n]``,
* case 2 (k_lo >= n, k_hi >= n): the [k_lo-n+1 : n]-banded LIS length of
  ``S[1 : 2n-k_hi]``,
* case 3 (k_hi <= n <= k_lo, k_lo-n+1 <= k_hi): the [k_lo-n+1 : k_hi]-banded
  LIS length of ``S``,
* case 4 (k_lo <= n <= k_hi, n-k_lo+1 <= 2n-k_hi): the LIS length of
  ``S[n-k_lo+1 : 2n-k_hi]``.

Pairs outside all four cases carry no defined value and are rejected.

Three construction routes are provided and must agree element-for-element:
a brute-force oracle that reconstructs ``pi`` from the identity above, a
quadratic grid-combing baseline, and a divide-and-conquer builder with a
steady-ant merge (O(n log^2 n)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DataError, InternalError, OracleInconsistencyError, UnsupportedPairError
from .lis import banded_lis_length


@dataclass(frozen=True, eq=False)
class SeaweedPermutation:
    """Permutation of 1..2n encoding all semi-local LIS values of ``S``."""

    n: int
    pi: np.ndarray  # 1-based values; pi[k-1] is the image of k

    def __post_init__(self):
        self.pi.setflags(write=False)

    def count_naive(self, k_lo: int, k_hi: int) -> int:
        """Dominance count by linear scan (oracle-grade)."""
        return int(np.count_nonzero(self.pi[k_lo:] <= k_hi))


def covered_cases(n: int, k_lo: int, k_hi: int) -> tuple[int, ...]:
    """Which of the four query cases cover (k_lo, k_hi); empty if none."""
    if not (1 <= k_lo <= 2 * n - 1 and 1 <= k_hi <= 2 * n - 1):
        return ()
    cases = []
    if k_lo <= n and k_hi <= n:
        cases.append(1)
    if k_lo >= n and k_hi >= n:
        cases.append(2)
    if k_hi <= n <= k_lo and k_lo - n + 1 <= k_hi:
        cases.append(3)
    if k_lo <= n <= k_hi and n - k_lo + 1 <= 2 * n - k_hi:
        cases.append(4)
    return tuple(cases)


def case_lis_value(s, n: int, k_lo: int, k_hi: int, case: int) -> int:
    """Brute-force banded LIS value for one covered case."""
    if case == 1:
        return banded_lis_length(s, n - k_lo + 1, n, 1, k_hi)
    if case == 2:
        return banded_lis_length(s, 1, 2 * n - k_hi, k_lo - n + 1, n)
    if case == 3:
        return banded_lis_length(s, 1, n, k_lo - n + 1, k_hi)
    if case == 4:
        return banded_lis_length(s, n - k_lo + 1, 2 * n - k_hi, 1, n)
    raise ValueError(f"no such case: {case}")


def semilocal_lis_value(sw: SeaweedPermutation, counter, k_lo: int, k_hi: int) -> int:
    """Banded LIS length for a covered pair, via a dominance-count callable."""
    if not covered_cases(sw.n, k_lo, k_hi):
        raise UnsupportedPairError(
            f"(k_lo={k_lo}, k_hi={k_hi}) is outside every supported case for n={sw.n}"
        )
    n = sw.n
    return min(k_hi, n) - max(0, k_lo - n) - counter(k_lo, k_hi)


def _as_zero_based(s) -> np.ndarray:
    s_arr = np.asarray(s, dtype=np.int64)
    n = len(s_arr)
    if n and (np.sort(s_arr) != np.arange(1, n + 1)).any():
        raise DataError("input must be a permutation of 1..n")
    return s_arr - 1


def _pi_from_core(core: np.ndarray) -> np.ndarray:
    # Entry slot of k is 2n-k, exit slots flip the same way.
    size = core.shape[0]
    return size - core[::-1]


def _check_bijection(pi: np.ndarray) -> None:
    size = pi.shape[0]
    if size and (np.bincount(pi - 1, minlength=size).max() != 1):
        raise InternalError("seaweed construction produced a non-bijective map")


def build_seaweed_baseline(s) -> SeaweedPermutation:
    """Quadratic combing construction."""
    s0 = _as_zero_based(s)
    core = _kernels.comb_core(s0)
    pi = _pi_from_core(core)
    _check_bijection(pi)
    return SeaweedPermutation(n=len(s0), pi=pi)


def build_seaweed_dc(s, cutoff: int = 64) -> SeaweedPermutation:
    """Divide-and-conquer construction; identical output to the baseline."""
    if cutoff < 1:
        raise DataError("cutoff must be at least 1")
    s0 = _as_zero_based(s)
    core = _kernels.seaweed_dc_core(s0, cutoff)
    pi = _pi_from_core(core)
    _check_bijection(pi)
    return SeaweedPermutation(n=len(s0), pi=pi)


def steady_ant_product(a, b) -> np.ndarray:
    """Distance product of two equal-size permutations (1-based in and out).

    The dominance-sum of the result is the pointwise minimum over all
    splits of the two dominance-sums; see tests for the quadratic oracle
    this is checked against.
    """
    a0 = _as_zero_based(a)
    b0 = _as_zero_based(b)
    if len(a0) != len(b0):
        raise DataError("operands must have equal size")
    out = _kernels.steady_ant(a0, b0) + 1
    _check_bijection(out)
    return out


def steady_ant_merge(lo_core, hi_core, lo_positions, hi_positions) -> np.ndarray:
    """Merge the seaweed cores of the low and high value halves of a split.

    ``lo_core`` is the core for the compressed subsequence of low values,
    ``lo_positions`` its 1-based positions within the full sequence
    (likewise for the high half).  Returns the core of the full sequence.
    """
    lo_core = np.asarray(lo_core, dtype=np.int64)
    hi_core = np.asarray(hi_core, dtype=np.int64)
    h = len(lo_core) // 2
    nhi = len(hi_core) // 2
    n = h + nhi
    lo_pos = np.asarray(sorted(p - 1 for p in lo_positions), dtype=np.int64)
    hi_pos = np.asarray(sorted(p - 1 for p in hi_positions), dtype=np.int64)
    if len(lo_pos) != h or len(hi_pos) != nhi:
        raise DataError("position maps must match the core sizes")
    if h == 0:
        return hi_core.copy()
    if nhi == 0:
        return lo_core.copy()
    p_lo_e = _kernels.embed_cols(lo_core, h, lo_pos, n)
    p_hi_e = _kernels.embed_cols(hi_core, nhi, hi_pos, n)
    t_full = _kernels.glue_cols(
        _kernels.transpose_core(p_lo_e), _kernels.transpose_core(p_hi_e), n, h, nhi
    )
    return _kernels.transpose_core(t_full)


def seaweed_oracle(s, max_n: int = 64) -> SeaweedPermutation:
    """Reconstruct ``pi`` from brute-force banded LIS values alone.

    Builds the dominance-count grid on all covered pairs (checking that
    overlapping cases agree), extends it with the boundary rows forced by
    bijectivity, reads each row's flip column, resolves rows whose flip
    falls in an uncovered corner by remaining-values matching, and then
    validates the full identity round trip.  Ground truth for the other
    builders; quadratic-size input guard because it is deliberately slow.
    """
    s_arr = np.asarray(s, dtype=np.int64)
    n = len(s_arr)
    if n > max_n:
        raise DataError(f"oracle limited to n <= {max_n} (got {n})")
    _as_zero_based(s_arr)  # permutation validation
    size = 2 * n
    if n == 0:
        return SeaweedPermutation(n=0, pi=np.zeros(0, dtype=np.int64))
    s_list = s_arr.tolist()

    grid = np.full((size + 1, size + 1), -1, dtype=np.int64)
    grid[0, :] = np.arange(size + 1)
    grid[size, :] = 0
    grid[:, 0] = 0
    grid[:, size] = size - np.arange(size + 1)
    for k_lo in range(1, size):
        for k_hi in range(1, size):
            cases = covered_cases(n, k_lo, k_hi)
            if not cases:
                continue
            head = min(k_hi, n) - max(0, k_lo - n)
            vals = {head - case_lis_value(s_list, n, k_lo, k_hi, c) for c in cases}
            if len(vals) != 1:
                raise OracleInconsistencyError(
                    f"cases {cases} disagree at ({k_lo}, {k_hi}): {sorted(vals)}"
                )
            grid[k_lo, k_hi] = vals.pop()

    # Row k flips 0 -> 1 at column pi[k]; bracket it by the defined columns.
    lower = np.ones(size + 1, dtype=np.int64)
    upper = np.full(size + 1, size, dtype=np.int64)
    for k in range(1, size + 1):
        for j in range(0, size + 1):
            top, bot = grid[k - 1, j], grid[k, j]
            if top < 0 or bot < 0:
                continue
            diff = top - bot
            if diff == 0:
                if j + 1 > lower[k]:
                    lower[k] = j + 1
            elif diff == 1:
                if j < upper[k]:
                    upper[k] = j
            else:
                raise OracleInconsistencyError(
                    f"count difference {diff} at row {k}, column {j}"
                )

    pi = _match_intervals(lower[1:], upper[1:])

    sw = SeaweedPermutation(n=n, pi=pi)
    for k_lo in range(1, size):
        for k_hi in range(1, size):
            if grid[k_lo, k_hi] >= 0 and sw.count_naive(k_lo, k_hi) != grid[k_lo, k_hi]:
                raise OracleInconsistencyError(
                    f"round trip failed at ({k_lo}, {k_hi})"
                )
    return sw


def _match_intervals(lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    """Unique bijection with lower[k] <= pi[k] <= upper[k], else raise.

    Greedy smallest-feasible and largest-feasible assignments coincide
    exactly when the interval system pins a single bijection.
    """
    import heapq

    size = len(lower)
    if np.any(lower > upper):
        raise OracleInconsistencyError("empty candidate interval for some row")

    def greedy(prefer_small: bool) -> np.ndarray:
        # Sweep values; rows become eligible as the value enters their interval.
        assigned = np.zeros(size, dtype=np.int64)
        heap: list[tuple[int, int]] = []
        ptr = 0
        if prefer_small:
            rows = sorted(range(size), key=lambda r: lower[r])
            for value in range(1, size + 1):
                while ptr < size and lower[rows[ptr]] <= value:
                    heapq.heappush(heap, (upper[rows[ptr]], rows[ptr]))
                    ptr += 1
                if not heap:
                    raise OracleInconsistencyError("no feasible assignment")
                ub, r = heapq.heappop(heap)
                if ub < value:
                    raise OracleInconsistencyError("no feasible assignment")
                assigned[r] = value
        else:
            rows = sorted(range(size), key=lambda r: -upper[r])
            for value in range(size, 0, -1):
                while ptr < size and upper[rows[ptr]] >= value:
                    heapq.heappush(heap, (-lower[rows[ptr]], rows[ptr]))
                    ptr += 1
                if not heap:
                    raise OracleInconsistencyError("no feasible assignment")
                neg_lb, r = heapq.heappop(heap)
                if -neg_lb > value:
                    raise OracleInconsistencyError("no feasible assignment")
                assigned[r] = value
        return assigned

    small = greedy(True)
    large = greedy(False)
    if not np.array_equal(small, large):
        raise OracleInconsistencyError(
            "reconstruction is ambiguous; covered identities admit several maps"
        )
    return small
