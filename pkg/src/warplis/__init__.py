"""DTW distances through banded longest-increasing-subsequence reductions.

The package turns a dissimilarity grid into an integer permutation whose
banded LIS lengths encode every substring-vs-substring DTW distance,
serves the four semi-local query shapes from a seaweed permutation under
a dominance-counting index, and builds circular, square-root, and
periodic DTW solvers on top.  Every fast route ships with a brute-force
oracle and the test suite holds them equal.
"""

from .dp import dtw_alignment, dtw_all_semilocal_naive, dtw_distance
from .index import (
    PrefixAVsSuffixB,
    QueryResult,
    SemiLocalDtwIndex,
    SubstringVsWholeB,
    SuffixAVsPrefixB,
    WholeAVsSubstring,
    build_index,
    build_index_from_table,
    load_index,
    map_query_to_count_params,
    query,
    query_info,
    save_index,
)
from .lis import banded_his_weight, banded_lis_length, lis_length
from .model import (
    Alignment,
    DissimilaritySpec,
    DissimilarityTable,
    TimeSeries,
    build_dissimilarity,
    parse_time_series,
)
from .rangecount import RangeCountIndex, build_range_index, dominance_count
from .reduction import (
    DtwSequence,
    WeightedReduction,
    build_dtw_sequence,
    build_weighted_reduction,
    dtw_via_banded_his,
    dtw_via_banded_lis,
    warp_constant,
)
from .seaweed import (
    SeaweedPermutation,
    build_seaweed_baseline,
    build_seaweed_dc,
    seaweed_oracle,
    semilocal_lis_value,
    steady_ant_merge,
    steady_ant_product,
)
from .selftest import run_selftest
from .solvers import (
    CircularResult,
    PeriodicResult,
    SqrtResult,
    circular_dtw,
    circular_dtw_naive,
    periodic_dtw,
    periodic_dtw_naive,
    periodic_objective,
    sqrt_dtw,
    sqrt_dtw_naive,
)

__version__ = "0.1.0"
