"""Exception hierarchy shared across the package.

CLI exit codes map onto these: usage problems exit 2 (argparse),
``DataError`` exits 3, ``InternalError`` exits 4.
"""


class WarplisError(Exception):
    """Base class for all package errors."""


class DataError(WarplisError, ValueError):
    """Invalid input data or arguments (bad numbers, bad ranges, bad files)."""


class MalformedNumberError(DataError):
    """A token in a time-series file could not be parsed as a number."""


class EmptySeriesError(DataError):
    """A time series must contain at least one sample."""


class MatrixDimensionError(DataError):
    """An explicit dissimilarity matrix does not match the series lengths."""


class SeriesTooShortError(DataError):
    """The requested operation needs a longer series."""


class RangeError(DataError):
    """Subrange indices outside the valid 1-based bounds."""


class UnsupportedQueryError(WarplisError):
    """Query shape not served by the semi-local index (use the DP oracle)."""


class UnsupportedPairError(WarplisError):
    """A (k_lo, k_hi) pair outside every supported dominance-query case."""


class InternalError(WarplisError):
    """An internal invariant failed; indicates a bug, not bad input."""


class OracleInconsistencyError(InternalError):
    """Brute-force reconstruction was ambiguous or failed its round trip."""
