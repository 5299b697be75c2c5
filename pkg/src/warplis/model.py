"""Input representation: time series, dissimilarity grids, alignments.

Conventions used across the whole package:

* All series and grid indices are 1-based, and ranges like ``A[i_lo : i_hi]``
  are inclusive on both ends (empty when ``i_lo > i_hi``).
* A dissimilarity grid stores nonnegative integers ``d[i][j] <= c`` where
  ``c`` is the cap.  Real-valued (unrounded) dissimilarities are kept
  alongside for the real-weight evaluation path.
* Every type here is immutable after construction and safe to share
  between threads.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .errors import (
    DataError,
    EmptySeriesError,
    MalformedNumberError,
    MatrixDimensionError,
)

KIND_ABS = "absolute-difference"
KIND_SQ = "squared-difference"
KIND_MATRIX = "explicit-matrix"
_KINDS = (KIND_ABS, KIND_SQ, KIND_MATRIX)

ROUND_HALF_UP = "nearest-half-up"


@dataclass(frozen=True)
class TimeSeries:
    """A nonempty sequence of real-valued samples."""

    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) == 0:
            raise EmptySeriesError("a time series needs at least one sample")
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class DissimilaritySpec:
    """How to turn a pair of series into an integer dissimilarity grid.

    ``kind`` is one of ``absolute-difference``, ``squared-difference`` or
    ``explicit-matrix`` (the latter requires ``matrix``, a full grid of
    nonnegative values).  ``cap_override`` forces a cap larger than the
    observed maximum; downstream distances are invariant to that choice.
    """

    kind: str = KIND_ABS
    rounding: str = ROUND_HALF_UP
    cap_override: int | None = None
    matrix: tuple[tuple[float, ...], ...] | None = field(default=None)

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DataError(f"unknown dissimilarity kind: {self.kind!r}")
        if self.rounding != ROUND_HALF_UP:
            raise DataError(f"unknown rounding rule: {self.rounding!r}")
        if self.cap_override is not None:
            if int(self.cap_override) != self.cap_override or self.cap_override < 0:
                raise DataError("cap_override must be a nonnegative integer")
        if self.kind == KIND_MATRIX:
            if self.matrix is None:
                raise DataError("explicit-matrix needs a matrix")
            rows = tuple(tuple(float(x) for x in row) for row in self.matrix)
            if any(x < 0 for row in rows for x in row):
                raise DataError("dissimilarities must be nonnegative")
            object.__setattr__(self, "matrix", rows)
        elif self.matrix is not None:
            raise DataError(f"matrix only makes sense with kind={KIND_MATRIX!r}")


@dataclass(frozen=True)
class DissimilarityTable:
    """Rounded integer dissimilarity grid with its cap.

    ``d[i-1][j-1]`` holds the dissimilarity of ``A[i]`` and ``B[j]``;
    ``real_d`` keeps the unrounded values for the real-weight path.
    ``warnings`` records values that were clamped down to the cap.
    """

    m: int
    n: int
    d: tuple[tuple[int, ...], ...]
    c: int
    real_d: tuple[tuple[float, ...], ...] | None = None
    warnings: tuple[str, ...] = ()

    def at(self, i: int, j: int) -> int:
        """Integer dissimilarity at 1-based (i, j)."""
        return self.d[i - 1][j - 1]

    def real_at(self, i: int, j: int) -> float:
        grid = self.real_d if self.real_d is not None else self.d
        return grid[i - 1][j - 1]

    @property
    def real_c(self) -> float:
        """Cap for the real-valued grid (its observed maximum)."""
        grid = self.real_d if self.real_d is not None else self.d
        return max(max(row) for row in grid)

    def check_range(self, i_lo: int, i_hi: int, j_lo: int, j_hi: int) -> None:
        from .errors import RangeError

        if not (1 <= i_lo <= i_hi <= self.m and 1 <= j_lo <= j_hi <= self.n):
            raise RangeError(
                f"need 1 <= {i_lo} <= {i_hi} <= {self.m} and 1 <= {j_lo} <= {j_hi} <= {self.n}"
            )


@dataclass(frozen=True)
class Alignment:
    """A warping path: index pairs stepping by (1,1), (1,0) or (0,1)."""

    pairs: tuple[tuple[int, int], ...]
    discrepancy: float

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(i), int(j)) for i, j in self.pairs))
        for (i0, j0), (i1, j1) in zip(self.pairs, self.pairs[1:]):
            if (i1 - i0, j1 - j0) not in ((1, 1), (1, 0), (0, 1)):
                raise DataError(f"illegal alignment step {(i0, j0)} -> {(i1, j1)}")


def _round_half_up(x: float) -> int:
    # Ties at .5 round up; x is nonnegative here.
    return int(math.floor(x + 0.5))


def parse_time_series(text: str, fmt: str = "csv") -> TimeSeries:
    """Parse a series from CSV (one sample per line and/or comma-separated)
    or from a flat JSON array of numbers."""
    if fmt == "csv":
        tokens = [t.strip() for t in text.replace("\n", ",").split(",")]
        tokens = [t for t in tokens if t]
        if not tokens:
            raise EmptySeriesError("no samples found")
        values = []
        for tok in tokens:
            try:
                values.append(float(tok))
            except ValueError:
                raise MalformedNumberError(f"not a number: {tok!r}") from None
        return TimeSeries(tuple(values))
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedNumberError(f"invalid JSON: {exc}") from None
        if not isinstance(data, list):
            raise MalformedNumberError("expected a flat JSON array of numbers")
        if not data:
            raise EmptySeriesError("no samples found")
        values = []
        for item in data:
            if isinstance(item, bool) or not isinstance(item, (int, float)):
                raise MalformedNumberError(f"not a number: {item!r}")
            values.append(float(item))
        return TimeSeries(tuple(values))
    raise DataError(f"unknown format: {fmt!r}")


def build_dissimilarity(
    a: TimeSeries, b: TimeSeries, spec: DissimilaritySpec
) -> DissimilarityTable:
    """Evaluate the dissimilarity of every sample pair, round half-up, and
    clamp into [0, c].

    Without ``cap_override`` the cap equals the observed maximum exactly.
    A smaller override is not an error: values clamp to the cap and each
    clamp is recorded in the table's warnings.
    """
    m, n = len(a), len(b)
    if spec.kind == KIND_MATRIX:
        matrix = spec.matrix
        if len(matrix) != m or any(len(row) != n for row in matrix):
            raise MatrixDimensionError(
                f"matrix must be {m}x{n}, got {len(matrix)}x"
                f"{len(matrix[0]) if matrix else 0}"
            )
        raw = [[matrix[i][j] for j in range(n)] for i in range(m)]
    elif spec.kind == KIND_ABS:
        raw = [[abs(a.values[i] - b.values[j]) for j in range(n)] for i in range(m)]
    else:
        raw = [[(a.values[i] - b.values[j]) ** 2 for j in range(n)] for i in range(m)]

    rounded = [[_round_half_up(raw[i][j]) for j in range(n)] for i in range(m)]
    observed = max(max(row) for row in rounded)
    c = observed if spec.cap_override is None else int(spec.cap_override)

    warnings = []
    d = []
    for i in range(m):
        row = []
        for j in range(n):
            v = rounded[i][j]
            if v > c:
                warnings.append(f"d[{i + 1}][{j + 1}]={v} clamped to cap {c}")
                v = c
            row.append(v)
        d.append(tuple(row))

    return DissimilarityTable(
        m=m,
        n=n,
        d=tuple(d),
        c=c,
        real_d=tuple(tuple(row) for row in raw),
        warnings=tuple(warnings),
    )
