import pytest

from warplis.errors import (
    DataError,
    EmptySeriesError,
    MalformedNumberError,
    MatrixDimensionError,
)
from warplis.model import (
    Alignment,
    DissimilaritySpec,
    TimeSeries,
    build_dissimilarity,
    parse_time_series,
)


class TestParse:
    def test_csv_single_line(self):
        assert parse_time_series("0,1\n", "csv").values == (0.0, 1.0)

    def test_csv_one_per_line(self):
        assert parse_time_series("1\n2\n3\n", "csv").values == (1.0, 2.0, 3.0)

    def test_json(self):
        assert parse_time_series("[1.5, 2.0, 1.5]", "json").values == (1.5, 2.0, 1.5)

    def test_empty_is_error(self):
        with pytest.raises(EmptySeriesError):
            parse_time_series("", "csv")
        with pytest.raises(EmptySeriesError):
            parse_time_series("[]", "json")

    def test_malformed(self):
        with pytest.raises(MalformedNumberError):
            parse_time_series("1,zap", "csv")
        with pytest.raises(MalformedNumberError):
            parse_time_series('{"a": 1}', "json")
        with pytest.raises(MalformedNumberError):
            parse_time_series('[1, "x"]', "json")


class TestBuildDissimilarity:
    def test_absolute(self):
        t = build_dissimilarity(TimeSeries((0, 1)), TimeSeries((1, 1)), DissimilaritySpec())
        assert t.d == ((1, 1), (0, 0))
        assert t.c == 1

    def test_squared(self):
        t = build_dissimilarity(
            TimeSeries((0, 2)),
            TimeSeries((0,)),
            DissimilaritySpec(kind="squared-difference"),
        )
        assert t.d == ((0,), (4,))
        assert t.c == 4

    def test_rounding_half_up(self):
        t = build_dissimilarity(TimeSeries((0.4,)), TimeSeries((0,)), DissimilaritySpec())
        assert t.d == ((0,),)
        assert t.c == 0
        t = build_dissimilarity(TimeSeries((0.5,)), TimeSeries((0,)), DissimilaritySpec())
        assert t.d == ((1,),)

    def test_cap_is_exact_max(self, rng):
        for _ in range(50):
            a = TimeSeries(tuple(rng.randint(0, 5) for _ in range(rng.randint(1, 6))))
            b = TimeSeries(tuple(rng.randint(0, 5) for _ in range(rng.randint(1, 6))))
            t = build_dissimilarity(a, b, DissimilaritySpec())
            flat = [v for row in t.d for v in row]
            assert max(flat) == t.c
            assert min(flat) >= 0

    def test_cap_override_larger_keeps_grid(self, rng):
        a = TimeSeries((0, 3, 1))
        b = TimeSeries((2, 2))
        base = build_dissimilarity(a, b, DissimilaritySpec())
        for extra in (0, 1, 3):
            t = build_dissimilarity(
                a, b, DissimilaritySpec(cap_override=base.c + extra)
            )
            assert t.d == base.d
            assert t.c == base.c + extra
            assert t.warnings == ()

    def test_cap_override_smaller_clamps_with_warning(self):
        t = build_dissimilarity(
            TimeSeries((0, 3)), TimeSeries((0,)), DissimilaritySpec(cap_override=2)
        )
        assert t.d == ((0,), (2,))
        assert len(t.warnings) == 1

    def test_explicit_matrix(self):
        spec = DissimilaritySpec(kind="explicit-matrix", matrix=((0, 2), (1, 0)))
        t = build_dissimilarity(TimeSeries((9, 9)), TimeSeries((9, 9)), spec)
        assert t.d == ((0, 2), (1, 0))

    def test_matrix_dimension_mismatch(self):
        spec = DissimilaritySpec(kind="explicit-matrix", matrix=((0, 2),))
        with pytest.raises(MatrixDimensionError):
            build_dissimilarity(TimeSeries((9, 9)), TimeSeries((9, 9)), spec)

    def test_negative_matrix_rejected(self):
        with pytest.raises(DataError):
            DissimilaritySpec(kind="explicit-matrix", matrix=((-1,),))


def test_time_series_must_be_nonempty():
    with pytest.raises(EmptySeriesError):
        TimeSeries(())


def test_alignment_rejects_illegal_steps():
    with pytest.raises(DataError):
        Alignment(pairs=((1, 1), (3, 1)), discrepancy=0)
    Alignment(pairs=((1, 1), (2, 2), (3, 2), (3, 3)), discrepancy=0)
