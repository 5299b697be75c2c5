"""Command-line interface.

All subcommands print a single JSON object to stdout.  Identical inputs
and seeds give byte-identical output, except for the timing fields of
``bench``.  Exit codes: 0 success, 2 usage, 3 data error, 4 internal
invariant violation.  The environment variable WARP_LIS_THREADS caps
worker parallelism; the current implementation is single-threaded, which
satisfies any cap of at least one.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import statistics
import sys
import time

from .dp import dtw_alignment
from .errors import DataError, InternalError, WarplisError
from .index import (
    PrefixAVsSuffixB,
    SubstringVsWholeB,
    SuffixAVsPrefixB,
    WholeAVsSubstring,
    build_index,
    load_index,
    query_info,
    save_index,
)
from .model import (
    DissimilaritySpec,
    TimeSeries,
    build_dissimilarity,
    parse_time_series,
)
from .reduction import build_dtw_sequence, build_weighted_reduction
from .selftest import run_selftest
from .solvers import circular_dtw, periodic_dtw, sqrt_dtw

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_INTERNAL = 4


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")


def _thread_cap() -> int:
    raw = os.environ.get("WARP_LIS_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
        if cap < 1:
            raise ValueError
    except ValueError:
        print(f"warning: ignoring invalid WARP_LIS_THREADS={raw!r}", file=sys.stderr)
        return 1
    return cap


def _read_series(path: str) -> TimeSeries:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from None
    fmt = "json" if text.lstrip().startswith("[") else "csv"
    return parse_time_series(text, fmt)


def _parse_spec(diss: str, cap: int | None) -> DissimilaritySpec:
    if diss == "abs":
        return DissimilaritySpec(kind="absolute-difference", cap_override=cap)
    if diss == "sq":
        return DissimilaritySpec(kind="squared-difference", cap_override=cap)
    if diss.startswith("matrix:"):
        path = diss.split(":", 1)[1]
        try:
            with open(path, "r", encoding="utf-8") as fh:
                rows = json.load(fh)
        except OSError as exc:
            raise DataError(f"cannot read {path}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise DataError(f"bad matrix file {path}: {exc}") from None
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise DataError("matrix file must be a JSON array of rows")
        return DissimilaritySpec(
            kind="explicit-matrix",
            cap_override=cap,
            matrix=tuple(tuple(row) for row in rows),
        )
    raise DataError(f"unknown dissimilarity {diss!r}; use abs, sq, or matrix:FILE")


def _add_series_args(p, need_b: bool = True) -> None:
    p.add_argument("--a", required=True, metavar="FILE", help="series A (CSV or JSON)")
    if need_b:
        p.add_argument("--b", required=True, metavar="FILE", help="series B (CSV or JSON)")
    p.add_argument("--diss", default="abs", help="abs | sq | matrix:FILE (default abs)")
    p.add_argument("--c", type=int, default=None, help="cap override (optional)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="warplis",
        description="DTW distances through banded-LIS reductions and a semi-local query index",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dtw", help="DTW distance and one optimal alignment")
    _add_series_args(p)

    p = sub.add_parser("reduce", help="emit S, W and the G/H arrays as JSON")
    _add_series_args(p)

    p_index = sub.add_parser("index", help="build or query a semi-local index")
    isub = p_index.add_subparsers(dest="index_command", required=True)
    p = isub.add_parser("build", help="build an index and write it to a file")
    _add_series_args(p)
    p.add_argument("--out", required=True, metavar="IDX", help="output index file")
    p = isub.add_parser("query", help="query a stored index")
    p.add_argument("--idx", required=True, metavar="IDX", help="index file")
    p.add_argument(
        "--shape",
        required=True,
        choices=("sub-a", "sub-b", "pre-suf", "suf-pre"),
        help="query shape",
    )
    p.add_argument("--i1", type=int, default=None)
    p.add_argument("--i2", type=int, default=None)
    p.add_argument("--j1", type=int, default=None)
    p.add_argument("--j2", type=int, default=None)

    p = sub.add_parser("circular", help="best rotation of A against B")
    _add_series_args(p)

    p = sub.add_parser("sqrt", help="best split of A into two closest halves")
    _add_series_args(p, need_b=False)

    p = sub.add_parser("periodic", help="read B as consecutive inexact copies of A")
    _add_series_args(p)

    p = sub.add_parser("selftest", help="seeded randomized cross-validation suites")
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=7)

    p = sub.add_parser("bench", help="coarse build/query timing report")
    p.add_argument("--sizes", default="100,200", help="comma-separated series lengths")
    p.add_argument("--cap", type=int, default=2, help="value range of the series")
    p.add_argument("--queries", type=int, default=200)
    p.add_argument("--seed", type=int, default=7)

    return parser


def _shape_from_args(args) -> object:
    def need(flag, value):
        if value is None:
            raise DataError(f"shape {args.shape} requires --{flag}")
        return value

    if args.shape == "sub-a":
        return SubstringVsWholeB(need("i1", args.i1), need("i2", args.i2))
    if args.shape == "sub-b":
        return WholeAVsSubstring(need("j1", args.j1), need("j2", args.j2))
    if args.shape == "pre-suf":
        return PrefixAVsSuffixB(i_hi=need("i2", args.i2), j_lo=need("j1", args.j1))
    return SuffixAVsPrefixB(i_lo=need("i1", args.i1), j_hi=need("j2", args.j2))


def _cmd_dtw(args) -> int:
    a, b = _read_series(args.a), _read_series(args.b)
    spec = _parse_spec(args.diss, args.c)
    table = build_dissimilarity(a, b, spec)
    distance, alignment = dtw_alignment(table)
    _emit({"distance": distance, "path": [[i, j] for i, j in alignment.pairs]})
    return EXIT_OK


def _cmd_reduce(args) -> int:
    a, b = _read_series(args.a), _read_series(args.b)
    table = build_dissimilarity(a, b, _parse_spec(args.diss, args.c))
    seq = build_dtw_sequence(build_weighted_reduction(table))
    _emit(
        {
            "S": seq.s.tolist(),
            "W": seq.w_total,
            "Gl": list(seq.g_left),
            "Gr": list(seq.g_right),
            "Hl": list(seq.h_left),
            "Hr": list(seq.h_right),
        }
    )
    return EXIT_OK


def _cmd_index_build(args) -> int:
    a, b = _read_series(args.a), _read_series(args.b)
    idx = build_index(a, b, _parse_spec(args.diss, args.c))
    save_index(idx, args.out)
    _emit({"written": args.out, "m": idx.m, "n": idx.n, "c": idx.c, "W": idx.seq.w_total})
    return EXIT_OK


def _cmd_index_query(args) -> int:
    idx = load_index(args.idx)
    result = query_info(idx, _shape_from_args(args))
    _emit({"distance": result.distance, "fallback": result.fallback})
    return EXIT_OK


def _cmd_circular(args) -> int:
    a, b = _read_series(args.a), _read_series(args.b)
    r = circular_dtw(a, b, _parse_spec(args.diss, args.c))
    _emit({"distance": r.distance, "shift": r.shift})
    return EXIT_OK


def _cmd_sqrt(args) -> int:
    a = _read_series(args.a)
    r = sqrt_dtw(a, _parse_spec(args.diss, args.c))
    _emit({"distance": r.distance, "split": r.split})
    return EXIT_OK


def _cmd_periodic(args) -> int:
    a, b = _read_series(args.a), _read_series(args.b)
    r = periodic_dtw(a, b, _parse_spec(args.diss, args.c))
    _emit(
        {
            "cost": r.cost,
            "ell": r.ell,
            "cuts": list(r.cuts),
            "i_lo": r.i_lo,
            "i_hi": r.i_hi,
            "segments": [list(seg) for seg in r.segments(len(b))],
        }
    )
    return EXIT_OK


def _cmd_selftest(args) -> int:
    report = run_selftest(max_len=args.max_len, trials=args.trials, seed=args.seed)
    _emit(report)
    return EXIT_OK if report["passed"] else EXIT_INTERNAL


def _cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    sizes = []
    for tok in args.sizes.split(","):
        tok = tok.strip()
        if tok:
            sizes.append(int(tok))
    if not sizes or any(s < 1 for s in sizes):
        raise DataError("--sizes needs positive integers")
    spec = DissimilaritySpec()
    report = {"cap": args.cap, "seed": args.seed, "runs": []}
    for n in sizes:
        a = TimeSeries(tuple(rng.randint(0, args.cap) for _ in range(n)))
        b = TimeSeries(tuple(rng.randint(0, args.cap) for _ in range(n)))
        t0 = time.perf_counter()
        idx = build_index(a, b, spec)
        build_s = time.perf_counter() - t0
        times = []
        for _ in range(args.queries):
            i = rng.randint(1, n)
            j = rng.randint(i, n)
            t1 = time.perf_counter()
            query_info(idx, SubstringVsWholeB(i, j))
            times.append(time.perf_counter() - t1)
        report["runs"].append(
            {
                "n": n,
                "W": idx.seq.w_total,
                "build_seconds": round(build_s, 6),
                "query_median_seconds": round(statistics.median(times), 9),
            }
        )
    _emit(report)
    return EXIT_OK


_COMMANDS = {
    "dtw": _cmd_dtw,
    "reduce": _cmd_reduce,
    "circular": _cmd_circular,
    "sqrt": _cmd_sqrt,
    "periodic": _cmd_periodic,
    "selftest": _cmd_selftest,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    _thread_cap()
    try:
        if args.command == "index":
            if args.index_command == "build":
                return _cmd_index_build(args)
            return _cmd_index_query(args)
        return _COMMANDS[args.command](args)
    except DataError as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return EXIT_DATA
    except InternalError as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return EXIT_INTERNAL
    except WarplisError as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return EXIT_DATA


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
