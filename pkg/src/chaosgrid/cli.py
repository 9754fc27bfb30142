"""Command-line client: gen, place, stats, bifurcate, serve.

All subcommands are thin wrappers over the core modules; the JSON they
emit comes from the same pydantic models as the HTTP API, so a
competition-mode `place` invocation and the equivalent /api/placements
request produce identical bytes. JSON payloads are written without a
trailing newline for that reason.

Exit codes: 0 success, 2 invalid parameters (one-line diagnostic on
stderr), 3 serve port already in use.
"""

from __future__ import annotations

import argparse
import socket
import sys
from pathlib import Path

from .logistic import (
    DEFAULT_BURN_IN,
    ChaoticSeed,
    DegenerateOrbitError,
    generate_sequence,
)
from .mt19937 import MT19937
from .placement import GridError, GridSpec
from .schemas import (
    ComparisonPayload,
    SeedModel,
    SequencePayload,
    StatsReportModel,
    format_seed_value,
    parse_seed_value,
    render_placement_json,
)
from .stats import bifurcation_csv, bifurcation_data, comparison_csv, describe

TABLE_DEFAULTS = {"x0": "0.25", "r": "3.995", "mt_seed": 624, "length": 1000}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _seed_from_args(args) -> ChaoticSeed:
    return ChaoticSeed(
        x0=parse_seed_value(args.x0, "x0"), r=parse_seed_value(args.r, "r")
    )


def _run_gen(args) -> int:
    sequence = generate_sequence(_seed_from_args(args), args.len, args.burn_in)
    if args.format == "json":
        _emit(SequencePayload.from_sequence(sequence).model_dump_json(), args.out)
    else:
        lines = [
            f"# x0={format_seed_value(sequence.seed.x0)}",
            f"# r={format_seed_value(sequence.seed.r)}",
            f"# burn_in={sequence.burn_in}",
            "index,value",
        ]
        lines.extend(f"{i},{v!r}" for i, v in enumerate(sequence.values, start=1))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _run_place(args) -> int:
    grid = GridSpec(width=args.width, height=args.height)
    body = render_placement_json(args.x0, args.r, grid, args.mode, args.count, args.burn_in)
    _emit(body, args.out)
    return 0


def _run_stats(args) -> int:
    seed = _seed_from_args(args)
    logistic_values = generate_sequence(seed, args.len, args.burn_in).values
    mt_values = MT19937(args.mt_seed).reals(args.len)
    logistic_report = describe(logistic_values, args.bins)
    mt_report = describe(mt_values, args.bins)
    if args.format == "json":
        payload = ComparisonPayload(
            length=args.len,
            seed=SeedModel.from_seed(seed),
            mt_seed=args.mt_seed,
            burn_in=args.burn_in,
            logistic=StatsReportModel.from_report(logistic_report),
            mt19937=StatsReportModel.from_report(mt_report),
        )
        _emit(payload.model_dump_json(), args.out)
    else:
        _emit(comparison_csv(logistic_report, mt_report), args.out)
    return 0


def _run_bifurcate(args) -> int:
    points = bifurcation_data(
        args.r_min, args.r_max, args.steps, args.settle, args.samples, args.x0
    )
    _emit(bifurcation_csv(points), args.out)
    return 0


def _run_serve(args) -> int:
    import uvicorn

    from .api import app

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        probe.bind((args.host, args.port))
    except OSError:
        print(f"error: port {args.port} already in use on {args.host}", file=sys.stderr)
        return 3
    finally:
        probe.close()
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def _positive_int(raw: str) -> int:
    value = int(raw)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative_int(raw: str) -> int:
    value = int(raw)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _add_seed_options(parser, x0_default=None, r_default=None):
    required = x0_default is None
    parser.add_argument("--x0", default=x0_default, required=required,
                        help="initial state in (0,1), as a decimal string")
    parser.add_argument("--r", default=r_default, required=required,
                        help="map parameter in [3.57, 4.0], as a decimal string")
    parser.add_argument("--burn-in", dest="burn_in", type=_nonnegative_int,
                        default=DEFAULT_BURN_IN, help="iterations discarded before output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaosgrid",
        description="Reproducible chaotic randomness: sequences, grid placement, statistics",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    gen = sub.add_parser("gen", help="generate a chaotic sequence")
    _add_seed_options(gen)
    gen.add_argument("--len", type=_positive_int, required=True, help="number of values")
    gen.add_argument("--format", choices=("json", "csv"), default="json")
    gen.add_argument("--out", default=None, help="write to file instead of stdout")
    gen.set_defaults(func=_run_gen)

    place = sub.add_parser("place", help="random placement order for a grid")
    _add_seed_options(place)
    place.add_argument("--width", type=int, required=True)
    place.add_argument("--height", type=int, required=True)
    place.add_argument("--mode", choices=("competition", "casual"), default="competition")
    place.add_argument("--count", type=_nonnegative_int, default=None,
                       help="emit only the first N placements")
    place.add_argument("--out", default=None)
    place.set_defaults(func=_run_place)

    stats = sub.add_parser("stats", help="compare logistic map and MT19937 output")
    _add_seed_options(stats, x0_default=TABLE_DEFAULTS["x0"], r_default=TABLE_DEFAULTS["r"])
    stats.add_argument("--mt-seed", dest="mt_seed", type=int, default=TABLE_DEFAULTS["mt_seed"])
    stats.add_argument("--len", type=_positive_int, default=TABLE_DEFAULTS["length"])
    stats.add_argument("--bins", type=_positive_int, default=10)
    stats.add_argument("--format", choices=("json", "csv"), default="json")
    stats.add_argument("--out", default=None)
    stats.set_defaults(func=_run_stats)

    bifurcate = sub.add_parser("bifurcate", help="attractor samples across an r range, as CSV")
    bifurcate.add_argument("--r-min", dest="r_min", type=float, default=2.5)
    bifurcate.add_argument("--r-max", dest="r_max", type=float, default=4.0)
    bifurcate.add_argument("--steps", type=_positive_int, default=400)
    bifurcate.add_argument("--settle", type=_nonnegative_int, default=500)
    bifurcate.add_argument("--samples", type=_positive_int, default=200)
    bifurcate.add_argument("--x0", type=float, default=0.5)
    bifurcate.add_argument("--out", default=None)
    bifurcate.set_defaults(func=_run_bifurcate)

    serve = sub.add_parser("serve", help="run the HTTP placement service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=_run_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, GridError, DegenerateOrbitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
