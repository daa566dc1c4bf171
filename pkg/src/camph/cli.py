"""Command-line front end.

Reads a point cloud or an explicit filtration, runs the engine, writes
the diagram (file or stdout). Exit codes: 0 success, 1 bad input,
2 internal invariant failure, 3 engine/oracle mismatch under --oracle.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import io as formats
from .builders import build_rips
from .diagram import PersistenceDiagram, diagram_equal
from .engine import EngineOptions, compute_persistence
from .errors import CamphError, CompositeModulus
from .field import PrimeField
from .oracle import reduce as oracle_reduce
from .stats import format_stats

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2
EXIT_ORACLE = 3

_INPUT_ERRORS = (CompositeModulus, ValueError, OSError)


@dataclass
class CliConfig:
    input_path: str
    input_format: str  # "points" | "filtration"
    field_p: int
    rips_max_edge: float | None = None
    max_dim: int | None = None
    lazy: bool = True
    reorder: bool = True
    stats: bool = False
    oracle_check: bool = False
    output_path: str | None = None
    emit_zero_length: bool = False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="camph",
        description="Persistence diagrams of filtered simplicial complexes "
        "over prime fields.",
    )
    parser.add_argument("--input", required=True, help="input file path")
    parser.add_argument(
        "--format",
        required=True,
        choices=("points", "filtration"),
        help="points: build a flag-complex filtration; filtration: explicit list",
    )
    parser.add_argument(
        "--field", required=True, type=int, metavar="P", help="prime characteristic"
    )
    parser.add_argument(
        "--rips-max-edge",
        type=float,
        help="diameter cap for points input",
    )
    parser.add_argument(
        "--max-dim", type=int, help="top simplex dimension for points input"
    )
    parser.add_argument("--output", help="diagram file (default: stdout)")
    parser.add_argument(
        "--lazy",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="defer creator insertions (default on)",
    )
    parser.add_argument(
        "--reorder",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="reorder equal-value blocks (default on)",
    )
    parser.add_argument("--stats", action="store_true", help="emit run statistics")
    parser.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against the reduction oracle",
    )
    parser.add_argument(
        "--emit-zero-length",
        action="store_true",
        help="keep pairs with equal birth and death",
    )
    return parser


def _fail(message: str) -> None:
    print(f"camph: error: {message}", file=sys.stderr)


def _print_diff(engine_d: PersistenceDiagram, oracle_d: PersistenceDiagram) -> None:
    left, right = engine_d.multiset(), oracle_d.multiset()
    print("camph: engine and oracle diagrams differ", file=sys.stderr)
    for label, extra in (("engine only", left - right), ("oracle only", right - left)):
        for (dim, birth, death), count in sorted(extra.items()):
            print(
                f"  {label}: dim={dim} birth={birth} death={death} x{count}",
                file=sys.stderr,
            )


def run(config: CliConfig) -> int:
    try:
        field = PrimeField(config.field_p)
        if config.input_format == "points":
            if config.rips_max_edge is None or config.max_dim is None:
                _fail("points input requires --rips-max-edge and --max-dim")
                return EXIT_INPUT
            points = formats.read_points(config.input_path)
            complex = build_rips(points, config.rips_max_edge, config.max_dim)
        else:
            complex = formats.read_filtration(config.input_path)
        options = EngineOptions(
            lazy=config.lazy,
            reorder=config.reorder,
            record_stats=config.stats,
            emit_zero_length=config.emit_zero_length,
        )
        diagram, stats = compute_persistence(complex, field, options)
    except _INPUT_ERRORS as exc:
        _fail(f"{type(exc).__name__}: {exc}")
        return EXIT_INPUT
    except CamphError as exc:
        _fail(f"internal {type(exc).__name__}: {exc}")
        return EXIT_INTERNAL

    text = formats.format_diagram(diagram)
    if config.output_path:
        Path(config.output_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)

    if config.stats:
        stats_text = format_stats(stats)
        if config.output_path:
            Path(config.output_path + ".stats").write_text(stats_text, encoding="utf-8")
        else:
            sys.stderr.write(stats_text)

    if config.oracle_check:
        oracle_diagram = oracle_reduce(
            complex, field, emit_zero_length=config.emit_zero_length
        )
        if not diagram_equal(diagram, oracle_diagram):
            _print_diff(diagram, oracle_diagram)
            return EXIT_ORACLE
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = CliConfig(
        input_path=args.input,
        input_format=args.format,
        field_p=args.field,
        rips_max_edge=args.rips_max_edge,
        max_dim=args.max_dim,
        lazy=args.lazy,
        reorder=args.reorder,
        stats=args.stats,
        oracle_check=args.oracle,
        output_path=args.output,
        emit_zero_length=args.emit_zero_length,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
