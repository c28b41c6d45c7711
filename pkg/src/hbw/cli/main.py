"""
hbw Command Line

Usage:
    hbw gen <family> <n>
    hbw partition <quiver-file> [--format text|structured] [--partition FILE]
    hbw matrices <quiver-file> [--format text|structured] [--partition FILE]
    hbw h1 <quiver-file> (<rep-file> | --regular) [--oracle | --both] [--field F]
    hbw fuzz [--count N] [--seed S] [--field F] [--max-vertices V]
             [--max-arrows A] [--max-dim D] [--report FILE]

Every file argument accepts "-" for standard input.

Exit codes: 0 success, 1 usage/parse/input error, 2 validation failure.
"""

import argparse
import logging
import sys

from ..algebra.matrices import algorithm_b
from ..algebra.partition import Partition, algorithm_a, validate_partition
from ..algebra.representation import QuiverRep, regular_rep
from ..cohomology.oracle import check_equivalence, oracle_h1
from ..cohomology.theorem import H1Result, h1
from ..core.field import parse_field
from ..core.quiver import Quiver
from .documents import (
    dump_json,
    load_partition,
    load_quiver,
    load_rep,
    matrix_pair_to_doc,
    partition_to_doc,
    quiver_to_doc,
    render_matrix_pair,
)
from .examples import FAMILIES, gen_example
from .fuzz import (
    DEFAULT_COUNT,
    DEFAULT_MAX_ARROWS,
    DEFAULT_MAX_DIM,
    DEFAULT_MAX_VERTICES,
    DEFAULT_PRIME,
    DEFAULT_SEED,
    FuzzConfig,
    run_fuzz,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INVALID = 2


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with EXIT_INPUT."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _partition_for(quiver: Quiver, path: str | None) -> tuple[Partition, bool]:
    """Load or compute a partition; the flag reports whether it is valid."""
    partition = load_partition(quiver, path) if path else algorithm_a(quiver)
    report = validate_partition(quiver, partition)
    if not report.is_valid:
        print(report, file=sys.stderr)
    return partition, report.is_valid


def cmd_gen(args: argparse.Namespace) -> int:
    sys.stdout.write(dump_json(quiver_to_doc(gen_example(args.family, args.n))))
    return EXIT_OK


def cmd_partition(args: argparse.Namespace) -> int:
    quiver = load_quiver(args.quiver)
    partition, valid = _partition_for(quiver, args.partition)
    if args.format == "structured":
        sys.stdout.write(dump_json(partition_to_doc(partition)))
    else:
        print(partition.render())
    return EXIT_OK if valid else EXIT_INVALID


def cmd_matrices(args: argparse.Namespace) -> int:
    quiver = load_quiver(args.quiver)
    partition, valid = _partition_for(quiver, args.partition)
    if not valid:
        return EXIT_INVALID
    pair = algorithm_b(quiver, partition)
    if args.format == "structured":
        sys.stdout.write(dump_json(matrix_pair_to_doc(pair)))
    else:
        print(f"partition: {partition.render()}")
        print(render_matrix_pair(pair))
    return EXIT_OK


def _print_h1(result: H1Result) -> None:
    print(f"dim H^1 = {result.dim}")
    blocks = ", ".join(f"{b.arrow}->{b.target}[{b.dim}]" for b in result.ambient.blocks)
    print(f"ambient: {blocks or '—'} (total {result.ambient.total_dim})")
    print(f"ider rank: {result.ider_rank}")
    if result.display_labels:
        print("basis:")
        for label in result.display_labels:
            print(f"  {label}")


def cmd_h1(args: argparse.Namespace) -> int:
    quiver = load_quiver(args.quiver)
    rep: QuiverRep
    if args.regular:
        if args.rep is not None:
            raise ValueError("Give either a representation file or --regular, not both")
        rep = regular_rep(quiver, parse_field(args.field or "q"))
    elif args.rep is None:
        raise ValueError("A representation file or --regular is required")
    elif args.field is not None:
        raise ValueError("--field applies only to --regular; a representation file names its own field")
    else:
        rep = load_rep(quiver, args.rep)

    if args.oracle:
        _print_h1(oracle_h1(quiver, rep))
        return EXIT_OK
    _print_h1(h1(quiver, rep))
    if not args.both:
        return EXIT_OK

    oracle = oracle_h1(quiver, rep)
    equivalence = check_equivalence(quiver, rep)
    print(f"oracle: dim H^1 = {oracle.dim} (ider rank {oracle.ider_rank})")
    print(f"agreement: {equivalence}")
    return EXIT_OK if equivalence.passed else EXIT_INVALID


def cmd_fuzz(args: argparse.Namespace) -> int:
    config = FuzzConfig(
        count=args.count,
        seed=args.seed,
        field=args.field,
        max_vertices=args.max_vertices,
        max_arrows=args.max_arrows,
        max_dim=args.max_dim,
    )
    report = run_fuzz(config)
    text = dump_json(report.to_dict())
    if args.report:
        with open(args.report, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"Wrote fuzz report to {args.report}")
    print(report.summary())
    if report.first_failure is not None:
        sys.stdout.write(dump_json(report.first_failure))
    return EXIT_OK if report.ok else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hbw", description="First Baues-Wirsching cohomology of free categories")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="Increase log verbosity (-v info, -vv debug)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="Print an example quiver document")
    gen.add_argument("family", choices=FAMILIES)
    gen.add_argument("n", type=int)
    gen.set_defaults(handler=cmd_gen)

    part = sub.add_parser("partition", help="Run Algorithm A and validate the result")
    part.add_argument("quiver", help="Quiver document, or - for stdin")
    part.add_argument("--format", choices=("text", "structured"), default="text")
    part.add_argument("--partition", help="Validate this partition document instead")
    part.set_defaults(handler=cmd_partition)

    mats = sub.add_parser("matrices", help="Run Algorithm B")
    mats.add_argument("quiver", help="Quiver document, or - for stdin")
    mats.add_argument("--format", choices=("text", "structured"), default="text")
    mats.add_argument("--partition", help="Use this partition document")
    mats.set_defaults(handler=cmd_matrices)

    coh = sub.add_parser("h1", help="Compute dim HBW^1 and a basis")
    coh.add_argument("quiver", help="Quiver document, or - for stdin")
    coh.add_argument("rep", nargs="?", help="Representation document, or - for stdin")
    coh.add_argument("--regular", action="store_true", help="Use the regular module (acyclic quivers)")
    coh.add_argument("--field", help="Field for --regular: q or p:<prime> (default: q)")
    route = coh.add_mutually_exclusive_group()
    route.add_argument("--oracle", action="store_true", help="Use the inner-derivation oracle only")
    route.add_argument("--both", action="store_true", help="Run both routes and compare them")
    coh.set_defaults(handler=cmd_h1)

    fuzz = sub.add_parser("fuzz", help="Randomized differential test of both routes")
    fuzz.add_argument("--count", type=int, default=DEFAULT_COUNT)
    fuzz.add_argument("--seed", type=int, default=DEFAULT_SEED)
    fuzz.add_argument("--field", default="q", help=f"q or p:<prime> (e.g. p:{DEFAULT_PRIME})")
    fuzz.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    fuzz.add_argument("--max-arrows", type=int, default=DEFAULT_MAX_ARROWS)
    fuzz.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM)
    fuzz.add_argument("--report", help="Also write the JSON report to this file")
    fuzz.set_defaults(handler=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.handler(args)
    except (ValueError, OSError) as e:
        print(f"hbw: error: {e}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
