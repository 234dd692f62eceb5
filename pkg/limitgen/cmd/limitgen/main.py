"""
limitgen - Main Entry Point

CLI interface with subcommands: closure, dim, play, refute, check, version.
"""

import argparse
import importlib
import logging
import sys
from typing import List, Optional

import yaml

from limitgen.cmd.limitgen.subcommands import EXIT_OK, EXIT_PROPERTY_FAILURE, EXIT_USAGE
from limitgen.pkg.errors import ClosureError, ExternalGeneratorError, RefutationError
from limitgen.pkg.version import get_version

logger = logging.getLogger(__name__)


def setup_logging(debug: bool = False):
    """Setup logging configuration; stdout stays reserved for command output."""
    level = logging.DEBUG if debug else logging.WARNING
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S',
        stream=sys.stderr,
    )


def _lazy(module: str, func: str):
    """Import the subcommand only when it runs."""
    def run(args):
        return getattr(importlib.import_module(f"limitgen.cmd.limitgen.subcommands.{module}"), func)(args)
    return run


def cmd_version(args) -> int:
    print(f"limitgen {get_version()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="limitgen",
        description="Noisy generation-in-the-limit harness",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  limitgen closure --collection collections/c_ex.col --noise 1 --set "(0,2)"
  limitgen dim --collection collections/c_ex.col --noise 1
  limitgen play --collection collections/c_ex.col --target L1 --noise 1 --noise-strings "(2,0)"
  limitgen play --generator chain --chain collections/chain_d.yaml --target P2
  limitgen refute --horizon 6
  limitgen check --suite closure --trials 200 --seed 1
        """
    )

    parser.add_argument(
        "--debug", "-d",
        action="store_true",
        help="Enable debug logging"
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # closure command
    closure_parser = subparsers.add_parser("closure", help="Print the noisy closure of a set")
    closure_parser.add_argument("--collection", "-c", required=True, help="Collection file")
    closure_parser.add_argument("--noise", "-i", type=int, required=True, help="Noise level")
    closure_parser.add_argument("--set", "-s", default="", help='Elements, e.g. "(0,1) (2,0)"')
    closure_parser.add_argument("--window", type=int, help="Also list closure members with id <= N")
    closure_parser.set_defaults(func=_lazy("closure", "cmd_closure"))

    # dim command
    dim_parser = subparsers.add_parser("dim", help="Noisy closure dimension with witness")
    dim_parser.add_argument("--collection", "-c", required=True, help="Collection file")
    dim_parser.add_argument("--noise", "-i", type=int, required=True, help="Noise level")
    dim_parser.add_argument("--max-size", "-m", type=int, help="Largest witness size reported exactly")
    dim_parser.add_argument("--pool-depth", type=int, help="Candidates per column (default noise + 2)")
    dim_parser.set_defaults(func=_lazy("dim", "cmd_dim"))

    # play command
    play_parser = subparsers.add_parser("play", help="Run one generation game")
    play_parser.add_argument("--collection", "-c", help="Collection file (defaults to the last chain level)")
    play_parser.add_argument("--target", "-t", required=True, help="Language name, or columns like 0,2")
    play_parser.add_argument("--noise", "-i", type=int, help="Generator noise level")
    play_parser.add_argument("--generator", "-g", default="closure",
                             help="closure, chain, first-column or external:CMD")
    play_parser.add_argument("--chain", help="Chain file for the chain generator")
    play_parser.add_argument("--steps", "-n", type=int, help="Number of steps")
    play_parser.add_argument("--schedule", default="prefix", help="prefix, interleave:P,Q,... or random[:SPREAD]")
    play_parser.add_argument("--spread", type=int, help="Spread for random schedules")
    play_parser.add_argument("--noise-strings", default="", help="Noise elements outside the target")
    play_parser.add_argument("--seed", type=int, default=0, help="Random seed")
    play_parser.add_argument("--trace", "-o", help="Write the trace here instead of stdout")
    play_parser.add_argument("--max-size", "-m", type=int, help="Dimension search budget")
    play_parser.add_argument("--pool-depth", type=int, help="Dimension search pool depth")
    play_parser.set_defaults(func=_lazy("play", "cmd_play"))

    # refute command
    refute_parser = subparsers.add_parser("refute", help="Refute a generator on the column family")
    refute_parser.add_argument("--horizon", "-H", type=int, help="Ladder horizon")
    refute_parser.add_argument("--iterations", "-n", type=int, help="iterations of the scattered-case construction")
    refute_parser.add_argument("--seed", type=int, default=0, help="Recorded seed")
    refute_parser.add_argument("--noise", "-i", type=int, default=1, help="Noise level of the built-in closure generator")
    refute_parser.add_argument("--generator", "-g", default="closure",
                               help="closure, fresh-column, first-column-repeat or external:CMD")
    refute_parser.set_defaults(func=_lazy("refute", "cmd_refute"))

    # check command
    check_parser = subparsers.add_parser("check", help="Run randomized property suites")
    check_parser.add_argument("--list", "-l", action="store_true", help="List available suites")
    check_parser.add_argument("--suite", default="all", help="Suite name")
    check_parser.add_argument("--trials", type=int, default=50, help="Trials per suite")
    check_parser.add_argument("--seed", type=int, default=1, help="Random seed")
    check_parser.set_defaults(func=_lazy("check", "cmd_check"))

    # version command
    version_parser = subparsers.add_parser("version", help="Show version")
    version_parser.set_defaults(func=cmd_version)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    setup_logging(args.debug)
    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        return args.func(args)
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        return 130
    except (ClosureError, RefutationError) as e:
        # engine invariant violations count as failures
        logger.debug("Invariant violated", exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_PROPERTY_FAILURE
    except (ValueError, OSError, yaml.YAMLError, ExternalGeneratorError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
