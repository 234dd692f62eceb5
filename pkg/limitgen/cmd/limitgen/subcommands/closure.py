"""
Closure subcommand - print the noisy closure of a set.
"""

import logging

from limitgen.cmd.limitgen.subcommands import EXIT_OK
from limitgen.pkg.closure import ColumnConsistency, consistent_set, noisy_closure
from limitgen.pkg.closure.oracles import windowed
from limitgen.pkg.universe import format_elements, parse_elements, read_collection

logger = logging.getLogger(__name__)


def cmd_closure(args) -> int:
    """Print the closure verdict and the consistent languages."""
    collection = read_collection(args.collection)
    sample = frozenset(parse_elements(args.set or ""))
    if args.noise < 0:
        raise ValueError(f"noise level must be nonnegative: {args.noise}")

    closure = noisy_closure(collection, sample, args.noise)
    consistent = consistent_set(collection, sample, args.noise)
    logger.debug(f"closure of {len(sample)} elements at level {args.noise}: {closure.status}")

    print(f"closure: {closure.describe()}")
    if isinstance(consistent, ColumnConsistency):
        print(f"consistent: {consistent.describe()}")
    else:
        print("consistent: " + (" ".join(entry.name for entry in consistent) or "(none)"))
    if args.window is not None:
        members = windowed(closure, args.window)
        shown = "(none)" if not members else format_elements(members)
        print(f"window {args.window}: {shown}")
    return EXIT_OK
