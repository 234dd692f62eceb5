"""
Refute subcommand - run the column-family refutation against a generator.
"""

import logging

from limitgen.cmd.limitgen.subcommands import EXIT_INCONCLUSIVE, EXIT_OK, EXIT_PROPERTY_FAILURE
from limitgen.cmd.limitgen.subcommands.common import build_config
from limitgen.internal.synthetic import FirstColumnRepeatGenerator, FreshColumnGenerator
from limitgen.pkg.adversary import CaseThresholds, run_refutation
from limitgen.pkg.core.protocols import GeneratorProtocol
from limitgen.pkg.generators import EXTERNAL_PREFIX, ClosureGenerator, ExternalGenerator
from limitgen.pkg.universe import ColumnFamily

logger = logging.getLogger(__name__)


def build_refutation_target(kind: str, noise: int, timeout: float) -> GeneratorProtocol:
    """Generators the refutation can be pointed at."""
    if kind == "closure":
        return ClosureGenerator(ColumnFamily(), noise)
    if kind == "fresh-column":
        return FreshColumnGenerator()
    if kind == "first-column-repeat":
        return FirstColumnRepeatGenerator()
    if kind.startswith(EXTERNAL_PREFIX):
        return ExternalGenerator(kind[len(EXTERNAL_PREFIX):], fresh=True, timeout=timeout)
    raise ValueError(f"unknown generator kind {kind!r}; use closure, fresh-column, first-column-repeat or external:CMD")


def cmd_refute(args) -> int:
    config = build_config(horizon=args.horizon, algorithm1_iterations=args.iterations)
    if args.noise < 0:
        raise ValueError(f"noise level must be nonnegative: {args.noise}")
    generator = build_refutation_target(args.generator, args.noise, config.external_timeout)
    thresholds = CaseThresholds.for_horizon(
        config.horizon,
        config.inside_threshold,
        config.concentration_threshold,
        config.scattered_threshold,
    )

    # the refutation is deterministic; the seed is echoed for the record
    print(f"horizon: {config.horizon} iterations: {config.algorithm1_iterations} seed: {args.seed}")
    try:
        outcome = run_refutation(generator, config.horizon, config.algorithm1_iterations, thresholds)
    finally:
        if isinstance(generator, ExternalGenerator):
            generator.close()

    for line in outcome.describe():
        print(line)
    if not outcome.conclusive:
        return EXIT_INCONCLUSIVE
    if not outcome.errors or set(outcome.errors) != set(outcome.accepted):
        logger.error(f"refutation of {generator.name} did not verify: errors {list(outcome.errors)}")
        return EXIT_PROPERTY_FAILURE
    return EXIT_OK
