"""
Play subcommand - run one game and write its trace.
"""

import logging
import sys
from typing import Optional, Tuple

from limitgen.cmd.limitgen.subcommands import EXIT_OK, EXIT_PROPERTY_FAILURE
from limitgen.cmd.limitgen.subcommands.common import build_config
from limitgen.config import HarnessConfig
from limitgen.pkg.adversary import Schedule, build_enumeration
from limitgen.pkg.config import load_chain
from limitgen.pkg.core.protocols import GeneratorProtocol
from limitgen.pkg.errors import SettleTimeError
from limitgen.pkg.game import play, settle_time, write_trace
from limitgen.pkg.generators import (
    EXTERNAL_PREFIX,
    ClosureGenerator,
    ExternalGenerator,
    FirstColumnGenerator,
    build_chain,
    nonuniform_noise_dependent,
    uniform_noise_dependent,
)
from limitgen.pkg.universe import (
    Collection,
    ColumnFamily,
    SymbolicLanguage,
    columns_language,
    parse_elements,
    read_collection,
)

logger = logging.getLogger(__name__)


def resolve_target(collection: Collection, name: str) -> SymbolicLanguage:
    """A language name, or a comma-separated column list for the column family."""
    if isinstance(collection, ColumnFamily):
        try:
            columns = [int(c) for c in name.split(",") if c.strip()]
        except ValueError:
            raise ValueError(f"column family targets are column lists like 0,2; got {name!r}")
        return columns_language(columns)
    language = collection.get(name)
    if language is None:
        raise ValueError(f"unknown target {name!r}; languages: {' '.join(collection.names)}")
    return language


def _uniform(collection: Collection, noise: int, config: HarnessConfig) -> Tuple[GeneratorProtocol, Optional[int]]:
    try:
        return uniform_noise_dependent(collection, noise, config.max_size, config.pool_depth_for(noise))
    except SettleTimeError as e:
        logger.warning(f"no promised settle time for {collection.name}: {e}")
        return ClosureGenerator(collection, noise), None


def cmd_play(args) -> int:
    """Play one game; prints the trace (or writes it) and a summary line."""
    config = build_config(max_size=args.max_size, pool_depth=args.pool_depth, random_spread=args.spread)
    steps = args.steps if args.steps is not None else config.default_steps
    kind = args.generator

    chain = None
    if kind == "chain":
        if not args.chain:
            raise ValueError("the chain generator needs --chain FILE")
        chain_file = load_chain(args.chain)
        if args.noise is not None and args.noise != chain_file.noise:
            raise ValueError(f"--noise {args.noise} differs from the chain's noise level {chain_file.noise}")
        chain = build_chain(chain_file.levels, chain_file.noise, chain_file.name, config.max_size, config.pool_depth)
        collection = read_collection(args.collection) if args.collection else chain.levels[-1]
        noise = chain.noise
    else:
        if not args.collection:
            raise ValueError("--collection is required")
        if args.noise is None:
            raise ValueError("--noise is required")
        collection = read_collection(args.collection)
        noise = args.noise
    if noise < 0:
        raise ValueError(f"noise level must be nonnegative: {noise}")

    target = resolve_target(collection, args.target)
    if kind == "closure":
        generator, promised = _uniform(collection, noise, config)
    elif kind == "chain":
        level = chain.level_of(target)
        if level is None:
            raise ValueError(f"target {args.target!r} is in no chain level")
        generator, promised = nonuniform_noise_dependent(chain, noise, level, target)
    elif kind == "first-column":
        generator = FirstColumnGenerator()
        promised = 0 if isinstance(collection, ColumnFamily) else None
    elif kind.startswith(EXTERNAL_PREFIX):
        generator = ExternalGenerator(kind[len(EXTERNAL_PREFIX):], fresh=False, timeout=config.external_timeout, noise=noise)
        promised = None
    else:
        raise ValueError(f"unknown generator kind {kind!r}; use closure, chain, first-column or external:CMD")

    noise_strings = parse_elements(args.noise_strings or "")
    schedule = Schedule.parse(args.schedule, spread=config.random_spread)
    enumeration = build_enumeration(target, noise_strings, schedule, args.seed)
    try:
        trace = play(collection, generator, enumeration, steps, args.target, promised)
    finally:
        if isinstance(generator, ExternalGenerator):
            generator.close()

    if args.trace:
        write_trace(trace, args.trace)
    else:
        sys.stdout.write(trace.to_text())

    observed = settle_time(trace)
    observed_text = "never-within-horizon" if observed is None else str(observed)
    promised_text = "none" if promised is None else str(promised)
    print(f"settle_time: {observed_text} promised_tstar: {promised_text}")

    if promised is not None and not trace.header.mismatch:
        if observed is None or observed > promised + 1:
            logger.error(f"observed settle time {observed_text} exceeds promised {promised} + 1")
            return EXIT_PROPERTY_FAILURE
    return EXIT_OK
