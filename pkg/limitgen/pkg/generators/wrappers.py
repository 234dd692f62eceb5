"""
Noise-dependent generators with promised settle times.

The uniform wrapper certifies t* = NC_i(C) for the closure generator; the
non-uniform wrapper certifies t* = max(j, t*(C_j)) for a target in level j
of a chain.
"""

import logging
from typing import Optional, Tuple

from limitgen.pkg.closure import dimension_for
from limitgen.pkg.errors import SettleTimeError
from limitgen.pkg.generators.chain import Chain, ChainGenerator
from limitgen.pkg.generators.closure_generator import ClosureGenerator
from limitgen.pkg.universe import Collection, SymbolicLanguage

logger = logging.getLogger(__name__)


def uniform_noise_dependent(
    collection: Collection,
    n_star: int,
    max_size: int = 12,
    pool_depth: Optional[int] = None,
) -> Tuple[ClosureGenerator, int]:
    """Closure generator at level ``n_star`` and its promised settle time."""
    report = dimension_for(collection, n_star, max_size, pool_depth)
    promised = report.settle_time
    logger.debug(f"uniform generator for {collection.name!r} at level {n_star}: t* = {promised} ({report.describe()})")
    return ClosureGenerator(collection, n_star), promised


def nonuniform_noise_dependent(
    chain: Chain,
    n_star: int,
    k_index: int,
    target: Optional[SymbolicLanguage] = None,
) -> Tuple[ChainGenerator, int]:
    """
    Chain generator at level ``n_star``; the target lives in chain level
    ``k_index``.

    Raises:
        ValueError: if ``k_index`` is outside the chain or the target is not
            in that level.
        SettleTimeError: if the chain's settle times belong to another
            noise level.
    """
    if not 0 <= k_index < len(chain):
        raise ValueError(f"chain level {k_index} out of range (chain has {len(chain)} levels)")
    if chain.noise != n_star:
        raise SettleTimeError(f"chain settle times were computed at noise {chain.noise}, not {n_star}")
    if target is not None and not chain.levels[k_index].contains_language(target):
        raise ValueError(f"target is not in chain level {k_index} ({chain.levels[k_index].name})")
    promised = max(k_index, chain.settle_times[k_index])
    return ChainGenerator(chain, n_star), promised
