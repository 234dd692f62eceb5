"""
Chains of collections and the chain generator.

A chain C_0 <= C_1 <= ... is stored as a finite prefix together with the
settle time t*(C_j) of the closure generator on each level. At step t the
chain generator runs the closure generator on C_{j_t}, where j_t is the
largest j <= t whose settle time has passed (0 if none has).
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from limitgen.pkg.closure import ClosureResult, nc_dimension, noisy_closure
from limitgen.pkg.errors import SettleTimeError
from limitgen.pkg.generators.closure_generator import GeneratorState, closure_generator_step
from limitgen.pkg.universe import Element, ExplicitCollection, NamedLanguage, SymbolicLanguage

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Chain:
    """A finite prefix of an increasing chain of explicit collections."""

    name: str
    noise: int
    levels: Tuple[ExplicitCollection, ...]
    settle_times: Tuple[int, ...]

    def __post_init__(self):
        if not self.levels:
            raise ValueError("a chain needs at least one level")
        if len(self.levels) != len(self.settle_times):
            raise ValueError("one settle time per chain level is required")
        if any(t < 0 for t in self.settle_times):
            raise ValueError("settle times must be nonnegative")

    def __len__(self) -> int:
        return len(self.levels)

    def level_of(self, language: SymbolicLanguage) -> Optional[int]:
        """Smallest level containing ``language``."""
        for j, level in enumerate(self.levels):
            if level.contains_language(language):
                return j
        return None


def build_chain(
    levels: Sequence[ExplicitCollection],
    noise: int,
    name: str = "chain",
    max_size: int = 12,
    pool_depth: Optional[int] = None,
) -> Chain:
    """
    Check containment between consecutive levels and compute settle times.

    Raises:
        ValueError: if a level is not contained in the next one.
        SettleTimeError: if some level's dimension is not certified exactly.
    """
    levels = tuple(levels)
    for j in range(len(levels) - 1):
        if not levels[j].issubcollection(levels[j + 1]):
            raise ValueError(f"chain level {j} ({levels[j].name}) is not contained in level {j + 1}")
    settle_times = []
    for j, level in enumerate(levels):
        report = nc_dimension(level, noise, max_size, pool_depth)
        try:
            settle_times.append(report.settle_time)
        except SettleTimeError as e:
            raise SettleTimeError(f"chain level {j} ({level.name}): {e}")
    logger.debug(f"Chain {name!r} settle times: {settle_times}")
    return Chain(name, noise, levels, tuple(settle_times))


def chain_index(settle_times: Sequence[int], t: int) -> Tuple[int, bool]:
    """
    j_t = max({0} | {j <= t : t*(C_j) <= t}) over the stored prefix.

    The flag is set when indices up to t run past the stored prefix.
    """
    if not settle_times:
        raise ValueError("empty chain")
    if t < 0:
        raise ValueError(f"step must be nonnegative: {t}")
    j_t = 0
    for j in range(min(t, len(settle_times) - 1) + 1):
        if settle_times[j] <= t:
            j_t = j
    return j_t, t >= len(settle_times)


def chain_generator_step(chain: Chain, noise: int, state: GeneratorState) -> Element:
    """Closure-generator output on C_{j_t}; ``state.collection`` is ignored."""
    j_t, _ = chain_index(chain.settle_times, state.t)
    return closure_generator_step(GeneratorState(chain.levels[j_t], noise, state.history))


class ChainGenerator:
    """The chain generator at a fixed noise level."""

    def __init__(self, chain: Chain, noise: Optional[int] = None, name: str = "chain"):
        self.chain = chain
        self.noise = chain.noise if noise is None else noise
        self.name = name
        self._warned = False

    def reset(self) -> None:
        pass

    def position(self, t: int) -> Tuple[int, bool]:
        # truncation is recorded on every trace step; log it once
        j_t, truncated = chain_index(self.chain.settle_times, t)
        if truncated and not self._warned:
            logger.debug(f"chain {self.chain.name!r} truncated at step {t}: only {len(self.chain)} levels stored")
            self._warned = True
        return j_t, truncated

    def query(self, history: Sequence[Element]) -> Element:
        state = GeneratorState(self.chain.levels[0], self.noise, list(history))
        return chain_generator_step(self.chain, self.noise, state)

    def closure_for(self, history: Sequence[Element]) -> ClosureResult:
        j_t, _ = chain_index(self.chain.settle_times, len(history) - 1)
        return noisy_closure(self.chain.levels[j_t], frozenset(history), self.noise)


def chain_from_settle_times(
    languages: Sequence[NamedLanguage],
    settle_times: Sequence[int],
    noise: int,
    name: str = "chain",
    max_size: int = 12,
    pool_depth: Optional[int] = None,
) -> Chain:
    """
    Chain with C_j = {L : t*(L) <= j} for known per-language settle times.

    Levels below the smallest settle time would be empty and repeat the
    first nonempty level instead.
    """
    if len(languages) != len(settle_times) or not languages:
        raise ValueError("one settle time per language is required")
    if any(t < 0 for t in settle_times):
        raise ValueError("settle times must be nonnegative")
    first = min(settle_times)
    levels: List[ExplicitCollection] = []
    for j in range(max(settle_times) + 1):
        bound = max(j, first)
        members = tuple(entry for entry, t in zip(languages, settle_times) if t <= bound)
        levels.append(ExplicitCollection(f"{name}-{j}", members))
    return build_chain(levels, noise, name, max_size, pool_depth)
