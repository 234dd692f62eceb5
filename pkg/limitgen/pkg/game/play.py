"""
The generation game.

Each round the enumeration reveals x_t, the generator answers z_t, and the
answer is judged correct iff it is an unseen member of the target.
"""

import logging
from typing import List, Optional

from limitgen.pkg.adversary import NoisyEnumeration
from limitgen.pkg.closure import noisy_closure
from limitgen.pkg.core.protocols import ChainPositioned, ClosureReporting, GeneratorProtocol
from limitgen.pkg.game.trace import GameTrace, StepRecord, TraceHeader
from limitgen.pkg.universe import Collection, Element, member

logger = logging.getLogger(__name__)


def play(
    collection: Collection,
    generator: GeneratorProtocol,
    enumeration: NoisyEnumeration,
    steps: int,
    target_name: str = "K",
    promised_tstar: Optional[int] = None,
) -> GameTrace:
    """Run ``steps`` rounds and record them."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1: {steps}")
    target = enumeration.target
    closure_noise = generator.noise if generator.noise is not None else len(enumeration.noise)
    mismatch = generator.noise is not None and len(enumeration.noise) > generator.noise
    if mismatch:
        logger.warning(
            f"enumeration carries {len(enumeration.noise)} noise strings, generator level is {generator.noise}"
        )

    header = TraceHeader(
        collection=collection.name,
        target=target_name,
        generator=generator.name,
        noise=generator.noise,
        enumeration_noise=enumeration.noise,
        schedule=enumeration.schedule.describe(),
        seed=enumeration.seed,
        promised_tstar=promised_tstar,
        mismatch=mismatch,
    )
    trace = GameTrace(header)
    history: List[Element] = []
    generator.reset()
    for t in range(steps):
        x = next(enumeration)
        history.append(x)
        z = generator.query(history)
        seen = frozenset(history)
        correct = member(target, z) and z not in seen
        if isinstance(generator, ClosureReporting):
            closure = generator.closure_for(history)
        else:
            closure = noisy_closure(collection, seen, closure_noise)
        chain_index, truncated = None, False
        if isinstance(generator, ChainPositioned):
            chain_index, truncated = generator.position(t)
        trace.steps.append(StepRecord(t, x, z, correct, closure.status, chain_index, truncated))
    logger.debug(f"Played {steps} steps of {generator.name} against {target_name}")
    return trace
