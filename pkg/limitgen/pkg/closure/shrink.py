"""
Witness shrinking between noise levels.

Given a qualifying set S of size k*k at level i, produce a qualifying set of
size at most k at level i - 1. S is cut into k chunks; a chunk whose own
closure at level i - 1 is finite is returned as is, otherwise one element is
drawn from each chunk's (infinite) closure.
"""

import logging
from dataclasses import dataclass
from math import isqrt
from typing import FrozenSet, List

from limitgen.pkg.closure.engine import ClosureResult, consistent_subfamily, noisy_closure
from limitgen.pkg.errors import ClosureError
from limitgen.pkg.universe import Collection, Element, smallest_member_outside
from limitgen.pkg.universe.element import pair_key

logger = logging.getLogger(__name__)

BRANCH_DIRECT = "direct"
BRANCH_CONSTRUCTED = "constructed"


@dataclass(frozen=True)
class ShrinkResult:
    branch: str
    witness: FrozenSet[Element]


def partition_sample(sample: FrozenSet[Element], k: int) -> List[List[Element]]:
    """Split ``sample`` into k chunks of k elements, in (column, index) order."""
    ordered = sorted(sample, key=pair_key)
    return [ordered[j * k:(j + 1) * k] for j in range(k)]


def _qualifies(closure: ClosureResult) -> bool:
    return not closure.is_empty_consistent and closure.is_finite


def shrink_witness(collection: Collection, noise: int, sample) -> ShrinkResult:
    """
    Shrink a level-``noise`` witness of size k*k to a level ``noise - 1``
    witness of size at most k.

    Raises:
        ClosureError: if |S| is not a positive perfect square, the noise
            level is below 2, or S does not qualify at level ``noise``.
    """
    sample = frozenset(sample)
    if noise < 2:
        raise ClosureError(f"shrinking needs noise level >= 2, got {noise}")
    k = isqrt(len(sample))
    if k == 0 or k * k != len(sample):
        raise ClosureError(f"sample size {len(sample)} is not a positive perfect square")
    closure = noisy_closure(collection, sample, noise)
    if not _qualifies(closure):
        raise ClosureError("sample must have a nonempty consistent family and a finite closure")

    chunks = partition_sample(sample, k)
    chunk_closures = [noisy_closure(collection, chunk, noise - 1) for chunk in chunks]
    for chunk, chunk_closure in zip(chunks, chunk_closures):
        if _qualifies(chunk_closure):
            logger.debug(f"shrink: chunk {chunk} has finite closure {chunk_closure.describe()}")
            return ShrinkResult(BRANCH_DIRECT, frozenset(chunk))

    chosen: List[Element] = []
    for chunk, chunk_closure in zip(chunks, chunk_closures):
        taken = set(chosen)
        if chunk_closure.is_empty_consistent:
            # every language consistent with S already misses this chunk
            # heavily, so any unused element of the chunk will do
            pick = min(e for e in chunk if e not in taken)
        else:
            pick = smallest_member_outside(chunk_closure.value, taken)
        chosen.append(pick)

    witness = frozenset(chosen)
    if not consistent_subfamily(collection, sample, noise, witness, 1):
        raise ClosureError("constructed witness lost a consistent language")
    if not _qualifies(noisy_closure(collection, witness, noise - 1)):
        raise ClosureError("constructed witness has an infinite closure")
    logger.debug(f"shrink: constructed {sorted(witness)} from {k} chunks")
    return ShrinkResult(BRANCH_CONSTRUCTED, witness)
