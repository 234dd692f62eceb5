"""
Noisy enumerations.

An enumeration of a target K with noise list N emits every member of K in
canonical order and inserts the elements of N (all outside K) at positions
fixed by a schedule:

- ``prefix``: all noise first.
- ``interleave:p1,p2,...``: noise element j at emission position p_j.
- ``random[:spread]``: distinct positions drawn from ``range(spread + |N|)``
  by a seeded generator.
"""

import logging
import random
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from limitgen.pkg.errors import EnumerationError
from limitgen.pkg.universe import Element, SetDescriptor, iter_members, member

logger = logging.getLogger(__name__)

SCHEDULE_PREFIX = "prefix"
SCHEDULE_INTERLEAVE = "interleave"
SCHEDULE_RANDOM = "random"
DEFAULT_SPREAD = 20


@dataclass(frozen=True)
class Schedule:
    """Placement rule for noise elements."""

    kind: str = SCHEDULE_PREFIX
    positions: Tuple[int, ...] = ()
    spread: int = DEFAULT_SPREAD

    def __post_init__(self):
        if self.kind not in (SCHEDULE_PREFIX, SCHEDULE_INTERLEAVE, SCHEDULE_RANDOM):
            raise EnumerationError(f"unknown schedule kind: {self.kind!r}")
        if self.kind == SCHEDULE_INTERLEAVE:
            if any(p < 0 for p in self.positions):
                raise EnumerationError("interleave positions must be nonnegative")
            if len(set(self.positions)) != len(self.positions):
                raise EnumerationError("interleave positions must be distinct")
        if self.spread < 0:
            raise EnumerationError("random spread must be nonnegative")

    @classmethod
    def parse(cls, text: str, spread: int = DEFAULT_SPREAD) -> "Schedule":
        """Parse ``prefix``, ``interleave:3,5`` or ``random[:spread]``."""
        kind, _, rest = text.strip().partition(":")
        try:
            if kind == SCHEDULE_INTERLEAVE:
                positions = tuple(int(p) for p in rest.split(",") if p.strip())
                return cls(kind, positions, spread)
            if kind == SCHEDULE_RANDOM:
                return cls(kind, (), int(rest) if rest else spread)
        except ValueError:
            raise EnumerationError(f"malformed schedule: {text!r}")
        if kind == SCHEDULE_PREFIX and not rest:
            return cls(kind, (), spread)
        raise EnumerationError(f"malformed schedule: {text!r}")

    def describe(self) -> str:
        if self.kind == SCHEDULE_INTERLEAVE:
            return f"{self.kind}:" + ",".join(str(p) for p in self.positions)
        if self.kind == SCHEDULE_RANDOM:
            return f"{self.kind}:{self.spread}"
        return self.kind

    def placement(self, count: int, seed: int) -> Tuple[int, ...]:
        """Emission position of each of ``count`` noise elements."""
        if self.kind == SCHEDULE_PREFIX:
            return tuple(range(count))
        if self.kind == SCHEDULE_INTERLEAVE:
            if len(self.positions) != count:
                raise EnumerationError(f"interleave needs {count} positions, got {len(self.positions)}")
            return self.positions
        rng = random.Random(seed)
        return tuple(sorted(rng.sample(range(self.spread + count), count)))


class NoisyEnumeration:
    """A repetition-free, infinite stream over an infinite target plus its noise."""

    def __init__(self, target: SetDescriptor, noise: Sequence[Element], schedule: Schedule, seed: int = 0):
        self.target = target
        self.noise: Tuple[Element, ...] = tuple(noise)
        self.schedule = schedule
        self.seed = seed
        self._placement: Dict[int, Element] = dict(zip(schedule.placement(len(self.noise), seed), self.noise))
        self._members: Iterator[Element] = iter_members(target)
        self.emitted = 0

    def __iter__(self) -> "NoisyEnumeration":
        return self

    def __next__(self) -> Element:
        position = self.emitted
        self.emitted += 1
        if position in self._placement:
            return self._placement[position]
        return next(self._members)

    def take(self, n: int) -> List[Element]:
        return [next(self) for _ in range(n)]


def build_enumeration(
    target: SetDescriptor,
    noise: Sequence[Element] = (),
    schedule: Optional[Schedule] = None,
    seed: int = 0,
) -> NoisyEnumeration:
    """
    Validate the noise list and build the enumeration.

    Raises:
        EnumerationError: if a noise element lies in the target or repeats.
    """
    if target.is_finite:
        raise EnumerationError("enumeration targets must be infinite languages")
    noise = list(noise)
    if len(set(noise)) != len(noise):
        raise EnumerationError("duplicate noise element")
    for element in noise:
        if member(target, element):
            raise EnumerationError(f"noise must lie outside the target: {element}")
    schedule = schedule or Schedule()
    logger.debug(f"Enumeration with {len(noise)} noise elements, schedule {schedule.describe()}, seed {seed}")
    return NoisyEnumeration(target, noise, schedule, seed)
