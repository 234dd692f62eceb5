"""
The closure generator.

At every step it outputs the smallest unseen element of the noisy closure of
what it has seen, falling back to the smallest unseen universe element when
that is exhausted. Once more than NC_i strings have arrived, every output is
a fresh member of any target consistent with the history.
"""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Sequence

from limitgen.pkg.closure import ClosureResult, noisy_closure
from limitgen.pkg.universe import Collection, Element, smallest_member_outside, smallest_unseen

logger = logging.getLogger(__name__)


@dataclass
class GeneratorState:
    """The history x_0..x_t observed by a generator over one collection."""

    collection: Collection
    noise: int
    history: List[Element] = field(default_factory=list)

    def __post_init__(self):
        if self.noise < 0:
            raise ValueError(f"noise level must be nonnegative: {self.noise}")
        self.history = list(self.history)

    @property
    def sample(self) -> FrozenSet[Element]:
        """S_t, the set of history elements."""
        return frozenset(self.history)

    @property
    def t(self) -> int:
        return len(self.history) - 1

    def observe(self, element: Element) -> None:
        self.history.append(element)


def closure_generator_step(state: GeneratorState) -> Element:
    """z_t for the current history."""
    if not state.history:
        raise ValueError("the closure generator needs at least one observed string")
    seen = state.sample
    closure = noisy_closure(state.collection, seen, state.noise)
    if not closure.is_empty_consistent:
        pick = smallest_member_outside(closure.value, seen)
        if pick is not None:
            return pick
    return smallest_unseen(seen)


class ClosureGenerator:
    """Closure generator over a fixed collection and noise level."""

    def __init__(self, collection: Collection, noise: int, name: str = "closure"):
        if noise < 0:
            raise ValueError(f"noise level must be nonnegative: {noise}")
        self.collection = collection
        self.noise = noise
        self.name = name

    def reset(self) -> None:
        pass

    def query(self, history: Sequence[Element]) -> Element:
        return closure_generator_step(GeneratorState(self.collection, self.noise, list(history)))

    def closure_for(self, history: Sequence[Element]) -> ClosureResult:
        return noisy_closure(self.collection, frozenset(history), self.noise)

    def __repr__(self) -> str:
        return f"ClosureGenerator({self.collection.name!r}, noise={self.noise})"
