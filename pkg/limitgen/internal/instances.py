"""
Seeded random instances for property suites and tests.
"""

import logging
import random
from dataclasses import dataclass
from typing import FrozenSet, List, Optional

from limitgen.config import HarnessConfig
from limitgen.pkg.universe import Element, ExplicitCollection, NamedLanguage, SymbolicLanguage, canonicalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Instance:
    """A collection, a sample and a noise level."""

    collection: ExplicitCollection
    sample: FrozenSet[Element]
    noise: int


class InstanceGenerator:
    """
    Draws small explicit collections and samples from a seeded generator.

    Columns range over 0..max_column-1 and indices over 0..max_index-1, so
    exceptions collide with blocks often enough to exercise canonical form.
    """

    def __init__(
        self,
        seed: int,
        config: Optional[HarnessConfig] = None,
        max_index: int = 4,
    ):
        self.config = config or HarnessConfig()
        self.rng = random.Random(seed)
        self.max_index = max_index

    def element(self) -> Element:
        return Element(self.rng.randrange(self.config.max_column), self.rng.randrange(self.max_index))

    def language(self, max_blocks: Optional[int] = None, max_exceptions: Optional[int] = None) -> SymbolicLanguage:
        max_blocks = max_blocks or self.config.max_blocks
        max_exceptions = self.config.max_exceptions if max_exceptions is None else max_exceptions
        blocks = self.rng.sample(range(self.config.max_column), self.rng.randint(1, max_blocks))
        exceptions = [self.element() for _ in range(self.rng.randint(0, max_exceptions))]
        adds = [e for e in exceptions if e.column not in blocks]
        removes = [e for e in exceptions if e.column in blocks]
        return canonicalize(blocks, adds, removes)

    def collection(
        self,
        name: str = "random",
        max_languages: Optional[int] = None,
        max_blocks: Optional[int] = None,
        max_exceptions: Optional[int] = None,
    ) -> ExplicitCollection:
        """Distinct languages; duplicates drawn by chance are dropped."""
        max_languages = max_languages or self.config.max_languages
        wanted = self.rng.randint(1, max_languages)
        members: List[NamedLanguage] = []
        seen = set()
        for _ in range(wanted):
            language = self.language(max_blocks, max_exceptions)
            if language in seen:
                continue
            seen.add(language)
            members.append(NamedLanguage(f"L{len(members) + 1}", language))
        return ExplicitCollection(name, tuple(members))

    def sample(self, max_size: int = 5) -> FrozenSet[Element]:
        return frozenset(self.element() for _ in range(self.rng.randint(0, max_size)))

    def noise_level(self, maximum: int = 2) -> int:
        return self.rng.randint(0, maximum)

    def instance(self, max_sample: int = 5, max_noise: int = 2) -> Instance:
        return Instance(self.collection(), self.sample(max_sample), self.noise_level(max_noise))

    def column_sample(self, m: int, max_size: int = 4) -> FrozenSet[Element]:
        """Sample confined to columns 0..m-1."""
        size = self.rng.randint(0, max_size)
        return frozenset(Element(self.rng.randrange(m), self.rng.randrange(self.max_index)) for _ in range(size))
