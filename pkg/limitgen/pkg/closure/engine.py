"""
Consistent languages and noisy closures.

For a sample S and noise level i, the consistent languages are those that
miss at most i elements of S, and the noisy closure is their intersection
(defined as the empty set when nothing is consistent).
"""

import itertools
import logging
from dataclasses import dataclass
from typing import AbstractSet, Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

from limitgen.pkg.errors import ClosureError
from limitgen.pkg.universe import (
    Collection,
    ColumnFamily,
    Element,
    ExplicitCollection,
    NamedLanguage,
    SetDescriptor,
    SymbolicLanguage,
    canonical_descriptor,
    intersect_all,
    member,
)

logger = logging.getLogger(__name__)

SampleSet = FrozenSet[Element]


def _check_noise(noise: int) -> None:
    if noise < 0:
        raise ValueError(f"noise level must be nonnegative: {noise}")


def column_hits(sample: Iterable[Element]) -> Dict[int, int]:
    """Number of sample elements in each column."""
    hits: Dict[int, int] = {}
    for element in sample:
        hits[element.column] = hits.get(element.column, 0) + 1
    return hits


@dataclass(frozen=True)
class ColumnConsistency:
    """
    Consistent members of the column family for one sample.

    A union of columns x is consistent iff the sample elements outside x
    number at most ``noise``; only the per-column hit counts matter.
    """

    hits: Tuple[Tuple[int, int], ...]
    noise: int

    @classmethod
    def for_sample(cls, sample: Iterable[Element], noise: int) -> "ColumnConsistency":
        return cls(tuple(sorted(column_hits(sample).items())), noise)

    @property
    def touched(self) -> FrozenSet[int]:
        return frozenset(c for c, _ in self.hits)

    def misses(self, columns: AbstractSet[int]) -> int:
        return sum(count for c, count in self.hits if c not in columns)

    def admits(self, columns: AbstractSet[int]) -> bool:
        return bool(columns) and self.misses(columns) <= self.noise

    def describe(self) -> str:
        counts = ",".join(f"{c}:{n}" for c, n in self.hits)
        return f"column-unions missing at most {self.noise} of hits {{{counts}}}"


ConsistentSet = Union[List[NamedLanguage], ColumnConsistency]


@dataclass(frozen=True)
class ClosureResult:
    """Either the empty-consistent verdict (``value is None``) or the closure."""

    value: Optional[SetDescriptor] = None

    @classmethod
    def empty_consistent(cls) -> "ClosureResult":
        return cls(None)

    @property
    def is_empty_consistent(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is None or self.value.is_finite

    def members(self) -> List[Element]:
        """Members of a finite closure in canonical order."""
        if self.value is None:
            return []
        return self.value.finite_members()

    def __contains__(self, element: Element) -> bool:
        return self.value is not None and member(self.value, element)

    @property
    def status(self) -> str:
        if self.value is None:
            return "empty"
        if self.value.is_finite:
            return f"finite:{len(self.value.adds)}"
        return "infinite"

    def describe(self) -> str:
        if self.value is None:
            return "empty-consistent"
        return self.value.describe()


def misses(language: SetDescriptor, sample: Iterable[Element]) -> int:
    """|S \\ L|."""
    return sum(1 for element in sample if not member(language, element))


def consistent_languages(collection: ExplicitCollection, sample: Iterable[Element], noise: int) -> List[NamedLanguage]:
    _check_noise(noise)
    sample = list(sample)
    return [entry for entry in collection.members if misses(entry.language, sample) <= noise]


def consistent_set(collection: Collection, sample: Iterable[Element], noise: int) -> ConsistentSet:
    """C(S, i): a language list for explicit collections, a predicate for the column family."""
    _check_noise(noise)
    if isinstance(collection, ColumnFamily):
        return ColumnConsistency.for_sample(sample, noise)
    return consistent_languages(collection, sample, noise)


def column_closure(sample: Iterable[Element], noise: int) -> ClosureResult:
    """
    Noisy closure in the column family.

    A column belongs to every consistent union exactly when dropping it
    alone would miss more than ``noise`` sample elements.
    """
    _check_noise(noise)
    hits = column_hits(sample)
    heavy = [c for c, count in hits.items() if count >= noise + 1]
    return ClosureResult(canonical_descriptor(heavy))


def noisy_closure(collection: Collection, sample: Iterable[Element], noise: int) -> ClosureResult:
    """The intersection of all consistent languages, or EmptyConsistent."""
    _check_noise(noise)
    if isinstance(collection, ColumnFamily):
        return column_closure(sample, noise)
    consistent = consistent_languages(collection, sample, noise)
    if not consistent:
        return ClosureResult.empty_consistent()
    return ClosureResult(intersect_all(entry.language for entry in consistent))


def saturate(collection: Collection, sample: Iterable[Element], noise: int) -> SampleSet:
    """S' = S | closure(S); the consistent family is unchanged."""
    sample = frozenset(sample)
    closure = noisy_closure(collection, sample, noise)
    if not closure.is_finite:
        raise ClosureError("saturation requires finite closure")
    return sample | frozenset(closure.members())


def admits_language(consistent: ConsistentSet, language: SymbolicLanguage) -> bool:
    """Whether ``language`` is in the consistent set."""
    if isinstance(consistent, ColumnConsistency):
        return not language.adds and not language.removes and consistent.admits(language.blocks)
    return any(entry.language == language for entry in consistent)


def consistent_subfamily(
    collection: Collection,
    sample: Iterable[Element],
    noise: int,
    other: Iterable[Element],
    other_noise: int,
) -> bool:
    """Whether C(sample, noise) is contained in C(other, other_noise)."""
    sample = frozenset(sample)
    other = frozenset(other)
    if isinstance(collection, ExplicitCollection):
        inner = {entry.name for entry in consistent_languages(collection, sample, noise)}
        outer = {entry.name for entry in consistent_languages(collection, other, other_noise)}
        return inner <= outer

    first = ColumnConsistency.for_sample(sample, noise)
    second = ColumnConsistency.for_sample(other, other_noise)
    touched = sorted(first.touched | second.touched)
    # untouched columns never change either count, so subsets of the
    # touched columns (padded with a fresh column) cover every union
    for size in range(len(touched) + 1):
        for chosen in itertools.combinations(touched, size):
            columns = frozenset(chosen)
            if first.misses(columns) <= noise and second.misses(columns) > other_noise:
                return False
    return True
