"""
Symbolic sets over the universe.

A set is described by a finite set of full columns ("blocks"), finite
additions outside those columns and finite removals inside them:

    denoted set = (union of B_c for c in blocks  |  adds) - removes

with B_c = {(c, k) : k in N}. Canonical form makes equality structural:
every add lies outside the blocks, every removal lies inside them, and no
element is both added and removed.
"""

import heapq
import itertools
import logging
from dataclasses import dataclass, field
from typing import AbstractSet, FrozenSet, Iterable, Iterator, List, Optional

from limitgen.pkg.errors import LanguageError
from limitgen.pkg.universe.element import Element, format_elements

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SetDescriptor:
    """A canonical symbolic set; finite exactly when ``blocks`` is empty."""

    blocks: FrozenSet[int] = field(default_factory=frozenset)
    adds: FrozenSet[Element] = field(default_factory=frozenset)
    removes: FrozenSet[Element] = field(default_factory=frozenset)

    @property
    def is_finite(self) -> bool:
        return not self.blocks

    def __contains__(self, element: Element) -> bool:
        return member(self, element)

    def finite_members(self) -> List[Element]:
        """Members of a finite descriptor in canonical order."""
        if not self.is_finite:
            raise LanguageError("an infinite set has no finite member list")
        return sorted(self.adds)

    def describe(self) -> str:
        """Human-readable form used by the CLI."""
        if self.is_finite:
            return f"finite:{len(self.adds)} {{{format_elements(self.adds, ',')}}}"
        parts = ["infinite", "blocks{" + ",".join(str(c) for c in sorted(self.blocks)) + "}"]
        if self.adds:
            parts.append("add{" + format_elements(self.adds, ",") + "}")
        if self.removes:
            parts.append("remove{" + format_elements(self.removes, ",") + "}")
        return " ".join(parts)


@dataclass(frozen=True)
class SymbolicLanguage(SetDescriptor):
    """An infinite language: a canonical descriptor with at least one block."""

    def __post_init__(self):
        if not self.blocks:
            raise LanguageError("finite language not permitted")


def _canonical_parts(blocks: Iterable[int], adds: Iterable[Element], removes: Iterable[Element]):
    blocks = frozenset(blocks)
    adds = set(adds)
    removes = set(removes)
    # an element both added and removed is absent from the denoted set
    collisions = adds & removes
    adds -= collisions
    adds = frozenset(a for a in adds if a.column not in blocks)
    removes = frozenset(r for r in removes if r.column in blocks)
    return blocks, adds, removes


def canonicalize(
    blocks: Iterable[int],
    adds: Iterable[Element] = (),
    removes: Iterable[Element] = (),
) -> SymbolicLanguage:
    """Build a canonical infinite language; the denoted set is unchanged."""
    blocks, adds, removes = _canonical_parts(blocks, adds, removes)
    if not blocks:
        raise LanguageError("finite language not permitted")
    return SymbolicLanguage(blocks, adds, removes)


def canonical_descriptor(
    blocks: Iterable[int] = (),
    adds: Iterable[Element] = (),
    removes: Iterable[Element] = (),
) -> SetDescriptor:
    """Canonical descriptor; infinite results come back as SymbolicLanguage."""
    blocks, adds, removes = _canonical_parts(blocks, adds, removes)
    if blocks:
        return SymbolicLanguage(blocks, adds, removes)
    return SetDescriptor(blocks, adds, removes)


def finite_set(elements: Iterable[Element]) -> SetDescriptor:
    return SetDescriptor(frozenset(), frozenset(elements), frozenset())


def columns_language(columns: Iterable[int]) -> SymbolicLanguage:
    """The union of full columns, L_x for x = ``columns``."""
    return canonicalize(columns)


def member(descriptor: SetDescriptor, element: Element) -> bool:
    """Membership in the denoted set."""
    if element.column in descriptor.blocks:
        return element not in descriptor.removes
    return element in descriptor.adds


def intersect(a: SetDescriptor, b: SetDescriptor) -> SetDescriptor:
    """Exact intersection of two descriptors."""
    blocks = a.blocks & b.blocks
    extras = [e for e in a.adds | b.adds if member(a, e) and member(b, e)]
    removes = [r for r in a.removes | b.removes if r.column in blocks]
    return canonical_descriptor(blocks, extras, removes)


def intersect_all(descriptors: Iterable[SetDescriptor]) -> Optional[SetDescriptor]:
    """Fold ``intersect`` over the descriptors; None when there are none."""
    result: Optional[SetDescriptor] = None
    for descriptor in descriptors:
        result = descriptor if result is None else intersect(result, descriptor)
    return result


def _column_stream(column: int, removes: AbstractSet[Element]) -> Iterator[Element]:
    for index in itertools.count():
        element = Element(column, index)
        if element not in removes:
            yield element


def iter_members(descriptor: SetDescriptor) -> Iterator[Element]:
    """All members in canonical (id) order; infinite for infinite descriptors."""
    streams = [_column_stream(c, descriptor.removes) for c in sorted(descriptor.blocks)]
    streams.append(iter(sorted(descriptor.adds)))
    return heapq.merge(*streams)


def enumerate_canonical(descriptor: SetDescriptor, n: int) -> List[Element]:
    """The ``n`` smallest members by id, ascending."""
    if n < 0:
        raise ValueError(f"count must be nonnegative: {n}")
    return list(itertools.islice(iter_members(descriptor), n))


def smallest_member_outside(descriptor: SetDescriptor, excluded: AbstractSet[Element]) -> Optional[Element]:
    """Smallest member not in ``excluded``; None if a finite set is exhausted."""
    for element in iter_members(descriptor):
        if element not in excluded:
            return element
    return None
