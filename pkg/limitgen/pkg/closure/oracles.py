"""
Brute-force oracles.

These work on explicit windows of the universe (ids 0..window) and share no
code with the symbolic engine beyond membership, so they can be used to
cross-check it.
"""

import itertools
import logging
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional

from limitgen.pkg.closure.engine import ClosureResult
from limitgen.pkg.universe import (
    Collection,
    ColumnFamily,
    Element,
    ExplicitCollection,
    NamedLanguage,
    columns_language,
    decode_element,
    intersect_all,
    member,
)

logger = logging.getLogger(__name__)


def window_elements(window: int) -> List[Element]:
    """Universe elements with id 0..window."""
    return [decode_element(element_id) for element_id in range(window + 1)]


def windowed(closure: ClosureResult, window: int) -> Optional[FrozenSet[Element]]:
    """Restrict a symbolic closure to ids 0..window (None for empty-consistent)."""
    if closure.is_empty_consistent:
        return None
    return frozenset(e for e in window_elements(window) if member(closure.value, e))


def brute_force_closure(
    collection: ExplicitCollection,
    sample: Iterable[Element],
    noise: int,
    window: int,
) -> Optional[FrozenSet[Element]]:
    """Closure on ids 0..window by a membership fold; None when nothing is consistent."""
    sample = list(sample)
    consistent = [
        language
        for language in collection.languages
        if sum(1 for e in sample if not member(language, e)) <= noise
    ]
    if not consistent:
        return None
    return frozenset(
        e for e in window_elements(window) if all(member(language, e) for language in consistent)
    )


@lru_cache(maxsize=None)
def column_oracle_collection(m: int) -> ExplicitCollection:
    """All 2^m - 1 nonempty unions of columns 0..m-1 as an explicit collection."""
    members = []
    for size in range(1, m + 1):
        for columns in itertools.combinations(range(m), size):
            name = "u" + "_".join(str(c) for c in columns)
            members.append(NamedLanguage(name, columns_language(columns)))
    return ExplicitCollection(f"columns-{m}", tuple(members))


def column_oracle_closure(sample: Iterable[Element], noise: int, m: int, window: int) -> Optional[FrozenSet[Element]]:
    """Windowed closure of ``sample`` over the unions of the first m columns."""
    sample = list(sample)
    if any(e.column >= m for e in sample):
        raise ValueError(f"sample leaves columns 0..{m - 1}")
    return brute_force_closure(column_oracle_collection(m), sample, noise, window)


def brute_force_dimension(collection: Collection, noise: int, window: int) -> Optional[int]:
    """
    Largest qualifying subset of ids 0..window, or None when even the empty
    set does not qualify.

    Qualifying sets are closed under subsets, so the search only extends
    sets that still qualify. Miss counts are kept per language and the
    finiteness of every sub-family intersection is tabulated up front.
    """
    if isinstance(collection, ColumnFamily):
        raise ValueError("the column family has no finite brute-force dimension")
    languages = collection.languages
    n = len(languages)
    finite_family = [False] * (1 << n)
    for mask in range(1, 1 << n):
        chosen = [languages[j] for j in range(n) if mask >> j & 1]
        finite_family[mask] = intersect_all(chosen).is_finite

    elements = window_elements(window)
    outside = [[j for j in range(n) if not member(languages[j], e)] for e in elements]
    misses = [0] * n

    def qualifies() -> bool:
        mask = 0
        for j in range(n):
            if misses[j] <= noise:
                mask |= 1 << j
        return finite_family[mask]

    if not qualifies():
        return None

    best = [0]
    visited = [0]

    def extend(start: int, size: int) -> None:
        visited[0] += 1
        if size > best[0]:
            best[0] = size
        for position in range(start, len(elements)):
            for j in outside[position]:
                misses[j] += 1
            if qualifies():
                extend(position + 1, size + 1)
            for j in outside[position]:
                misses[j] -= 1

    extend(0, 0)
    logger.debug(f"brute_force_dimension({collection.name}, {noise}): {visited[0]} sets over window {window}")
    return best[0]
