"""
Noisy closure dimension search.

NC_i(C) is the size of the largest S with a nonempty consistent family and a
finite closure. Qualifying sets are closed under taking subsets, and S
qualifies exactly when some family F of languages with finite intersection
is entirely consistent with S. The search therefore runs per family: the
elements of the finite intersection are free, every other pool element
costs one unit of noise budget on each language of F it misses.

The search is exhaustive over a finite candidate pool: every exception of
every language, the ``depth`` smallest non-exception elements of each block
column and ``depth`` fresh elements outside all languages.
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from limitgen.pkg.errors import SettleTimeError
from limitgen.pkg.universe import (
    Element,
    ExplicitCollection,
    ColumnFamily,
    SymbolicLanguage,
    format_elements,
    intersect_all,
    member,
)
from limitgen.pkg.universe.element import iter_universe

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    """Dimension verdicts."""
    EXACT = "Exact"
    AT_LEAST = "AtLeast"
    NO_WITNESS = "NoWitness"


@dataclass(frozen=True)
class DimensionReport:
    """Outcome of a dimension search."""

    verdict: Verdict
    noise: int
    value: Optional[int] = None
    witness: Tuple[Element, ...] = ()
    searched_pool: Tuple[Element, ...] = ()
    max_size_searched: int = 0

    @property
    def settle_time(self) -> int:
        """Settle time certified by this report (NoWitness counts as 0)."""
        if self.verdict == Verdict.EXACT:
            return self.value
        if self.verdict == Verdict.NO_WITNESS:
            return 0
        raise SettleTimeError("settle time not certifiable at this budget")

    def describe(self) -> str:
        if self.verdict == Verdict.NO_WITNESS:
            return self.verdict.value
        return f"{self.verdict.value} {self.value}"

    def to_lines(self) -> List[str]:
        return [
            f"verdict: {self.describe()}",
            f"witness: {{{format_elements(self.witness, ',')}}}",
            f"pool: {len(self.searched_pool)}",
            f"max_size: {self.max_size_searched}",
        ]


def build_pool(collection: ExplicitCollection, depth: int) -> Tuple[Element, ...]:
    """Candidate elements for the dimension search, in canonical order."""
    if depth < 1:
        raise ValueError(f"pool depth must be >= 1: {depth}")
    languages = collection.languages
    exceptions = set()
    for language in languages:
        exceptions |= language.adds | language.removes
    pool = set(exceptions)

    columns = sorted(set().union(*(language.blocks for language in languages)))
    for column in columns:
        found = 0
        for index in itertools.count():
            element = Element(column, index)
            if element in exceptions:
                continue
            pool.add(element)
            found += 1
            if found == depth:
                break

    found = 0
    for element in iter_universe():
        if found == depth:
            break
        if element in pool or any(member(language, element) for language in languages):
            continue
        pool.add(element)
        found += 1
    return tuple(sorted(pool))


def _witness_key(witness: Sequence[Element]) -> Tuple[int, Tuple[int, ...]]:
    return (-len(witness), tuple(e.id for e in witness))


def _best_picks(
    groups: List[Tuple[FrozenSet[int], List[Element]]],
    family: FrozenSet[int],
    noise: int,
) -> List[Element]:
    """Largest choice of costed elements keeping every budget within ``noise``."""
    budget = {j: noise for j in family}
    best: List[Optional[List[Element]]] = [None]
    chosen: List[Element] = []
    # remaining capacity bound for pruning
    capacity = [len(elements) for _, elements in groups]
    suffix = [0] * (len(groups) + 1)
    for position in range(len(groups) - 1, -1, -1):
        suffix[position] = suffix[position + 1] + capacity[position]

    def search(position: int) -> None:
        if best[0] is not None and len(chosen) + suffix[position] < len(best[0]):
            return
        if position == len(groups):
            candidate = sorted(chosen)
            if best[0] is None or _witness_key(candidate) < _witness_key(best[0]):
                best[0] = candidate
            return
        cost, elements = groups[position]
        limit = min([len(elements)] + [budget[j] for j in cost])
        for count in range(limit, -1, -1):
            for j in cost:
                budget[j] -= count
            chosen.extend(elements[:count])
            search(position + 1)
            del chosen[len(chosen) - count:]
            for j in cost:
                budget[j] += count

    search(0)
    return best[0] or []


def best_witness(languages: Sequence[SymbolicLanguage], pool: Sequence[Element], noise: int) -> Optional[Tuple[Element, ...]]:
    """Largest qualifying subset of ``pool``; None when no set qualifies."""
    indices = range(len(languages))
    membership = {e: frozenset(j for j in indices if member(languages[j], e)) for e in pool}
    best: Optional[Tuple[Element, ...]] = None
    families_examined = 0
    for size in range(1, len(languages) + 1):
        for family in itertools.combinations(indices, size):
            closure = intersect_all(languages[j] for j in family)
            if not closure.is_finite:
                continue
            families_examined += 1
            family_set = frozenset(family)
            core: List[Element] = []
            by_cost: Dict[FrozenSet[int], List[Element]] = {}
            for element in pool:
                cost = family_set - membership[element]
                if cost:
                    by_cost.setdefault(cost, []).append(element)
                else:
                    core.append(element)
            groups = sorted(by_cost.items(), key=lambda item: item[1][0].id)
            candidate = tuple(sorted(core + _best_picks(groups, family_set, noise)))
            if best is None or _witness_key(candidate) < _witness_key(best):
                best = candidate
    logger.debug(f"Dimension search examined {families_examined} finite families over {len(pool)} pool elements")
    return best


def nc_dimension(
    collection: ExplicitCollection,
    noise: int,
    max_size: int = 12,
    pool_depth: Optional[int] = None,
) -> DimensionReport:
    """NC_i of an explicit collection, exhaustive over the candidate pool."""
    if isinstance(collection, ColumnFamily):
        raise ValueError("the column family uses nc_dimension_columns")
    if noise < 0:
        raise ValueError(f"noise level must be nonnegative: {noise}")
    if max_size < 0:
        raise ValueError(f"max_size must be nonnegative: {max_size}")
    depth = pool_depth if pool_depth is not None else noise + 2
    pool = build_pool(collection, depth)
    witness = best_witness(collection.languages, pool, noise)
    logger.debug(f"nc_dimension({collection.name}, {noise}): pool of {len(pool)}, best {witness and len(witness)}")

    if witness is None:
        return DimensionReport(Verdict.NO_WITNESS, noise, None, (), pool, max_size)
    if len(witness) <= max_size:
        return DimensionReport(Verdict.EXACT, noise, len(witness), witness, pool, max_size)
    return DimensionReport(Verdict.AT_LEAST, noise, max_size, witness[:max_size], pool, max_size)


def nc_dimension_columns(noise: int, max_size: int = 12) -> DimensionReport:
    """
    NC_i of the column family.

    At noise 0 every nonempty sample keeps its touched columns in the
    closure, so only the empty set qualifies. At noise i >= 1, spreading i
    elements per column leaves the closure empty at every size.
    """
    if noise < 0:
        raise ValueError(f"noise level must be nonnegative: {noise}")
    if noise == 0:
        return DimensionReport(Verdict.EXACT, 0, 0, (), (), max_size)
    witness = []
    for column in itertools.count():
        if len(witness) >= max_size:
            break
        for index in range(noise):
            if len(witness) >= max_size:
                break
            witness.append(Element(column, index))
    witness = tuple(sorted(witness))
    return DimensionReport(Verdict.AT_LEAST, noise, max_size, witness, witness, max_size)


def dimension_for(collection, noise: int, max_size: int = 12, pool_depth: Optional[int] = None) -> DimensionReport:
    """Dispatch on the collection shape."""
    if isinstance(collection, ColumnFamily):
        return nc_dimension_columns(noise, max_size)
    return nc_dimension(collection, noise, max_size, pool_depth)
