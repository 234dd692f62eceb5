"""
Adversary for collections with a finite-closure witness.

If some S has a nonempty consistent family and a finite closure, no
generator can be uniformly correct from |S| strings on: feed it S together
with its closure in canonical order, and some consistent language misses
its answer.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Tuple

from limitgen.pkg.closure import ColumnConsistency, consistent_languages, noisy_closure, saturate
from limitgen.pkg.core.protocols import GeneratorProtocol
from limitgen.pkg.errors import ClosureError
from limitgen.pkg.universe import (
    Collection,
    ColumnFamily,
    Element,
    SymbolicLanguage,
    columns_language,
    member,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConverseWitness:
    """A prefix, the generator's answer, and a consistent target it gets wrong."""

    prefix: Tuple[Element, ...]
    output: Element
    target_name: str
    target: SymbolicLanguage


def _column_target(sample: frozenset, noise: int, output: Element) -> Tuple[str, SymbolicLanguage]:
    consistency = ColumnConsistency.for_sample(sample, noise)
    columns = set(consistency.touched)
    if output not in sample:
        # the closure is finite, so no column is heavy and any single
        # column can be dropped without losing consistency
        columns.discard(output.column)
    if not columns:
        columns = {max(consistency.touched | {output.column}) + 1}
    if not consistency.admits(columns):
        raise ClosureError("no consistent column union misses the answer")
    name = "columns{" + ",".join(str(c) for c in sorted(columns)) + "}"
    return name, columns_language(columns)


def converse_witness(
    collection: Collection,
    generator: GeneratorProtocol,
    sample: Iterable[Element],
    noise: int,
) -> ConverseWitness:
    """
    Saturate ``sample``, query the generator on the saturated set in
    canonical order and return a consistent language that makes the answer
    wrong.

    Raises:
        ClosureError: if the sample has no consistent language or an
            infinite closure.
    """
    sample = frozenset(sample)
    closure = noisy_closure(collection, sample, noise)
    if closure.is_empty_consistent or not closure.is_finite:
        raise ClosureError("converse witness needs a nonempty consistent family and a finite closure")
    saturated = saturate(collection, sample, noise)
    prefix = tuple(sorted(saturated))
    generator.reset()
    output = generator.query(list(prefix))

    if isinstance(collection, ColumnFamily):
        name, target = _column_target(saturated, noise, output)
        return ConverseWitness(prefix, output, name, target)

    for entry in consistent_languages(collection, saturated, noise):
        if output in saturated or not member(entry.language, output):
            logger.debug(f"converse witness: {generator.name} answered {output}, wrong for {entry.name}")
            return ConverseWitness(prefix, output, entry.name, entry.language)
    # the closure of the saturated set equals the finite closure of S, so an
    # answer outside it is missed by some consistent language
    raise ClosureError(f"every consistent language contains the fresh answer {output}")
