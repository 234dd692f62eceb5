"""
The column-family refutation adversary.

The ladder s_1 = {0}, s_2 = {1, 2}, s_3 = {3, 4, 5}, ... groups columns, and
s'_i lists the first element of each column of s_i. A generator is queried
on every s'_i with fresh state; the column f_i of its answer decides which
of three constructions defeats it:

- inside: f_i lies in s_i for many i; the language drops the hit column
  from each such s_i.
- concentrated: many f-values fall into one ladder set a; the language is
  the union of the ladder sets that sent their answer there.
- scattered: neither; the iterative construction in algorithm1 builds the language.

The limit behaviour cannot be observed at a finite horizon, so the cases are
decided by counts against thresholds, and may come out inconclusive.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

from limitgen.pkg.core.protocols import GeneratorProtocol
from limitgen.pkg.errors import RefutationError
from limitgen.pkg.universe import Element

logger = logging.getLogger(__name__)

CASE_INSIDE = "inside"
CASE_CONCENTRATED = "concentrated"
CASE_SCATTERED = "scattered"
CASE_INCONCLUSIVE = "inconclusive"

MIN_THRESHOLD = 2


def ladder_set(i: int) -> Tuple[int, ...]:
    """s_i = {i(i-1)/2, ..., i(i+1)/2 - 1}."""
    if i < 1:
        raise ValueError(f"ladder index must be >= 1: {i}")
    start = i * (i - 1) // 2
    return tuple(range(start, start + i))


@dataclass(frozen=True)
class RefutationPlan:
    """Ladder sets s_1..s_n and their prefixes s'_1..s'_n."""

    n: int
    sets: Tuple[Tuple[int, ...], ...]
    lists: Tuple[Tuple[Element, ...], ...]

    def set_for(self, i: int) -> Tuple[int, ...]:
        return self.sets[i - 1]

    def prefix_for(self, i: int) -> Tuple[Element, ...]:
        return self.lists[i - 1]

    @property
    def indices(self) -> range:
        return range(1, self.n + 1)


def make_refutation_plan(n: int) -> RefutationPlan:
    if n < 1:
        raise ValueError(f"horizon must be >= 1: {n}")
    sets = tuple(ladder_set(i) for i in range(1, n + 1))
    lists = tuple(tuple(Element(c, 0) for c in s) for s in sets)
    return RefutationPlan(n, sets, lists)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class CaseThresholds:
    """Counts a case needs within the horizon."""

    inside: int
    concentration: int
    scattered: int

    @classmethod
    def for_horizon(
        cls,
        n: int,
        inside: Optional[int] = None,
        concentration: Optional[int] = None,
        scattered: Optional[int] = None,
    ) -> "CaseThresholds":
        """Defaults: ceil(n/2), ceil(n/3) and ceil(n/2), never below 2."""
        return cls(
            inside if inside is not None else max(MIN_THRESHOLD, _ceil_div(n, 2)),
            concentration if concentration is not None else max(MIN_THRESHOLD, _ceil_div(n, 3)),
            scattered if scattered is not None else max(MIN_THRESHOLD, _ceil_div(n, 2)),
        )


@dataclass(frozen=True)
class CaseReport:
    """Observed answers on the ladder and the case they select."""

    case: str
    horizon: int
    outputs: Tuple[Element, ...]
    thresholds: CaseThresholds
    inside_indices: Tuple[int, ...] = ()
    outside_indices: Tuple[int, ...] = ()
    concentrated_on: Optional[int] = None
    attracted: Tuple[int, ...] = ()

    @property
    def f_values(self) -> Tuple[int, ...]:
        return tuple(z.column for z in self.outputs)

    def f(self, i: int) -> int:
        return self.outputs[i - 1].column

    @property
    def conclusive(self) -> bool:
        return self.case != CASE_INCONCLUSIVE

    def describe(self) -> List[str]:
        lines = [f"case: {self.case}"]
        lines.append("f: " + " ".join(str(v) for v in self.f_values))
        if self.case == CASE_INSIDE:
            lines.append("X: " + " ".join(str(i) for i in self.inside_indices))
        elif self.case == CASE_CONCENTRATED:
            lines.append(f"concentrated_on: s_{self.concentrated_on}")
            lines.append("Y: " + " ".join(str(i) for i in self.attracted))
        elif self.case == CASE_SCATTERED:
            lines.append("sequence: " + " ".join(str(i) for i in self.outside_indices))
        else:
            lines.append(
                f"counts: inside={len(self.inside_indices)} outside={len(self.outside_indices)} "
                f"thresholds={self.thresholds.inside}/{self.thresholds.concentration}/{self.thresholds.scattered}"
            )
        return lines


def query_fresh(generator: GeneratorProtocol, prefix: Sequence[Element]) -> Element:
    """Answer on ``prefix`` from a freshly reset generator."""
    generator.reset()
    return generator.query(list(prefix))


def classify_generator(
    generator: GeneratorProtocol,
    plan: RefutationPlan,
    thresholds: Optional[CaseThresholds] = None,
) -> CaseReport:
    """Query the generator on every ladder prefix and pick a case."""
    thresholds = thresholds or CaseThresholds.for_horizon(plan.n)
    outputs = tuple(query_fresh(generator, plan.prefix_for(i)) for i in plan.indices)
    f = {i: outputs[i - 1].column for i in plan.indices}
    inside = tuple(i for i in plan.indices if f[i] in plan.set_for(i))
    outside = tuple(i for i in plan.indices if f[i] not in plan.set_for(i))
    logger.debug(f"classify {generator.name}: f={list(f.values())} inside={len(inside)} outside={len(outside)}")

    if len(inside) >= thresholds.inside:
        return CaseReport(CASE_INSIDE, plan.n, outputs, thresholds, inside, outside)

    best: Optional[int] = None
    best_attracted: Tuple[int, ...] = ()
    for a in outside:
        columns = plan.set_for(a)
        attracted = tuple(j for j in outside if j != a and f[j] in columns)
        if len(attracted) > len(best_attracted):
            best, best_attracted = a, attracted
    if best is not None and len(best_attracted) >= thresholds.concentration:
        return CaseReport(CASE_CONCENTRATED, plan.n, outputs, thresholds, inside, outside, best, best_attracted)

    if len(outside) >= thresholds.scattered:
        return CaseReport(CASE_SCATTERED, plan.n, outputs, thresholds, inside, outside)
    return CaseReport(CASE_INCONCLUSIVE, plan.n, outputs, thresholds, inside, outside)


def build_case_language(report: CaseReport, plan: RefutationPlan) -> FrozenSet[int]:
    """
    Block set of the refuting language for the inside and concentrated cases.

    Raises:
        RefutationError: for scattered or inconclusive reports.
    """
    if report.case == CASE_INSIDE:
        blocks = set()
        for i in report.inside_indices:
            blocks |= set(plan.set_for(i)) - {report.f(i)}
    elif report.case == CASE_CONCENTRATED:
        blocks = set()
        for j in report.attracted:
            blocks |= set(plan.set_for(j))
    elif report.case == CASE_SCATTERED:
        raise RefutationError("use algorithm1")
    else:
        raise RefutationError("inconclusive classification: increase the horizon")
    if not blocks:
        raise RefutationError("constructed language is empty")
    return frozenset(blocks)
