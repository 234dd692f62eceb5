"""
Iterative scattered-case construction and verification of refutations.

In the scattered case the ladder sets a_0, a_1, ... (the indices whose answer
fell outside their own set) are walked in order. a_j joins the language L
when none of its columns was forbidden by an earlier accepted answer and its
own answer is not already in L; the column of that answer is then
forbidden. Every accepted answer stays outside L.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set

from limitgen.pkg.adversary.refutation import (
    CASE_INCONCLUSIVE,
    CASE_INSIDE,
    CASE_SCATTERED,
    CaseReport,
    CaseThresholds,
    RefutationPlan,
    build_case_language,
    classify_generator,
    make_refutation_plan,
    query_fresh,
)
from limitgen.pkg.core.protocols import GeneratorProtocol
from limitgen.pkg.errors import RefutationError
from limitgen.pkg.universe import Element

logger = logging.getLogger(__name__)


@dataclass
class Algorithm1State:
    """L as a block set, accepted positions C and forbidden columns N."""

    blocks: Set[int] = field(default_factory=set)
    accepted: List[int] = field(default_factory=list)
    forbidden: Set[int] = field(default_factory=set)
    outputs: Dict[int, Element] = field(default_factory=dict)
    iterations: int = 0

    def check_invariants(self, plan: RefutationPlan, sequence: Sequence[int]) -> None:
        """
        L is the union of the accepted ladder sets, every accepted answer lies
        outside L, and N gains at most one column per accepted position.

        N can be smaller than C when two accepted answers share a column.
        """
        expected = set()
        for position in self.accepted:
            expected |= set(plan.set_for(sequence[position]))
        if expected != self.blocks:
            raise RefutationError(f"L drifted from the accepted ladder sets after {self.iterations} iterations")
        if len(self.forbidden) > len(self.accepted):
            raise RefutationError("more forbidden columns than accepted positions")
        for position in self.accepted:
            if self.outputs[position].column in self.blocks:
                raise RefutationError(f"accepted answer at position {position} lies inside L")

    def snapshot(self) -> "Algorithm1State":
        return Algorithm1State(set(self.blocks), list(self.accepted), set(self.forbidden), dict(self.outputs), self.iterations)


def algorithm1(
    generator: GeneratorProtocol,
    plan: RefutationPlan,
    sequence: Sequence[int],
    iterations: int,
    history: Optional[List[Algorithm1State]] = None,
) -> Algorithm1State:
    """
    Run the construction over the first ``iterations`` entries of
    ``sequence`` (ladder indices). Invariants are checked after every
    iteration; pass ``history`` to collect a snapshot per iteration.
    """
    if iterations < 0:
        raise ValueError(f"iterations must be nonnegative: {iterations}")
    state = Algorithm1State()
    for position in range(min(iterations, len(sequence))):
        columns = set(plan.set_for(sequence[position]))
        answer = query_fresh(generator, plan.prefix_for(sequence[position]))
        if not columns & state.forbidden and answer.column not in state.blocks:
            state.blocks |= columns
            state.accepted.append(position)
            state.forbidden.add(answer.column)
            state.outputs[position] = answer
        state.iterations += 1
        state.check_invariants(plan, sequence)
        if history is not None:
            history.append(state.snapshot())
    if iterations > len(sequence):
        logger.debug(f"algorithm1: {iterations} iterations requested, only {len(sequence)} scattered indices")
    return state


def verify_refutation(
    generator: GeneratorProtocol,
    plan: RefutationPlan,
    blocks: FrozenSet[int],
    accepted: Sequence[int],
    case: str,
    sequence: Optional[Sequence[int]] = None,
) -> List[int]:
    """
    Replay the generator on each accepted prefix and return the entries of
    ``accepted`` whose answer falls outside L.

    ``accepted`` holds ladder indices, or positions into ``sequence`` when it
    is given. In the inside case each prefix must contain exactly one element
    outside L; otherwise none.
    """
    if not blocks:
        raise RefutationError("empty language")
    allowed_outside = 1 if case == CASE_INSIDE else 0
    errors = []
    for entry in accepted:
        ladder = sequence[entry] if sequence is not None else entry
        prefix = plan.prefix_for(ladder)
        outside = sum(1 for e in prefix if e.column not in blocks)
        if outside != allowed_outside:
            raise RefutationError(
                f"prefix s'_{ladder} has {outside} elements outside L, expected {allowed_outside}"
            )
        answer = query_fresh(generator, prefix)
        if answer.column not in blocks:
            errors.append(entry)
    return errors


@dataclass(frozen=True)
class RefutationOutcome:
    """Everything the refutation pipeline produced."""

    plan: RefutationPlan
    report: CaseReport
    blocks: FrozenSet[int] = frozenset()
    accepted: Sequence[int] = ()
    errors: Sequence[int] = ()
    state: Optional[Algorithm1State] = None

    @property
    def conclusive(self) -> bool:
        return self.report.conclusive

    def describe(self) -> List[str]:
        lines = self.report.describe()
        if not self.conclusive:
            lines.append("result: inconclusive, increase horizon")
            return lines
        lines.append("L: blocks{" + ",".join(str(c) for c in sorted(self.blocks)) + "}")
        lines.append("accepted: " + " ".join(str(i) for i in self.accepted))
        lines.append("errors: " + " ".join(str(i) for i in self.errors))
        lines.append(f"refuted: {len(self.errors)}")
        return lines


def run_refutation(
    generator: GeneratorProtocol,
    horizon: int,
    iterations: int,
    thresholds: Optional[CaseThresholds] = None,
) -> RefutationOutcome:
    """Plan, classify, construct and verify."""
    plan = make_refutation_plan(horizon)
    report = classify_generator(generator, plan, thresholds or CaseThresholds.for_horizon(horizon))
    logger.info(f"Refutation of {generator.name} at horizon {horizon}: case {report.case}")

    if report.case == CASE_INCONCLUSIVE:
        return RefutationOutcome(plan, report)

    if report.case == CASE_SCATTERED:
        sequence = report.outside_indices
        state = algorithm1(generator, plan, sequence, iterations)
        blocks = frozenset(state.blocks)
        if not blocks:
            raise RefutationError("algorithm1 accepted nothing")
        errors = verify_refutation(generator, plan, blocks, state.accepted, report.case, sequence)
        return RefutationOutcome(plan, report, blocks, tuple(state.accepted), tuple(errors), state)

    blocks = build_case_language(report, plan)
    accepted = report.inside_indices if report.case == CASE_INSIDE else report.attracted
    errors = verify_refutation(generator, plan, blocks, accepted, report.case)
    return RefutationOutcome(plan, report, blocks, tuple(accepted), tuple(errors))
