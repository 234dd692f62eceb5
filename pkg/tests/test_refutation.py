import pytest

from limitgen.internal.synthetic import FirstColumnRepeatGenerator, FreshColumnGenerator
from limitgen.pkg.adversary import (
    CASE_CONCENTRATED,
    CASE_INCONCLUSIVE,
    CASE_INSIDE,
    CASE_SCATTERED,
    CaseThresholds,
    algorithm1,
    build_case_language,
    classify_generator,
    ladder_set,
    make_refutation_plan,
    run_refutation,
    verify_refutation,
)
from limitgen.pkg.errors import RefutationError
from limitgen.pkg.generators import ClosureGenerator
from limitgen.pkg.universe import ColumnFamily, Element

from .conftest import els


class FixedGenerator:
    """Always answers the same element."""

    def __init__(self, answer):
        self.answer = answer
        self.name = "fixed"
        self.noise = None

    def reset(self):
        pass

    def query(self, history):
        return self.answer


@pytest.fixture
def closure_generator():
    return ClosureGenerator(ColumnFamily(), 1)


def test_ladder():
    assert ladder_set(1) == (0,)
    assert ladder_set(3) == (3, 4, 5)
    plan = make_refutation_plan(3)
    assert plan.prefix_for(2) == tuple(els((1, 0), (2, 0)))
    assert list(plan.indices) == [1, 2, 3]
    with pytest.raises(ValueError):
        make_refutation_plan(0)


def test_thresholds():
    assert CaseThresholds.for_horizon(6) == CaseThresholds(3, 2, 3)
    assert CaseThresholds.for_horizon(1) == CaseThresholds(2, 2, 2)
    assert CaseThresholds.for_horizon(12, inside=1) == CaseThresholds(1, 4, 6)


def test_closure_generator_is_concentrated(closure_generator):
    plan = make_refutation_plan(6)
    report = classify_generator(closure_generator, plan)
    assert report.case == CASE_CONCENTRATED
    assert report.f_values == (1, 0, 0, 0, 0, 0)
    assert report.concentrated_on == 1
    assert report.attracted == (2, 3, 4, 5, 6)
    assert build_case_language(report, plan) == frozenset(range(1, 21))


def test_closure_generator_refuted(closure_generator):
    outcome = run_refutation(closure_generator, 6, 5)
    assert outcome.conclusive
    assert outcome.errors == (2, 3, 4, 5, 6)
    assert outcome.describe() == [
        "case: concentrated",
        "f: 1 0 0 0 0 0",
        "concentrated_on: s_1",
        "Y: 2 3 4 5 6",
        "L: blocks{" + ",".join(str(c) for c in range(1, 21)) + "}",
        "accepted: 2 3 4 5 6",
        "errors: 2 3 4 5 6",
        "refuted: 5",
    ]


def test_longer_horizon_refutes_more(closure_generator):
    assert len(run_refutation(closure_generator, 12, 5).errors) >= 8


def test_scattered_generator_goes_through_algorithm1():
    outcome = run_refutation(FreshColumnGenerator(), 6, 5)
    assert outcome.report.case == CASE_SCATTERED
    assert outcome.accepted == (0, 1, 2, 3, 4)
    assert outcome.errors == (0, 1, 2, 3, 4)
    assert outcome.state.forbidden == {100, 101, 102, 103, 104}
    assert outcome.blocks == frozenset(range(0, 15))
    with pytest.raises(RefutationError, match="algorithm1"):
        build_case_language(outcome.report, outcome.plan)


def test_inside_case():
    plan = make_refutation_plan(6)
    report = classify_generator(FirstColumnRepeatGenerator(), plan)
    assert report.case == CASE_INSIDE
    assert report.inside_indices == (1, 2, 3, 4, 5, 6)
    outcome = run_refutation(FirstColumnRepeatGenerator(), 6, 5)
    assert outcome.errors == (1, 2, 3, 4, 5, 6)
    assert 0 not in outcome.blocks and 1 not in outcome.blocks
    assert 2 in outcome.blocks


def test_short_horizon_is_inconclusive(closure_generator):
    outcome = run_refutation(closure_generator, 1, 5)
    assert outcome.report.case == CASE_INCONCLUSIVE
    assert not outcome.conclusive
    assert outcome.describe()[-1] == "result: inconclusive, increase horizon"
    with pytest.raises(RefutationError):
        build_case_language(outcome.report, outcome.plan)


def test_algorithm1_skips_forbidden_columns():
    plan = make_refutation_plan(2)
    history = []
    state = algorithm1(FixedGenerator(Element(1, 0)), plan, [1, 2], 5, history)
    assert state.accepted == [0]
    assert state.blocks == {0}
    assert state.forbidden == {1}
    assert state.iterations == 2
    assert [snapshot.accepted for snapshot in history] == [[0], [0]]


def test_algorithm1_invariants_hold_per_iteration():
    plan = make_refutation_plan(8)
    history = []
    algorithm1(FreshColumnGenerator(), plan, list(plan.indices), 8, history)
    for snapshot in history:
        assert len(snapshot.forbidden) <= len(snapshot.accepted)
        for position in snapshot.accepted:
            assert snapshot.outputs[position].column not in snapshot.blocks


def test_verify_rejects_wrong_prefix_shape():
    plan = make_refutation_plan(3)
    with pytest.raises(RefutationError):
        verify_refutation(FreshColumnGenerator(), plan, frozenset(range(6)), [2], CASE_INSIDE)
    with pytest.raises(RefutationError):
        verify_refutation(FreshColumnGenerator(), plan, frozenset(), [2], CASE_CONCENTRATED)
