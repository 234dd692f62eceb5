import pytest

from limitgen.internal.checks import ALL_SUITES, SuiteReport, SuiteRunner
from limitgen.internal.checks.base import Counterexample, trial_seed


@pytest.fixture
def runner():
    return SuiteRunner()


def test_list_suites(runner):
    assert runner.list_suites() == [ALL_SUITES, "closure", "dimension", "generators", "refutation"]


@pytest.mark.parametrize("suite,trials", [("closure", 20), ("dimension", 3), ("generators", 2), ("refutation", 1)])
def test_suites_pass(runner, suite, trials):
    report = runner.run_suite(suite, trials, 1)
    assert report.ok, "\n".join(report.to_lines())
    assert report.properties
    assert all(tally.total > 0 for tally in report.properties.values())


def test_suite_reports_are_deterministic(runner):
    first = runner.run_suite("closure", 5, 9).to_lines()
    second = runner.run_suite("closure", 5, 9).to_lines()
    assert first == second


def test_runner_rejects_bad_requests(runner):
    with pytest.raises(ValueError):
        runner.run_suite("bogus", 1, 1)
    with pytest.raises(ValueError):
        runner.run_suite("closure", -1, 1)


def test_report_merge_and_lines():
    report = SuiteReport("closure", 2, 1)
    report.tally("containment").passed += 2
    report.tally("saturation").failed += 1
    report.counterexamples.append(Counterexample("saturation", 1, "differs", "collection x\n", "(0,0)", 1))
    combined = SuiteReport(ALL_SUITES, 2, 1)
    combined.merge(report)
    assert combined.failures == 1
    assert not combined.ok
    assert combined.to_lines() == [
        "suite: all trials: 2 seed: 1",
        "  closure.containment: 2 passed, 0 failed",
        "  closure.saturation: 0 passed, 1 failed",
        "counterexample saturation trial=1: differs",
        "  set: {(0,0)} noise: 1",
        "  | collection x",
        "result: 1 failures",
    ]


def test_trial_seeds_differ():
    assert len({trial_seed(1, trial) for trial in range(100)}) == 100


def test_refutation_suite_checks_converse_witnesses(runner):
    report = runner.run_suite("refutation", 2, 4)
    assert report.properties["converse"].total >= 2
    assert report.properties["converse"].failed == 0
