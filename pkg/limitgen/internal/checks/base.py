"""
Property suite interface.

A suite draws ``trials`` seeded instances and tallies each named property;
every failure carries enough to reproduce it (collection text, sample and
noise level).
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

from limitgen.config import HarnessConfig
from limitgen.pkg.universe import Collection, Element, format_elements, serialize_collection

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Counterexample:
    prop: str
    trial: int
    detail: str
    collection_text: str = ""
    sample: str = ""
    noise: Optional[int] = None

    def to_lines(self) -> List[str]:
        lines = [f"counterexample {self.prop} trial={self.trial}: {self.detail}"]
        if self.sample or self.noise is not None:
            lines.append(f"  set: {{{self.sample}}} noise: {self.noise}")
        lines.extend("  | " + line for line in self.collection_text.splitlines())
        return lines


@dataclass
class PropertyTally:
    passed: int = 0
    failed: int = 0

    @property
    def total(self) -> int:
        return self.passed + self.failed


@dataclass
class SuiteReport:
    """Pass/fail counts per property plus counterexamples."""

    suite: str
    trials: int
    seed: int
    properties: Dict[str, PropertyTally] = field(default_factory=dict)
    counterexamples: List[Counterexample] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(tally.failed for tally in self.properties.values())

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def tally(self, prop: str) -> PropertyTally:
        return self.properties.setdefault(prop, PropertyTally())

    def merge(self, other: "SuiteReport") -> None:
        for prop, tally in other.properties.items():
            mine = self.tally(f"{other.suite}.{prop}")
            mine.passed += tally.passed
            mine.failed += tally.failed
        self.counterexamples.extend(other.counterexamples)

    def to_lines(self) -> List[str]:
        lines = [f"suite: {self.suite} trials: {self.trials} seed: {self.seed}"]
        for prop in sorted(self.properties):
            tally = self.properties[prop]
            lines.append(f"  {prop}: {tally.passed} passed, {tally.failed} failed")
        for counterexample in self.counterexamples:
            lines.extend(counterexample.to_lines())
        lines.append("result: " + ("ok" if self.ok else f"{self.failures} failures"))
        return lines


class Suite(ABC):
    """Base class for property suites."""

    name: str = ""

    def __init__(self, config: Optional[HarnessConfig] = None):
        self.config = config or HarnessConfig()
        self.report: Optional[SuiteReport] = None

    @abstractmethod
    def run_trial(self, trial: int, seed: int) -> None:
        """Check every property once on the instance for ``trial``."""

    def run(self, trials: int, seed: int) -> SuiteReport:
        self.report = SuiteReport(self.name, trials, seed)
        for trial in range(trials):
            self.run_trial(trial, seed)
        logger.debug(f"Suite {self.name}: {self.report.failures} failures over {trials} trials")
        return self.report

    def record(
        self,
        prop: str,
        passed: bool,
        trial: int,
        detail: str = "",
        collection: Optional[Collection] = None,
        sample: Iterable[Element] = (),
        noise: Optional[int] = None,
    ) -> bool:
        tally = self.report.tally(prop)
        if passed:
            tally.passed += 1
            return True
        tally.failed += 1
        self.report.counterexamples.append(
            Counterexample(
                prop,
                trial,
                detail,
                serialize_collection(collection) if collection is not None else "",
                format_elements(sample, ","),
                noise,
            )
        )
        logger.warning(f"{self.name}.{prop} failed on trial {trial}: {detail}")
        return False


def trial_seed(seed: int, trial: int) -> int:
    """Independent seed per trial so single trials can be replayed."""
    return seed * 1_000_003 + trial
