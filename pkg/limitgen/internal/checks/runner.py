"""
Suite runner - runs property suites by name.
"""

import logging
from typing import Dict, List, Optional, Type

from limitgen.config import HarnessConfig
from limitgen.internal.checks.base import Suite, SuiteReport
from limitgen.internal.checks.closure_suite import ClosureSuite
from limitgen.internal.checks.dimension_suite import DimensionSuite
from limitgen.internal.checks.generators_suite import GeneratorsSuite
from limitgen.internal.checks.refutation_suite import RefutationSuite

logger = logging.getLogger(__name__)

ALL_SUITES = "all"


class SuiteRunner:
    """
    Runs property suites.
    """

    # Registry of available suites
    _suite_registry: Dict[str, Type[Suite]] = {
        "closure": ClosureSuite,
        "dimension": DimensionSuite,
        "generators": GeneratorsSuite,
        "refutation": RefutationSuite,
    }

    def __init__(self, config: Optional[HarnessConfig] = None):
        self.config = config or HarnessConfig()

    def list_suites(self) -> List[str]:
        """List all available suites."""
        return [ALL_SUITES] + list(self._suite_registry.keys())

    def run_suite(self, suite_name: str, trials: int, seed: int) -> SuiteReport:
        """
        Run a suite, or every suite for ``all``.

        Raises:
            ValueError: for unknown suite names or negative trial counts.
        """
        if trials < 0:
            raise ValueError(f"trials must be >= 0: {trials}")
        if suite_name == ALL_SUITES:
            combined = SuiteReport(ALL_SUITES, trials, seed)
            for name in self._suite_registry:
                combined.merge(self._run_one(name, trials, seed))
            return combined
        if suite_name not in self._suite_registry:
            raise ValueError(f"Unknown suite: {suite_name}. Available: {self.list_suites()}")
        return self._run_one(suite_name, trials, seed)

    def _run_one(self, suite_name: str, trials: int, seed: int) -> SuiteReport:
        logger.info(f"Running suite {suite_name} ({trials} trials, seed {seed})")
        suite = self._suite_registry[suite_name](self.config)
        return suite.run(trials, seed)
