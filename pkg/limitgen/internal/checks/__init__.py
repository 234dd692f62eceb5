"""
Property suites behind ``limitgen check``.
"""

from .base import Counterexample, PropertyTally, Suite, SuiteReport
from .runner import ALL_SUITES, SuiteRunner

__all__ = ["Counterexample", "PropertyTally", "Suite", "SuiteReport", "ALL_SUITES", "SuiteRunner"]
