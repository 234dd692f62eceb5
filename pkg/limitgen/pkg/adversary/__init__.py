"""
Adversary: noisy enumerations, the column-family refutation and the converse
witness for finite-closure sets.
"""

from .enumeration import NoisyEnumeration, Schedule, build_enumeration
from .refutation import (
    CASE_CONCENTRATED,
    CASE_INCONCLUSIVE,
    CASE_INSIDE,
    CASE_SCATTERED,
    CaseReport,
    CaseThresholds,
    RefutationPlan,
    build_case_language,
    classify_generator,
    ladder_set,
    make_refutation_plan,
)
from .algorithm1 import Algorithm1State, RefutationOutcome, algorithm1, run_refutation, verify_refutation
from .converse import ConverseWitness, converse_witness

__all__ = [
    "NoisyEnumeration",
    "Schedule",
    "build_enumeration",
    "CASE_CONCENTRATED",
    "CASE_INCONCLUSIVE",
    "CASE_INSIDE",
    "CASE_SCATTERED",
    "CaseReport",
    "CaseThresholds",
    "RefutationPlan",
    "build_case_language",
    "classify_generator",
    "ladder_set",
    "make_refutation_plan",
    "Algorithm1State",
    "RefutationOutcome",
    "algorithm1",
    "run_refutation",
    "verify_refutation",
    "ConverseWitness",
    "converse_witness",
]
