"""
Closure engine: consistent sets, noisy closures, closure dimension and
witness shrinking.
"""

from .engine import (
    ClosureResult,
    ColumnConsistency,
    ConsistentSet,
    SampleSet,
    admits_language,
    column_closure,
    column_hits,
    consistent_languages,
    consistent_set,
    consistent_subfamily,
    misses,
    noisy_closure,
    saturate,
)
from .dimension import (
    DimensionReport,
    Verdict,
    best_witness,
    build_pool,
    dimension_for,
    nc_dimension,
    nc_dimension_columns,
)
from .shrink import BRANCH_CONSTRUCTED, BRANCH_DIRECT, ShrinkResult, partition_sample, shrink_witness

__all__ = [
    "ClosureResult",
    "ColumnConsistency",
    "ConsistentSet",
    "SampleSet",
    "admits_language",
    "column_closure",
    "column_hits",
    "consistent_languages",
    "consistent_set",
    "consistent_subfamily",
    "misses",
    "noisy_closure",
    "saturate",
    "DimensionReport",
    "Verdict",
    "best_witness",
    "build_pool",
    "dimension_for",
    "nc_dimension",
    "nc_dimension_columns",
    "BRANCH_CONSTRUCTED",
    "BRANCH_DIRECT",
    "ShrinkResult",
    "partition_sample",
    "shrink_witness",
]
