from math import isqrt

import pytest

from limitgen.pkg.closure import (
    BRANCH_CONSTRUCTED,
    BRANCH_DIRECT,
    consistent_subfamily,
    noisy_closure,
    partition_sample,
    shrink_witness,
)
from limitgen.pkg.errors import ClosureError

from .conftest import els


def test_partition_is_by_column_then_index():
    sample = frozenset(els((1, 3), (0, 2), (1, 2), (0, 3)))
    assert partition_sample(sample, 2) == [els((0, 2), (0, 3)), els((1, 2), (1, 3))]


def test_direct_branch(c_sh):
    sample = els((2, 0), (2, 1), (2, 2), (2, 3))
    result = shrink_witness(c_sh, 2, sample)
    assert result.branch == BRANCH_DIRECT
    assert result.witness == frozenset(els((2, 0), (2, 1)))


def test_constructed_branch(c_ex):
    sample = els((0, 2), (0, 3), (1, 2), (1, 3))
    result = shrink_witness(c_ex, 2, sample)
    assert result.branch == BRANCH_CONSTRUCTED
    assert result.witness == frozenset(els((0, 0), (1, 0)))
    assert consistent_subfamily(c_ex, sample, 2, result.witness, 1)
    closure = noisy_closure(c_ex, result.witness, 1)
    assert closure.is_finite and not closure.is_empty_consistent


@pytest.mark.parametrize(
    "noise,sample",
    [
        (1, els((0, 2), (0, 3), (1, 2), (1, 3))),
        (2, els((0, 2), (0, 3), (1, 2))),
        (2, []),
        (2, els((0, 2), (0, 3), (0, 4), (0, 5))),
    ],
)
def test_shrink_preconditions(c_ex, noise, sample):
    with pytest.raises(ClosureError):
        shrink_witness(c_ex, noise, sample)


@pytest.mark.parametrize(
    "collection,sample,branch,expected",
    [
        ("c_sh", els((0, 0), (1, 0), (2, 0), (2, 1)), BRANCH_DIRECT, els((0, 0), (1, 0))),
        ("columns", els((0, 0), (0, 1), (1, 0), (1, 1)), BRANCH_CONSTRUCTED, els((0, 0), (1, 0))),
    ],
)
def test_shrink_examples(request, collection, sample, branch, expected):
    family = request.getfixturevalue(collection)
    result = shrink_witness(family, 2, sample)
    assert result.branch == branch
    assert result.witness == frozenset(expected)
    assert len(result.witness) == isqrt(len(sample))
    closure = noisy_closure(family, result.witness, 1)
    assert closure.is_finite and not closure.is_empty_consistent


def test_column_family_chunks_have_infinite_closures(columns):
    sample = frozenset(els((0, 0), (0, 1), (1, 0), (1, 1)))
    for chunk in partition_sample(sample, 2):
        assert not noisy_closure(columns, chunk, 1).is_finite
