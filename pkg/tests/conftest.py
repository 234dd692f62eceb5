"""Shared fixtures."""

from pathlib import Path

import pytest

from limitgen.internal.fixtures import example_collection, gadget_chain_levels, shared_tail_collection
from limitgen.pkg.universe import ColumnFamily, Element

ROOT = Path(__file__).resolve().parent.parent
COLLECTIONS = ROOT / "collections"
GOLDEN = Path(__file__).resolve().parent / "golden"


def els(*pairs):
    """Elements from (c, k) pairs."""
    return [Element(c, k) for c, k in pairs]


@pytest.fixture
def c_ex():
    return example_collection()


@pytest.fixture
def c_sh():
    return shared_tail_collection()


@pytest.fixture
def columns():
    return ColumnFamily()


@pytest.fixture
def d_levels():
    return gadget_chain_levels()


@pytest.fixture
def collections_dir():
    return COLLECTIONS


@pytest.fixture
def golden_dir():
    return GOLDEN
