import random

import pytest

from limitgen.internal.instances import InstanceGenerator
from limitgen.pkg.errors import LanguageError
from limitgen.pkg.universe import (
    Element,
    SymbolicLanguage,
    canonical_descriptor,
    canonicalize,
    columns_language,
    decode_element,
    enumerate_canonical,
    finite_set,
    intersect,
    intersect_all,
    member,
    smallest_member_outside,
)

from .conftest import els


def test_canonicalize_drops_redundant_exceptions():
    language = canonicalize({0}, els((0, 3), (1, 0)), els((0, 1), (2, 2)))
    assert language.adds == frozenset(els((1, 0)))
    assert language.removes == frozenset(els((0, 1)))
    assert member(language, Element(0, 3))
    assert not member(language, Element(0, 1))
    assert not member(language, Element(2, 2))


def test_add_and_remove_of_same_element_cancel():
    language = canonicalize({0}, els((1, 0)), els((1, 0)))
    assert language == canonicalize({0})
    assert not member(language, Element(1, 0))


def test_finite_languages_rejected():
    with pytest.raises(LanguageError):
        canonicalize([], els((0, 0)))
    with pytest.raises(LanguageError):
        SymbolicLanguage()


def test_canonical_descriptor_shapes():
    assert isinstance(canonical_descriptor({1}), SymbolicLanguage)
    finite = canonical_descriptor((), els((0, 0), (3, 1)))
    assert finite.is_finite
    assert finite.finite_members() == els((0, 0), (3, 1))


def test_intersection_of_example_languages_is_finite(c_ex):
    l1, l2 = c_ex.languages
    both = intersect(l1, l2)
    assert both.is_finite
    assert both.finite_members() == els((0, 0), (1, 0), (0, 1), (1, 1))
    assert both.describe() == "finite:4 {(0,0),(0,1),(1,0),(1,1)}"


def test_intersection_keeps_shared_blocks_and_removals():
    a = canonicalize({0, 1}, removes=els((0, 0)))
    b = canonicalize({0, 2}, adds=els((1, 5)), removes=els((0, 4)))
    both = intersect(a, b)
    assert both == canonicalize({0}, els((1, 5)), els((0, 0), (0, 4)))
    assert both.describe() == "infinite blocks{0} add{(1,5)} remove{(0,0),(0,4)}"


def test_intersect_all():
    assert intersect_all([]) is None
    assert intersect_all([columns_language([0, 1]), columns_language([1, 2])]) == columns_language([1])
    assert intersect_all([columns_language([0]), columns_language([1])]) == finite_set([])


def test_enumerate_canonical(c_ex):
    l1 = c_ex.get("L1")
    assert enumerate_canonical(l1, 6) == els((0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (0, 3))
    holed = canonicalize({0}, removes=els((0, 0)))
    assert enumerate_canonical(holed, 2) == els((0, 1), (0, 2))
    with pytest.raises(ValueError):
        enumerate_canonical(l1, -1)


def test_smallest_member_outside():
    assert smallest_member_outside(finite_set(els((0, 0))), {Element(0, 0)}) is None
    assert smallest_member_outside(columns_language([2]), {Element(2, 0)}) == Element(2, 1)


WINDOW = [decode_element(element_id) for element_id in range(501)]


def _descriptors(seed, count):
    """Random languages plus their pairwise intersections, some of them finite."""
    instances = InstanceGenerator(seed)
    languages = [instances.language() for _ in range(count)]
    return languages + [intersect(a, b) for a, b in zip(languages, languages[1:])]


@pytest.mark.parametrize("seed", range(10))
def test_intersect_is_commutative_and_associative(seed):
    instances = InstanceGenerator(seed)
    for _ in range(50):
        a, b, c = instances.language(), instances.language(), instances.language()
        assert intersect(a, b) == intersect(b, a)
        assert intersect(intersect(a, b), c) == intersect(a, intersect(b, c))


@pytest.mark.parametrize("seed", range(5))
def test_intersect_agrees_with_member_on_window(seed):
    instances = InstanceGenerator(seed)
    for _ in range(10):
        a, b = instances.language(), instances.language()
        both = intersect(a, b)
        for element in WINDOW:
            assert member(both, element) == (member(a, element) and member(b, element)), (a, b, element)


@pytest.mark.parametrize("seed", range(5))
def test_canonicalize_preserves_denotation_on_window(seed):
    rng = random.Random(seed)
    instances = InstanceGenerator(seed)
    for _ in range(20):
        blocks = set(rng.sample(range(6), rng.randint(1, 3)))
        adds = {instances.element() for _ in range(rng.randint(0, 6))}
        removes = {instances.element() for _ in range(rng.randint(0, 6))}
        language = canonicalize(blocks, adds, removes)
        assert not language.adds & language.removes
        assert all(e.column not in blocks for e in language.adds)
        assert all(e.column in blocks for e in language.removes)
        for element in WINDOW:
            raw = (element.column in blocks or element in adds) and element not in removes
            assert member(language, element) == raw, (blocks, adds, removes, element)


@pytest.mark.parametrize("seed", range(5))
def test_enumerate_canonical_is_increasing_and_complete(seed):
    for descriptor in _descriptors(seed, 8):
        listed = enumerate_canonical(descriptor, 40)
        ids = [e.id for e in listed]
        assert ids == sorted(set(ids))
        assert all(member(descriptor, e) for e in listed)
        if listed:
            # nothing below the last listed id is skipped (checked inside the window)
            expected = [e for e in WINDOW if member(descriptor, e) and e.id <= listed[-1].id]
            assert expected == [e for e in listed if e.id <= WINDOW[-1].id]
        if descriptor.is_finite:
            assert listed == descriptor.finite_members()[:40]
