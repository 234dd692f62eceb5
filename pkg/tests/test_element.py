import pytest

from limitgen.pkg.universe import (
    Element,
    column_of,
    decode_element,
    encode_element,
    format_elements,
    parse_element,
    parse_elements,
    smallest_unseen,
)
from limitgen.pkg.universe.element import iter_universe, pair_id


@pytest.mark.parametrize(
    "column,index,expected",
    [(0, 0, 0), (1, 0, 1), (0, 1, 2), (2, 0, 3), (1, 1, 4), (0, 2, 5), (2, 1, 7)],
)
def test_pair_id(column, index, expected):
    assert pair_id(column, index) == expected
    assert encode_element(column, index).id == expected
    assert decode_element(expected) == Element(column, index)


def test_decode_inverts_encode_on_a_range():
    for element_id in range(10**4):
        element = decode_element(element_id)
        assert element.id == element_id


@pytest.mark.parametrize("element_id", [10**12, 2**62 + 12345, 10**30 + 7])
def test_decode_inverts_encode_at_large_ids(element_id):
    element = decode_element(element_id)
    assert pair_id(element.column, element.index) == element_id
    assert encode_element(element.column, element.index) == element


def test_universe_order_is_by_id():
    first = [e for _, e in zip(range(6), iter_universe())]
    assert first == [Element(0, 0), Element(1, 0), Element(0, 1), Element(2, 0), Element(1, 1), Element(0, 2)]
    assert sorted(reversed(first)) == first


def test_negative_coordinates_rejected():
    with pytest.raises(ValueError):
        Element(-1, 0)
    with pytest.raises(ValueError):
        decode_element(-3)


def test_parse_and_format():
    assert parse_element(" ( 3 , 4 ) ") == Element(3, 4)
    assert parse_elements("(0,1) (2,0)  (1,1)") == [Element(0, 1), Element(2, 0), Element(1, 1)]
    assert parse_elements("   ") == []
    assert str(Element(3, 4)) == "(3,4)"
    assert format_elements([Element(1, 0), Element(0, 2)]) == "(0,2) (1,0)"
    assert format_elements([Element(1, 0), Element(0, 2)], ",") == "(0,2),(1,0)"


@pytest.mark.parametrize("text", ["(0,1), (2,0)", "(0,1) x", "(0,-1)", "0,1"])
def test_parse_rejects_malformed_lists(text):
    with pytest.raises(ValueError):
        parse_elements(text)


def test_smallest_unseen():
    assert smallest_unseen([]) == Element(0, 0)
    assert smallest_unseen([Element(0, 0), Element(1, 0)]) == Element(0, 1)
    assert smallest_unseen([Element(2, 0)]) == Element(0, 0)


@pytest.mark.parametrize("element,expected", [(Element(0, 0), 0), (Element(2, 1), 2), (decode_element(7), 2)])
def test_column_of(element, expected):
    assert column_of(element) == expected
