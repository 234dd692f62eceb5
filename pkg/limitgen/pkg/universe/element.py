"""
Universe elements.

The universe is N x N. Each pair (column, index) is identified with its
Cantor pairing id, and ids give the canonical total order used for
enumeration and tie-breaking everywhere in the package.
"""

import re
from dataclasses import dataclass
from functools import total_ordering
from math import isqrt
from typing import Iterable, Iterator, List, Tuple

ELEMENT_PATTERN = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def pair_id(column: int, index: int) -> int:
    """Cantor pairing of (column, index)."""
    s = column + index
    return s * (s + 1) // 2 + index


@total_ordering
@dataclass(frozen=True)
class Element:
    """A universe element: the pair (column, index)."""

    column: int
    index: int

    def __post_init__(self):
        if self.column < 0 or self.index < 0:
            raise ValueError(f"element coordinates must be nonnegative: ({self.column},{self.index})")

    @property
    def id(self) -> int:
        return pair_id(self.column, self.index)

    def __lt__(self, other: "Element") -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.id < other.id

    def __str__(self) -> str:
        return f"({self.column},{self.index})"


def encode_element(column: int, index: int) -> Element:
    """Build the element (column, index); its id is the Cantor pairing."""
    return Element(column, index)


def decode_element(element_id: int) -> Element:
    """Invert the Cantor pairing."""
    if element_id < 0:
        raise ValueError(f"element id must be nonnegative: {element_id}")
    w = (isqrt(8 * element_id + 1) - 1) // 2
    index = element_id - w * (w + 1) // 2
    return Element(w - index, index)


def column_of(element: Element) -> int:
    """First coordinate of the pair."""
    return element.column


def iter_universe() -> Iterator[Element]:
    """All universe elements in canonical (id) order."""
    element_id = 0
    while True:
        yield decode_element(element_id)
        element_id += 1


def smallest_unseen(seen: Iterable[Element]) -> Element:
    """Smallest universe element (by id) not in ``seen``."""
    taken = {e.id for e in seen}
    element_id = 0
    while element_id in taken:
        element_id += 1
    return decode_element(element_id)


def pair_key(element: Element) -> Tuple[int, int]:
    """Sort key for display order: by column, then index."""
    return (element.column, element.index)


def parse_element(token: str) -> Element:
    """Parse a single ``(c,k)`` token."""
    match = ELEMENT_PATTERN.fullmatch(token.strip())
    if not match:
        raise ValueError(f"malformed element: {token!r}")
    return Element(int(match.group(1)), int(match.group(2)))


def parse_elements(text: str) -> List[Element]:
    """Parse a whitespace-separated list of ``(c,k)`` tokens."""
    text = text.strip()
    if not text:
        return []
    elements = []
    position = 0
    for match in ELEMENT_PATTERN.finditer(text):
        if text[position:match.start()].strip():
            raise ValueError(f"unexpected text in element list: {text[position:match.start()].strip()!r}")
        elements.append(Element(int(match.group(1)), int(match.group(2))))
        position = match.end()
    if text[position:].strip():
        raise ValueError(f"unexpected text in element list: {text[position:].strip()!r}")
    return elements


def format_elements(elements: Iterable[Element], separator: str = " ") -> str:
    """Render elements in display order."""
    return separator.join(str(e) for e in sorted(elements, key=pair_key))
