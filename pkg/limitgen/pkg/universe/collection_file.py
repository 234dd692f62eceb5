"""
Collection file codec.

Line-oriented UTF-8 format; ``#`` starts a comment and blank lines are
ignored::

    collection <name>
    family explicit | family columns
    language <name>
    blocks <c> <c> ...
    add (<c>,<k>) ...        # optional
    remove (<c>,<k>) ...     # optional
    end

Serialization writes every list in ascending order with single spaces and
no trailing whitespace, so ``parse_collection(serialize_collection(c)) == c``.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from limitgen.pkg.errors import CollectionParseError, LanguageError
from limitgen.pkg.universe.collection import Collection, ColumnFamily, ExplicitCollection, NamedLanguage
from limitgen.pkg.universe.element import Element, format_elements, parse_elements
from limitgen.pkg.universe.language import canonicalize

logger = logging.getLogger(__name__)

FAMILY_EXPLICIT = "explicit"
FAMILY_COLUMNS = "columns"


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def _keyword(line: str) -> Tuple[str, str]:
    head, _, rest = line.partition(" ")
    return head, rest.strip()


def _single_name(rest: str, what: str, number: int) -> str:
    if not rest or len(rest.split()) != 1:
        raise CollectionParseError(f"{what} needs exactly one name", number)
    return rest


def _parse_blocks(rest: str, number: int) -> List[int]:
    tokens = rest.split()
    try:
        blocks = [int(token) for token in tokens]
    except ValueError:
        raise CollectionParseError(f"block indices must be integers: {rest!r}", number)
    if any(c < 0 for c in blocks):
        raise CollectionParseError("block indices must be nonnegative", number)
    return blocks


def _parse_element_list(rest: str, number: int) -> List[Element]:
    try:
        return parse_elements(rest)
    except ValueError as e:
        raise CollectionParseError(str(e), number)


def parse_collection(text: str) -> Collection:
    """Parse collection text; every language comes back canonicalized."""
    lines = _content_lines(text)
    if not lines:
        raise CollectionParseError("empty collection file", 1)

    number, line = lines[0]
    keyword, rest = _keyword(line)
    if keyword != "collection":
        raise CollectionParseError(f"expected 'collection <name>', got {line!r}", number)
    name = _single_name(rest, "collection", number)

    if len(lines) < 2:
        raise CollectionParseError("missing 'family' line", number)
    number, line = lines[1]
    keyword, rest = _keyword(line)
    if keyword != "family" or rest not in (FAMILY_EXPLICIT, FAMILY_COLUMNS):
        raise CollectionParseError(f"expected 'family explicit' or 'family columns', got {line!r}", number)

    body = lines[2:]
    if rest == FAMILY_COLUMNS:
        if body:
            raise CollectionParseError("'family columns' takes no language bodies", body[0][0])
        return ColumnFamily(name)

    members: List[NamedLanguage] = []
    seen: Dict[str, int] = {}
    current: Optional[Dict[str, object]] = None
    for number, line in body:
        keyword, rest = _keyword(line)
        if current is None:
            if keyword != "language":
                raise CollectionParseError(f"expected 'language <name>', got {line!r}", number)
            language_name = _single_name(rest, "language", number)
            if language_name in seen:
                raise CollectionParseError(
                    f"duplicate language name {language_name!r} (first defined on line {seen[language_name]})",
                    number,
                )
            seen[language_name] = number
            current = {"name": language_name, "line": number}
        elif keyword in ("blocks", "add", "remove"):
            if keyword in current:
                raise CollectionParseError(f"repeated '{keyword}' line", number)
            if keyword == "blocks":
                current[keyword] = _parse_blocks(rest, number)
            else:
                current[keyword] = _parse_element_list(rest, number)
        elif keyword == "end":
            if rest:
                raise CollectionParseError("'end' takes no arguments", number)
            if "blocks" not in current:
                raise CollectionParseError(f"language {current['name']!r} has no 'blocks' line", number)
            try:
                language = canonicalize(current["blocks"], current.get("add", ()), current.get("remove", ()))
            except LanguageError as e:
                raise CollectionParseError(f"language {current['name']!r}: {e}", current["line"])
            members.append(NamedLanguage(current["name"], language))
            current = None
        else:
            raise CollectionParseError(f"unexpected line {line!r}", number)

    if current is not None:
        raise CollectionParseError(f"language {current['name']!r} is missing 'end'", current["line"])
    if not members:
        raise CollectionParseError("explicit collection has no languages", lines[1][0])
    try:
        collection = ExplicitCollection(name, tuple(members))
    except LanguageError as e:
        raise CollectionParseError(str(e))
    logger.debug(f"Parsed collection {name!r} with {len(members)} languages")
    return collection


def serialize_collection(collection: Collection) -> str:
    """Render a collection in its canonical file form."""
    lines = [f"collection {collection.name}"]
    if isinstance(collection, ColumnFamily):
        lines.append(f"family {FAMILY_COLUMNS}")
        return "\n".join(lines) + "\n"

    lines.append(f"family {FAMILY_EXPLICIT}")
    for entry in collection.members:
        language = entry.language
        lines.append(f"language {entry.name}")
        lines.append("blocks " + " ".join(str(c) for c in sorted(language.blocks)))
        if language.adds:
            lines.append("add " + format_elements(language.adds))
        if language.removes:
            lines.append("remove " + format_elements(language.removes))
        lines.append("end")
    return "\n".join(lines) + "\n"


def read_collection(path: Union[str, Path]) -> Collection:
    """Load a collection file from disk."""
    text = Path(path).read_text(encoding="utf-8")
    return parse_collection(text)


def write_collection(collection: Collection, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize_collection(collection), encoding="utf-8")
