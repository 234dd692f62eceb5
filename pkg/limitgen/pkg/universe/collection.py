"""
Collections of languages.

Two shapes exist: an explicit, finite list of named symbolic languages, and
the intensional column family (all nonempty unions of full columns).
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from limitgen.pkg.errors import LanguageError
from limitgen.pkg.universe.element import Element
from limitgen.pkg.universe.language import SymbolicLanguage, canonicalize, member


@dataclass(frozen=True)
class NamedLanguage:
    name: str
    language: SymbolicLanguage

    def __contains__(self, element: Element) -> bool:
        return member(self.language, element)


@dataclass(frozen=True)
class ExplicitCollection:
    """A finite, named list of pairwise distinct languages."""

    name: str
    members: Tuple[NamedLanguage, ...]

    def __post_init__(self):
        if not self.members:
            raise LanguageError(f"collection {self.name!r} has no languages")
        seen_names = set()
        seen_languages: Dict[SymbolicLanguage, str] = {}
        for entry in self.members:
            if entry.name in seen_names:
                raise LanguageError(f"duplicate language name {entry.name!r}")
            seen_names.add(entry.name)
            if entry.language in seen_languages:
                raise LanguageError(
                    f"languages {seen_languages[entry.language]!r} and {entry.name!r} denote the same set"
                )
            seen_languages[entry.language] = entry.name

    @classmethod
    def of(cls, name: str, languages: Dict[str, SymbolicLanguage]) -> "ExplicitCollection":
        return cls(name, tuple(NamedLanguage(n, lang) for n, lang in languages.items()))

    @property
    def languages(self) -> List[SymbolicLanguage]:
        return [entry.language for entry in self.members]

    @property
    def names(self) -> List[str]:
        return [entry.name for entry in self.members]

    def get(self, name: str) -> Optional[SymbolicLanguage]:
        for entry in self.members:
            if entry.name == name:
                return entry.language
        return None

    def index_of(self, language: SymbolicLanguage) -> Optional[int]:
        for position, entry in enumerate(self.members):
            if entry.language == language:
                return position
        return None

    def contains_language(self, language: SymbolicLanguage) -> bool:
        return self.index_of(language) is not None

    def issubcollection(self, other: "ExplicitCollection") -> bool:
        """Structural containment of the language lists (names ignored)."""
        return set(self.languages) <= set(other.languages)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ColumnFamily:
    """All nonempty unions of full columns; nothing is stored."""

    name: str = "columns"

    def language(self, columns) -> SymbolicLanguage:
        """The member L_x for the column set x."""
        columns = frozenset(columns)
        if not columns:
            raise LanguageError("finite language not permitted")
        return canonicalize(columns)

    def contains_language(self, language: SymbolicLanguage) -> bool:
        return bool(language.blocks) and not language.adds and not language.removes


Collection = Union[ExplicitCollection, ColumnFamily]
