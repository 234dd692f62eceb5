"""
Universe core: elements of N x N, symbolic languages and collection files.
"""

from .element import (
    Element,
    column_of,
    decode_element,
    encode_element,
    format_elements,
    parse_element,
    parse_elements,
    smallest_unseen,
)
from .language import (
    SetDescriptor,
    SymbolicLanguage,
    canonical_descriptor,
    canonicalize,
    columns_language,
    enumerate_canonical,
    finite_set,
    intersect,
    intersect_all,
    iter_members,
    member,
    smallest_member_outside,
)
from .collection import Collection, ColumnFamily, ExplicitCollection, NamedLanguage
from .collection_file import parse_collection, read_collection, serialize_collection, write_collection

__all__ = [
    "Element",
    "column_of",
    "decode_element",
    "encode_element",
    "format_elements",
    "parse_element",
    "parse_elements",
    "smallest_unseen",
    "SetDescriptor",
    "SymbolicLanguage",
    "canonical_descriptor",
    "canonicalize",
    "columns_language",
    "enumerate_canonical",
    "finite_set",
    "intersect",
    "intersect_all",
    "iter_members",
    "member",
    "smallest_member_outside",
    "Collection",
    "ColumnFamily",
    "ExplicitCollection",
    "NamedLanguage",
    "parse_collection",
    "read_collection",
    "serialize_collection",
    "write_collection",
]
