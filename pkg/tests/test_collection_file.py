import pytest

from limitgen.internal.fixtures import example_collection, gadget_chain_levels
from limitgen.pkg.errors import CollectionParseError
from limitgen.pkg.universe import (
    ColumnFamily,
    ExplicitCollection,
    parse_collection,
    read_collection,
    serialize_collection,
    write_collection,
)

C_EX_TEXT = """collection c_ex
family explicit
language L1
blocks 0
add (1,0) (1,1)
end
language L2
blocks 1
add (0,0) (0,1)
end
"""


def test_serialize_is_canonical(c_ex):
    assert serialize_collection(c_ex) == C_EX_TEXT
    assert parse_collection(C_EX_TEXT) == c_ex


def test_comments_and_blank_lines_ignored():
    text = "# header\n\ncollection x  # name\nfamily explicit\nlanguage A\nblocks 2 0\nremove (0,3)\nend\n"
    collection = parse_collection(text)
    assert collection.names == ["A"]
    assert serialize_collection(collection) == "collection x\nfamily explicit\nlanguage A\nblocks 0 2\nremove (0,3)\nend\n"


def test_column_family():
    collection = parse_collection("collection cols\nfamily columns\n")
    assert collection == ColumnFamily("cols")
    assert serialize_collection(collection) == "collection cols\nfamily columns\n"


def test_shipped_files_match_fixtures(collections_dir):
    assert read_collection(collections_dir / "c_ex.col") == example_collection()
    for level in gadget_chain_levels():
        assert read_collection(collections_dir / f"{level.name}.col") == level
    assert isinstance(read_collection(collections_dir / "columns.col"), ColumnFamily)


def test_write_then_read(tmp_path, c_sh):
    path = tmp_path / "c_sh.col"
    write_collection(c_sh, path)
    assert read_collection(path) == c_sh


@pytest.mark.parametrize(
    "text,line",
    [
        ("collection a\nfamily explicit\nlanguage A\nblocks 0\nend\nlanguage A\nblocks 1\nend\n", 6),
        ("collection a\nfamily explicit\nlanguage A\nblocks 0\n", 3),
        ("collection a\nfamily explicit\nlanguage A\nblocks\nend\n", 3),
        ("collection a\nfamily explicit\nlanguage A\nblocks 0\nadd (1,0), (1,1)\nend\n", 5),
        ("collection a\nfamily bogus\n", 2),
        ("language A\n", 1),
        ("collection a\nfamily columns\nlanguage A\n", 3),
        ("collection a\nfamily explicit\nlanguage A\nblocks x\nend\n", 4),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(CollectionParseError) as excinfo:
        parse_collection(text)
    assert excinfo.value.line == line
    assert str(excinfo.value).startswith(f"line {line}:")


def test_duplicate_sets_under_different_names_rejected():
    text = "collection a\nfamily explicit\nlanguage A\nblocks 0\nend\nlanguage B\nblocks 0\nadd (0,1)\nend\n"
    with pytest.raises(CollectionParseError):
        parse_collection(text)


def test_explicit_collection_lookup(c_ex):
    assert isinstance(c_ex, ExplicitCollection)
    assert c_ex.index_of(c_ex.get("L2")) == 1
    assert c_ex.get("L3") is None
    assert len(c_ex) == 2
