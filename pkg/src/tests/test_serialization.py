"""
Test cases for the element file format
"""

import pytest

from src.htgroups.exceptions import ElementParseError, InvalidWord
from src.htgroups.serialization import (
    dump_element,
    dump_table,
    load_element,
    load_table,
    parse_code,
)
from src.htgroups.tables import Table, identity

TRANSPOSITION_FILE = "G 2\n0 -> 1\n1 -> 0\n"


class TestDump:
    """Test cases for writing element files"""

    def test_dump_identity(self):
        """Test the identity file"""
        assert dump_element(identity(3)) == "G 3\n- -> -\n"

    def test_dump_keeps_table_order(self):
        """Test raw tables are written as given"""
        t = Table(k=2, pairs=(((1,), (0,)), ((0,), (1,))))
        assert dump_table(t) == "G 2\n1 -> 0\n0 -> 1\n"


class TestLoad:
    """Test cases for reading element files"""

    def test_load_element(self):
        """Test a canonical file loads and dumps byte-identically"""
        g = load_element(TRANSPOSITION_FILE)
        assert g.pairs == (((0,), (1,)), ((1,), (0,)))
        assert dump_element(g) == TRANSPOSITION_FILE

    def test_normalizes(self):
        """Test the identity collapses on load"""
        assert dump_element(load_element("G 2\n0 -> 0\n1 -> 1\n")) == "G 2\n- -> -\n"

    def test_comments_blank_lines_and_spacing(self):
        """Test comments, blank lines and loose spacing are accepted"""
        text = "# transposition\n\nG   2\n  1->0  \n# second pair\n0 ->\t1\r\n"
        assert dump_element(load_element(text)) == TRANSPOSITION_FILE

    def test_load_table_keeps_invalid_tables(self):
        """Test load_table does not validate"""
        t = load_table("G 2\n0 -> 1\n0 -> 0\n")
        assert t.pairs == (((0,), (1,)), ((0,), (0,)))

    @pytest.mark.parametrize(
        "text, line, column",
        [
            ("", 1, 1),
            ("H 2\n", 1, 1),
            ("G 11\n", 1, 3),
            ("G 2\n0 -> 1\n1 => 0\n", 3, 1),
            ("G 2\n0 -> 1\n1 -> 2\n", 3, 6),
            ("G 2\n\n0x -> 1\n", 3, 1),
        ],
    )
    def test_parse_errors(self, text, line, column):
        """Test parse errors carry line and column"""
        with pytest.raises(ElementParseError) as exc_info:
            load_table(text)
        assert (exc_info.value.line, exc_info.value.column) == (line, column)
        assert exc_info.value.message.startswith(f"line {line}, column {column}:")


class TestParseCode:
    """Test cases for --code lists"""

    def test_parse_code(self):
        """Test comma-separated words"""
        assert parse_code("0, 10,11", 2) == [(0,), (1, 0), (1, 1)]

    def test_parse_code_bad_word(self):
        """Test a word outside the alphabet"""
        with pytest.raises(InvalidWord):
            parse_code("0,2", 2)
