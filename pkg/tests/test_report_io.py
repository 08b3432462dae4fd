"""
Tests for report serialization.
"""

import json
from fractions import Fraction

import pytest

from algebra.ev_sets import ev
from algebra.partitions import Partition
from utils.report_io import (
    dump_json, format_cache_line, parse_cache_line, render_text, table_to_csv, to_jsonable,
)


class TestJsonable:
    """Test conversion to plain JSON types."""

    def test_partitions_become_text(self):
        """Test that partitions serialize as comma text."""
        assert to_jsonable(Partition((3, 1))) == "3,1"

    def test_fractions(self):
        """Test that integral Fractions become ints and the rest "p/q"."""
        assert to_jsonable(Fraction(6, 3)) == 2
        assert to_jsonable(Fraction(-1, 3)) == "-1/3"

    def test_tuple_keys(self):
        """Test that tuple keys become comma text."""
        assert to_jsonable({(1, 2): 3}) == {"1,2": 3}

    def test_objects_with_to_dict(self):
        """Test that objects with to_dict are expanded."""
        assert to_jsonable(ev((1,))) == [
            {"partition": "2", "multiplicity": 1},
            {"partition": "1,1", "multiplicity": 1},
        ]

    def test_unknown_type(self):
        """Test that unknown objects raise TypeError."""
        with pytest.raises(TypeError):
            to_jsonable(object())

    @pytest.mark.parametrize("value", [0.5, 1.0, float("nan")])
    def test_floats_are_rejected(self, value):
        """Test that floats never reach a report."""
        with pytest.raises(TypeError, match="float"):
            to_jsonable({"value": value})

    def test_dump_is_sorted(self):
        """Test that dumped keys are sorted."""
        text = dump_json({"b": 1, "a": Partition((2,))})
        assert json.loads(text) == {"a": "2", "b": 1}
        assert text.index('"a"') < text.index('"b"')


class TestTextAndCsv:
    """Test the text and CSV renderers."""

    def test_csv(self):
        """Test a CSV table with a partition cell."""
        assert table_to_csv(["mu", "value"], [[Partition((2, 2)), 3]]) == 'mu,value\n"2,2",3\n'

    def test_csv_nested_cell(self):
        """Test that list cells are written as JSON."""
        assert table_to_csv(["x"], [[[1, 2]]]) == 'x\n"[1, 2]"\n'

    def test_text(self):
        """Test the indented key/value rendering."""
        assert render_text({"b": [1, 2], "a": 0}) == "a: 0\nb:\n  - 1\n  - 2"


class TestCacheLines:
    """Test the cache record codec."""

    def test_format(self):
        """Test the mu;lambda;value record format."""
        assert format_cache_line((4, 4), (2, 2, 2, 2), 6) == "4,4;2,2,2,2;6"

    def test_parse(self):
        """Test parsing a record with its trailing newline."""
        assert parse_cache_line("4,4;2,2,2,2;6\n") == ((4, 4), (2, 2, 2, 2), 6)

    @pytest.mark.parametrize("line", ["4,4;6", "4;3;1", "a;b;c", "2;2;x"])
    def test_parse_rejects(self, line):
        """Test that malformed records raise ValueError."""
        with pytest.raises(ValueError):
            parse_cache_line(line)
