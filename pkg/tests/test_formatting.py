"""Tests for output formatting utilities."""

import csv
import io
import json
import unittest

from deutsch_paths.common.formatting import (
    format_coefficients,
    format_grid,
    format_list_item,
    format_section_header,
    format_suites,
)
from deutsch_paths.verify import SuiteResult


class TestFormatCoefficients(unittest.TestCase):
    def test_text(self):
        self.assertEqual(format_coefficients([1, 0, 1, 1, 3], "text", "series", {}), "1,0,1,1,3")

    def test_json_round_trip(self):
        big = 3 ** 200
        out = format_coefficients([1, big], "json", "series", {"t": 0, "j": 0, "m": None})
        record = json.loads(out)
        self.assertEqual(record["command"], "series")
        self.assertEqual(record["params"], {"t": 0, "j": 0, "m": None})
        self.assertEqual(record["coefficients"], ["1", str(big)])
        self.assertEqual(int(record["coefficients"][1]), big)

    def test_csv(self):
        out = format_coefficients([5, 7], "csv", "series", {})
        self.assertEqual(list(csv.reader(io.StringIO(out))), [["n", "coefficient"], ["0", "5"], ["1", "7"]])

    def test_no_scientific_notation(self):
        self.assertEqual(format_coefficients([10 ** 30], "text", "count", {}), "1" + "0" * 30)


class TestFormatGrid(unittest.TestCase):
    def test_csv_shape(self):
        out = format_grid([[1, 0], [0, 1], [1, 0]], "csv", "table", {})
        rows = list(csv.reader(io.StringIO(out)))
        self.assertEqual(rows[0], ["n", "0", "1"])
        self.assertEqual(len(rows) - 1, 3)

    def test_json(self):
        record = json.loads(format_grid([[1, 0], [0, 1]], "json", "table", {"t": 0}))
        self.assertEqual(record["coefficients"], [["1", "0"], ["0", "1"]])

    def test_text(self):
        self.assertEqual(format_grid([[1, 0], [0, 12]], "text", "table", {}), "n=0    1  0\nn=1    0 12")


class TestFormatSuites(unittest.TestCase):
    def test_json(self):
        results = [SuiteResult("kernel", True, 13), SuiteResult("oracle", False, 4, ["m=1"])]
        record = json.loads(format_suites(results, "json", "Report"))
        self.assertEqual(record, {"suites": [
            {"name": "kernel", "pass": True, "cases": 13},
            {"name": "oracle", "pass": False, "cases": 4},
        ]})

    def test_text_lists_failures(self):
        out = format_suites([SuiteResult("oracle", False, 4, ["m=1 t=0 j=0"])], "text", "Report")
        self.assertIn("**Report**", out)
        self.assertIn("- oracle: FAIL (4 cases)", out)
        self.assertIn("  - m=1 t=0 j=0", out)


class TestFormatHelpers(unittest.TestCase):
    def test_section_header(self):
        self.assertEqual(format_section_header("Test"), "**Test**")

    def test_list_item(self):
        self.assertEqual(format_list_item("item"), "- item")

    def test_list_item_indented(self):
        self.assertEqual(format_list_item("item", indent=2), "    - item")


if __name__ == "__main__":
    unittest.main()
