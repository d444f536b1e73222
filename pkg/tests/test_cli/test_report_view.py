import io
import json
import math
import unittest

import numpy as np

from src.view.report_view import Report, ReportView

FIELD_ORDER = ["schema_version", "command", "parameters", "results", "partial", "tool_version", "wall_time"]


class TestReportView(unittest.TestCase):
    def setUp(self):
        self.view = ReportView(io.StringIO())

    def test_format_float(self):
        self.assertEqual(ReportView.format_float(0.1), "0.10000000000000001")
        self.assertEqual(ReportView.format_float(2.0), "2")
        self.assertEqual(ReportView.format_float(math.nan), "null")
        self.assertEqual(ReportView.format_float(math.inf), "null")
        self.assertEqual(float(ReportView.format_float(math.sqrt(2))), math.sqrt(2))

    def test_scalars(self):
        self.assertEqual(self.view.encode(True), "true")
        self.assertEqual(self.view.encode(np.bool_(False)), "false")
        self.assertEqual(self.view.encode(None), "null")
        self.assertEqual(self.view.encode(np.int64(7)), "7")
        self.assertEqual(self.view.encode(np.float64(0.5)), "0.5")
        self.assertEqual(self.view.encode("S_(n,3)"), '"S_(n,3)"')

    def test_numeric_lists_are_inline(self):
        self.assertEqual(self.view.encode([1, 2.5, None]), "[1, 2.5, null]")
        self.assertEqual(self.view.encode(np.array([0.25, 1.0])), "[0.25, 1]")
        self.assertEqual(self.view.encode([]), "[]")
        self.assertEqual(self.view.encode({}), "{}")

    def test_nested_layout(self):
        text = self.view.encode({"a": [{"b": 1}], "c": "x"})
        self.assertEqual(text, '{\n  "a": [\n    {\n      "b": 1\n    }\n  ],\n  "c": "x"\n}')

    def test_field_order(self):
        report = Report("rho", {"n": 3}, {"rho": 2.0}, 0.5)
        rendered = self.view.render(report)
        self.assertTrue(rendered.endswith("\n"))
        payload = json.loads(rendered)
        self.assertEqual(list(payload), FIELD_ORDER)
        self.assertFalse(payload["partial"])

    def test_show_writes_to_stream(self):
        stream = io.StringIO()
        ReportView(stream).show(Report("pack", {}, {"nu": 1}, 0.0, partial=True))
        self.assertTrue(json.loads(stream.getvalue())["partial"])

    def test_unsupported_type(self):
        with self.assertRaises(TypeError):
            self.view.encode({"graph": object()})


if __name__ == "__main__":
    unittest.main()
