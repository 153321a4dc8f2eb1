#!/usr/bin/env python3
"""
Command Line Tests
------------------
Tests for the recolor subcommands and their exit codes.
"""

import io
import json
import os
import shutil
import sys
import tempfile
import unittest
from unittest.mock import patch

# Add parent directory to path to import from project root
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import recolor
from modules.config import reset_config
from modules.hunt import recheck_finding


class CliTestCase(unittest.TestCase):
    """Runs recolor.main() with patched argv and captured output."""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        reset_config()

    def tearDown(self):
        reset_config()
        shutil.rmtree(self.temp_dir)

    def run_cli(self, *argv):
        stdout, stderr = io.StringIO(), io.StringIO()
        with patch.object(sys, "argv", ["recolor.py", *argv]), \
                patch("sys.stdout", stdout), patch("sys.stderr", stderr):
            with self.assertRaises(SystemExit) as raised:
                recolor.main()
        return raised.exception.code, stdout.getvalue(), stderr.getvalue()


class TestCompute(CliTestCase):
    """compute subcommand."""

    def test_cycle_json(self):
        code, out, _ = self.run_cli("compute", "--family", "cycle:5", "--k", "3", "--json")
        self.assertEqual(code, recolor.EXIT_PASS)
        document = json.loads(out)
        self.assertEqual((document["g"], document["h"]), (2, 2))

    def test_table_output(self):
        code, out, _ = self.run_cli("compute", "--family", "cycle:4", "--k", "3")
        self.assertEqual(code, recolor.EXIT_PASS)
        self.assertIn("connected", out)

    def test_thresholds_only(self):
        code, out, _ = self.run_cli("compute", "--family", "path:2", "--thresholds", "--json")
        self.assertEqual(code, recolor.EXIT_PASS)
        document = json.loads(out)
        self.assertEqual((document["k1"], document["k0"]), (3, 3))

    def test_recoloring_path(self):
        code, out, _ = self.run_cli("compute", "--family", "path:2", "--k", "3", "--j", "1",
                                    "--path", "12", "21", "--json")
        self.assertEqual(code, recolor.EXIT_PASS)
        self.assertEqual(len(json.loads(out)["path"]), 4)

    def test_dot_export(self):
        dot = os.path.join(self.temp_dir, "p2.dot")
        code, _, _ = self.run_cli("compute", "--family", "path:2", "--k", "3", "--j", "1", "--dot", dot)
        self.assertEqual(code, recolor.EXIT_PASS)
        with open(dot) as f:
            self.assertIn("G1_3", f.read())

    def test_output_format_from_config(self):
        config_path = os.path.join(self.temp_dir, "json.json")
        with open(config_path, "w") as f:
            json.dump({"output_format": "json"}, f)
        code, out, _ = self.run_cli("compute", "--family", "cycle:5", "--k", "3", "--config", config_path)
        self.assertEqual(code, recolor.EXIT_PASS)
        self.assertEqual(json.loads(out)["g"], 2)

    def test_below_chromatic_number_is_usage(self):
        code, _, err = self.run_cli("compute", "--family", "cycle:5", "--k", "2")
        self.assertEqual(code, recolor.EXIT_USAGE)
        self.assertIn("chromatic number", err)

    def test_missing_k_is_usage(self):
        code, _, _ = self.run_cli("compute", "--family", "cycle:5")
        self.assertEqual(code, recolor.EXIT_USAGE)

    def test_unknown_family_is_usage(self):
        code, _, _ = self.run_cli("compute", "--family", "wheel:5", "--k", "3")
        self.assertEqual(code, recolor.EXIT_USAGE)


class TestGraycode(CliTestCase):
    """graycode subcommand."""

    def test_fixture(self):
        code, out, _ = self.run_cli("graycode", "--fixture", "c4-h3")
        self.assertEqual(code, recolor.EXIT_PASS)
        self.assertEqual(out.splitlines()[0], "1312")
        self.assertEqual(len(out.splitlines()), 18)

    def test_multipartite_auto(self):
        code, out, _ = self.run_cli("graycode", "--family", "complete:4", "--colors", "4", "--json")
        self.assertEqual(code, recolor.EXIT_PASS)
        document = json.loads(out)
        self.assertEqual((document["j"], document["length"]), (2, 24))
        self.assertEqual(document["constructor"], "multipartite-k")

    def test_multigraph(self):
        code, out, _ = self.run_cli("graycode", "--multigraph", "1; 0 0 3", "--colors", "3", "--json")
        self.assertEqual(code, recolor.EXIT_PASS)
        self.assertEqual(json.loads(out)["length"], 18)

    def test_multigraph_palette(self):
        code, _, _ = self.run_cli("graycode", "--multigraph", "1; 0 0 3", "--colors", "5")
        self.assertEqual(code, recolor.EXIT_USAGE)

    def test_not_hamiltonian_is_refuted(self):
        code, _, _ = self.run_cli("graycode", "--family", "path:3", "--colors", "3",
                                  "--constructor", "search", "--j", "1")
        self.assertEqual(code, recolor.EXIT_REFUTED)

    def test_saved_output(self):
        code, _, _ = self.run_cli("graycode", "--fixture", "c4-h3", "--output", self.temp_dir)
        self.assertEqual(code, recolor.EXIT_PASS)
        saved = [name for name in os.listdir(self.temp_dir) if name.endswith(".json")]
        self.assertEqual(len(saved), 1)


class TestVerifyAndHunt(CliTestCase):
    """verify and hunt subcommands."""

    def test_verify_list(self):
        code, out, _ = self.run_cli("verify", "--list")
        self.assertEqual(code, recolor.EXIT_PASS)
        self.assertIn("trees-cycles", out)

    def test_verify_suite(self):
        code, out, _ = self.run_cli("verify", "--suite", "fixture", "--json")
        self.assertEqual(code, recolor.EXIT_PASS)
        self.assertEqual(json.loads(out)["summary"]["pass"], 2)

    def test_hunt_table(self):
        code, out, _ = self.run_cli("hunt", "--source", "atlas:3", "--predicate", "table", "--k", "3")
        self.assertEqual(code, recolor.EXIT_PASS)
        rows = [json.loads(line) for line in out.splitlines()]
        self.assertEqual([row["name"] for row in rows], ["atlas-1", "atlas-3", "atlas-6", "atlas-7"])
        self.assertTrue(all(recheck_finding(row) for row in rows))

    def test_hunt_without_findings(self):
        code, out, _ = self.run_cli("hunt", "--source", "atlas:3", "--k", "3")
        self.assertEqual(code, recolor.EXIT_PASS)
        self.assertEqual(out, "")

    def test_conjecture_rejects_other_palettes(self):
        code, out, _ = self.run_cli("hunt", "--source", "atlas:2", "--predicate", "conjecture", "--k", "5")
        self.assertEqual(code, recolor.EXIT_USAGE)
        self.assertEqual(out, "")

    def test_no_command(self):
        code, _, _ = self.run_cli()
        self.assertEqual(code, recolor.EXIT_USAGE)

    def test_bad_argument_is_usage(self):
        code, _, _ = self.run_cli("verify", "--suite", "bogus")
        self.assertEqual(code, recolor.EXIT_USAGE)


if __name__ == "__main__":
    unittest.main()
