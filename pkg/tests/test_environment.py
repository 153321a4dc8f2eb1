#!/usr/bin/env python3
"""
Recolor Environment Tests
-------------------------
Tests to verify the environment is properly set up for recolor.
"""

import json
import os
import sys
import tempfile
import unittest
from pathlib import Path

# Add parent directory to path to import from project root
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from modules.config import CONFIG_SCHEMA, validate_document


class EnvironmentTests(unittest.TestCase):
    """Tests to verify the environment is properly set up for recolor."""

    def test_python_version(self):
        """Test that Python version meets requirements."""
        required_version = (3, 8)
        current_version = sys.version_info

        self.assertGreaterEqual(
            (current_version.major, current_version.minor),
            required_version,
            f"Python version {current_version.major}.{current_version.minor} is less than required version 3.8+"
        )

    def test_required_packages(self):
        """Test that required packages are installed."""
        required_packages = ["networkx", "dotenv", "jsonschema", "colorama", "tqdm", "pydot"]

        for package in required_packages:
            try:
                __import__(package)
            except ImportError:
                self.fail(f"Required package '{package}' is not installed")

    def test_optional_packages(self):
        """Report optional packages that are missing."""
        for package in ["tabulate", "argcomplete"]:
            try:
                __import__(package)
            except ImportError:
                self.skipTest(f"Optional package '{package}' is not installed")

    def test_graph_atlas_is_available(self):
        """Test that the networkx graph atlas used by the hunt mode loads."""
        import networkx as nx

        atlas = nx.graph_atlas_g()
        self.assertEqual(len(atlas), 1253)
        self.assertEqual(max(g.number_of_nodes() for g in atlas), 7)

    def test_config_file_creation(self):
        """Test that a config file can be written and passes the config schema."""
        with tempfile.TemporaryDirectory() as temp_dir:
            config_file = Path(temp_dir) / "config" / "default.json"
            config_file.parent.mkdir(parents=True)

            sample_config = {
                "budget_nodes": 500000,
                "budget_secs": 30.0,
                "workers": 2
            }
            with open(config_file, 'w') as f:
                json.dump(sample_config, f, indent=4)

            self.assertTrue(config_file.exists(), f"Failed to create config file at {config_file}")
            with open(config_file, 'r') as f:
                ok, message = validate_document(json.load(f), CONFIG_SCHEMA)
            self.assertTrue(ok, message)


if __name__ == "__main__":
    unittest.main()
