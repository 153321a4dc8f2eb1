#!/usr/bin/env python3
"""
Permutation Code Tests
----------------------
Tests for cyclic star-transposition listings of permutations.
"""

import math
import os
import sys
import unittest

# Add parent directory to path to import from project root
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from modules.errors import PreconditionError
from modules.permutations import (
    PermutationCode, star_graph_adjacency, star_transposition_code, star_transposition_search
)


class TestStarTranspositionCode(unittest.TestCase):
    """The constructive listing."""

    def test_valid_up_to_six(self):
        for n in range(2, 7):
            code = star_transposition_code(n)
            self.assertIsNone(code.violation(), f"n={n}")
            self.assertEqual(len(code.sequence), math.factorial(n))

    def test_three_symbols(self):
        code = star_transposition_code(3)
        self.assertEqual(code.labels(), ["123", "213", "312", "132", "231", "321"])
        self.assertTrue(all(p >= 1 for p in code.swap_positions()))

    def test_too_small(self):
        with self.assertRaises(PreconditionError):
            star_transposition_code(1)


class TestStarTranspositionSearch(unittest.TestCase):
    """The exhaustive Cayley-graph search used as a cross-check."""

    def test_search_agrees_on_validity(self):
        for n in (3, 4):
            code = star_transposition_search(n)
            self.assertIsNone(code.violation(), f"n={n}")
            self.assertEqual(sorted(code.sequence), sorted(star_transposition_code(n).sequence))

    def test_search_limit(self):
        with self.assertRaises(PreconditionError):
            star_transposition_search(6)

    def test_cayley_graph_is_regular(self):
        nodes, adjacency = star_graph_adjacency(4)
        self.assertEqual(len(nodes), 24)
        self.assertTrue(all(len(nbrs) == 3 for nbrs in adjacency))


class TestViolations(unittest.TestCase):
    """Broken listings are reported."""

    def test_wrong_length(self):
        self.assertIn("expected 6", PermutationCode(3, [(1, 2, 3)]).violation())

    def test_step_without_first_position(self):
        sequence = [(1, 2, 3), (1, 3, 2), (3, 1, 2), (2, 1, 3), (3, 2, 1), (2, 3, 1)]
        self.assertIsNotNone(PermutationCode(3, sequence).violation())

    def test_repeat(self):
        sequence = [(1, 2, 3)] * 6
        self.assertEqual(PermutationCode(3, sequence).violation(), "a permutation is repeated")


if __name__ == "__main__":
    unittest.main()
