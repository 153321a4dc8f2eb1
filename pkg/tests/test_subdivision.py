#!/usr/bin/env python3
"""
Subdivision Tests
-----------------
Tests for the subdivision ladder, seam selection and the subdivided-graph Gray codes.
"""

import os
import sys
import unittest

# Add parent directory to path to import from project root
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from modules.errors import PreconditionError
from modules.graphs import MultiGraph, SubdivisionSpec
from modules.graycodes import validate_code
from modules.subdivision import h3_seam, h4_seam, subdivided_h3_code, subdivided_h4_code, subdivision_ladder

DOUBLE_EDGE = MultiGraph(2, ((0, 1), (0, 1)))
SINGLE_LOOP = MultiGraph(1, ((0, 0),))


class TestLadder(unittest.TestCase):
    """Forest plus path attachments."""

    def test_double_edge(self):
        ladder = subdivision_ladder(DOUBLE_EDGE, SubdivisionSpec.uniform(DOUBLE_EDGE, 2), 2)
        self.assertEqual(ladder.forest, (0, 1, 2, 3))
        self.assertEqual(ladder.stage_count, 2)
        self.assertTrue(ladder.is_forest())
        step = ladder.steps[0]
        self.assertEqual((step.edge, step.x, step.y, step.path), (1, 0, 1, (4, 5)))
        self.assertEqual(ladder.step_distance(0), 3)
        self.assertEqual(ladder.stage(1).edge_count, 6)
        self.assertTrue(all(ladder.stage(1).degree(v) == 2 for v in range(6)))

    def test_long_edges_keep_a_pendant_path(self):
        ladder = subdivision_ladder(DOUBLE_EDGE, SubdivisionSpec((2, 4)), 2)
        step = ladder.steps[0]
        self.assertEqual(step.path, (6, 7))
        self.assertEqual(step.x, 5)
        self.assertEqual(len(ladder.forest), 6)

    def test_short_edges_rejected(self):
        with self.assertRaises(PreconditionError):
            subdivision_ladder(DOUBLE_EDGE, SubdivisionSpec((2, 2)), 3)

    def test_stage_out_of_range(self):
        ladder = subdivision_ladder(DOUBLE_EDGE, SubdivisionSpec.uniform(DOUBLE_EDGE, 2), 2)
        with self.assertRaises(PreconditionError):
            ladder.stage_vertices(2)


class TestSeams(unittest.TestCase):
    """Rotations that end a code on a step fixing x and y."""

    VECTORS = [(1, 2, 0), (1, 2, 1), (2, 1, 1)]

    def test_h4_seam(self):
        rotated, case = h4_seam(self.VECTORS, 0, 1)
        self.assertEqual(case, "case-2")
        self.assertEqual(rotated, [(2, 1, 1), (1, 2, 0), (1, 2, 1)])

    def test_h3_seam_prefers_equal(self):
        vectors = [(1, 2, 0), (1, 2, 1), (1, 1, 1), (1, 1, 2)]
        rotated, case = h3_seam(vectors, 0, 1)
        self.assertEqual(case, "equal")
        self.assertEqual(rotated[-2:], [(1, 1, 1), (1, 1, 2)])

    def test_no_seam(self):
        with self.assertRaises(PreconditionError):
            h4_seam([(1, 2), (2, 1)], 0, 1)
        with self.assertRaises(PreconditionError):
            h3_seam([(1, 2), (2, 1)], 0, 1)


class TestSubdividedCodes(unittest.TestCase):
    """The 4-color and 3-color pipelines on small multigraphs."""

    def test_h4_double_edge(self):
        code = subdivided_h4_code(DOUBLE_EDGE, SubdivisionSpec.uniform(DOUBLE_EDGE, 2))
        self.assertEqual((code.host.n, code.host.edge_count), (6, 6))
        self.assertEqual((code.k, code.j), (4, 1))
        self.assertEqual(len(code), 3 ** 6 + 3)
        self.assertEqual(len(code.notes["seams"]), 1)
        self.assertIsNone(validate_code(code))

    def test_h4_rejects_loops(self):
        with self.assertRaises(PreconditionError):
            subdivided_h4_code(SINGLE_LOOP, SubdivisionSpec((3,)))

    def test_h3_single_loop_uses_printed_listing(self):
        code = subdivided_h3_code(SINGLE_LOOP, SubdivisionSpec((3,)))
        self.assertEqual(code.notes["base"], "fixture")
        self.assertEqual(len(code), 18)

    def test_h3_single_edge(self):
        single = MultiGraph(2, ((0, 1),))
        code = subdivided_h3_code(single, SubdivisionSpec((3,)))
        self.assertEqual((code.k, code.j), (3, 2))
        self.assertEqual(len(code), 3 * 2 ** 4)

    def test_h3_double_edge(self):
        code = subdivided_h3_code(DOUBLE_EDGE, SubdivisionSpec.uniform(DOUBLE_EDGE, 3))
        self.assertEqual((code.host.n, code.host.edge_count), (8, 8))
        self.assertEqual((code.k, code.j), (3, 2))
        self.assertEqual(len(code), 2 ** 8 + 2)


if __name__ == "__main__":
    unittest.main()
