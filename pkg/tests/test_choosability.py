#!/usr/bin/env python3
"""
Choosability Tests
------------------
Tests for attachment contexts, size functions, list coloring and the subgraph bounds.
"""

import os
import sys
import unittest

# Add parent directory to path to import from project root
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from modules.choosability import (
    AttachmentContext, ListAssignment, attachment_lists, check_g_subgraph, check_h_subgraph,
    degree_functions, extension_pair, extensions, find_list_coloring, is_f_choosable, size_function
)
from modules.errors import PreconditionError, UnsupportedError
from modules.graphs import complete, cycle, path


class TestAttachmentContext(unittest.TestCase):
    """Validation of the host split."""

    def test_valid_split(self):
        ctx = AttachmentContext(path(3), (2,), 3, 1)
        self.assertEqual(ctx.base_vertices, [0, 1])
        self.assertEqual(ctx.base_graph(), path(2))
        self.assertEqual(ctx.attachment_graph().n, 1)

    def test_empty_attachment(self):
        with self.assertRaises(PreconditionError):
            AttachmentContext(path(3), (), 3, 1)

    def test_attachment_larger_than_j(self):
        with self.assertRaises(PreconditionError):
            AttachmentContext(path(3), (1, 2), 3, 1)

    def test_disconnected_attachment(self):
        with self.assertRaises(PreconditionError):
            AttachmentContext(path(3), (0, 2), 3, 2)

    def test_vertex_outside_host(self):
        with self.assertRaises(PreconditionError):
            AttachmentContext(path(3), (5,), 3, 1)


class TestSizeFunctions(unittest.TestCase):
    """d', d^F and the five size functions on the pendant vertex of P3."""

    def setUp(self):
        self.ctx = AttachmentContext(path(3), (2,), 3, 1)

    def test_degree_functions(self):
        d_prime, d_f = degree_functions(self.ctx, [1])
        self.assertEqual(d_prime, {2: 1})
        self.assertEqual(d_f, {2: 1})
        self.assertEqual(degree_functions(self.ctx, [0])[1], {2: 0})

    def test_f_outside_base(self):
        with self.assertRaises(PreconditionError):
            degree_functions(self.ctx, [2])

    def test_variants(self):
        self.assertEqual(size_function(self.ctx, "base").values, (2,))
        self.assertEqual(size_function(self.ctx, "f").values, (1,))
        self.assertEqual(size_function(self.ctx, "fF", F=[1]).values, (1,))
        self.assertEqual(size_function(self.ctx, "fF", F=[0]).values, (2,))
        self.assertEqual(size_function(self.ctx, "f_u", u=2).values, (0,))
        self.assertEqual(size_function(self.ctx, "fF_u", F=[0], u=2).as_dict(), {2: 1})

    def test_missing_arguments(self):
        with self.assertRaises(PreconditionError):
            size_function(self.ctx, "fF")
        with self.assertRaises(PreconditionError):
            size_function(self.ctx, "f_u")
        with self.assertRaises(PreconditionError):
            size_function(self.ctx, "f_u", u=0)
        with self.assertRaises(PreconditionError):
            size_function(self.ctx, "g")


class TestChoosability(unittest.TestCase):
    """Exhaustive f-choosability and list coloring."""

    def test_edge(self):
        self.assertFalse(is_f_choosable(path(2), (1, 1)))
        self.assertTrue(is_f_choosable(path(2), (1, 2)))
        self.assertTrue(is_f_choosable(path(2), (2, 2)))
        self.assertFalse(is_f_choosable(path(2), (0, 3)))

    def test_cycles(self):
        self.assertTrue(is_f_choosable(cycle(4), (2, 2, 2, 2)))
        self.assertFalse(is_f_choosable(cycle(5), (2, 2, 2, 2, 2)))
        self.assertTrue(is_f_choosable(cycle(5), (3, 3, 3, 3, 3)))

    def test_triangle(self):
        self.assertFalse(is_f_choosable(complete(3), (2, 2, 2)))
        self.assertTrue(is_f_choosable(complete(3), (1, 2, 3)))

    def test_size_mismatch(self):
        with self.assertRaises(PreconditionError):
            is_f_choosable(path(2), (2,))

    def test_too_many_vertices(self):
        with self.assertRaises(UnsupportedError):
            is_f_choosable(path(7), (3,) * 7)

    def test_find_list_coloring(self):
        coloring = find_list_coloring(path(2), ListAssignment(((1,), (1, 2))))
        self.assertEqual(coloring.colors, (1, 2))
        self.assertIsNone(find_list_coloring(path(2), ListAssignment(((1,), (1,)))))


class TestSubgraphBounds(unittest.TestCase):
    """Bounds on g_k and h_k of P3 from its subgraph P2."""

    def test_g_bound_is_tight(self):
        result = check_g_subgraph(path(3), [2], 3, 1)
        self.assertEqual((result.bound, result.rule), (1, "tight"))

    def test_h_bound_falls_back_to_loose(self):
        result = check_h_subgraph(path(3), [2], 3, 1)
        self.assertEqual((result.bound, result.rule), (2, "loose"))
        self.assertEqual(result.F, (1,))
        self.assertEqual(result.failing.values, (0,))


class TestExtensions(unittest.TestCase):
    """Colorings of the attachment that extend colorings of the base."""

    def setUp(self):
        self.ctx = AttachmentContext(path(3), (2,), 3, 1)

    def test_extensions(self):
        self.assertEqual(extensions(self.ctx, [1, 2, 0]), [(1, 2, 1), (1, 2, 3)])

    def test_attachment_lists(self):
        self.assertEqual(attachment_lists(self.ctx, [1, 2, 0]), {2: [1, 3]})
        self.assertEqual(attachment_lists(self.ctx, [1, 2, 0], [1, 3, 0]), {2: [1]})

    def test_extension_pair(self):
        self.assertEqual(extension_pair(self.ctx, [1, 2, 0], [3, 2, 0]), ((1,), (3,)))
        self.assertIsNone(extension_pair(self.ctx, [1, 2, 0], [1, 3, 0]))


if __name__ == "__main__":
    unittest.main()
