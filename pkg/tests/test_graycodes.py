#!/usr/bin/env python3
"""
Gray Code Tests
---------------
Tests for the code validator, the multipartite constructions, block splicing,
vertex-by-vertex growth and the endpoint tables of short attachments.
"""

import os
import sys
import unittest
from unittest.mock import patch

import jsonschema

# Add parent directory to path to import from project root
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from modules.choosability import AttachmentContext
from modules.colorings import Coloring
from modules.config import CODE_SCHEMA
from modules.errors import ConstructionError, PreconditionError
from modules.graphs import chromatic_polynomial, complete, complete_multipartite, cycle, path, star
from modules.graycodes import (
    CASE_KINDS, CASE_TABLES, CyclicGrayCode, case_graph, case_table, degeneracy_code, extend_cycle,
    fixture_c4_h3, grow_code, multipartite_code_k, multipartite_code_kplus1, require_valid, search_code,
    validate_code
)
from modules.solvers import hamiltonian_endpoint_pairs


class TestValidator(unittest.TestCase):
    """validate_code on the printed 4-cycle listing and corrupted copies of it."""

    def setUp(self):
        self.code = fixture_c4_h3()

    def test_fixture_is_valid(self):
        self.assertEqual(len(self.code), 18)
        self.assertIsNone(validate_code(self.code))

    def test_fixture_is_not_a_code_at_j1(self):
        code = CyclicGrayCode(self.code.host, 3, 1, self.code.sequence)
        violation = validate_code(code)
        self.assertIsNotNone(violation)
        self.assertIn("not an edge of G^1_3", violation.reason)

    def test_repeated_entry(self):
        sequence = list(self.code.sequence)
        sequence[5] = sequence[0]
        self.assertIn("repeats entry 0", validate_code(CyclicGrayCode(cycle(4), 3, 2, sequence)).reason)

    def test_missing_entry(self):
        sequence = list(self.code.sequence)[:-1]
        violation = validate_code(CyclicGrayCode(cycle(4), 3, 2, sequence))
        self.assertIsNotNone(violation)

    def test_improper_entry(self):
        sequence = [Coloring((1, 1, 2, 3), 3)] + list(self.code.sequence)[1:]
        self.assertEqual(validate_code(CyclicGrayCode(cycle(4), 3, 2, sequence)).index, 0)

    def test_require_valid(self):
        broken = CyclicGrayCode(cycle(4), 3, 1, self.code.sequence, "fixture")
        with self.assertRaises(ConstructionError):
            require_valid(broken)

    def test_exports(self):
        jsonschema.validate(instance=self.code.to_json(), schema=CODE_SCHEMA)
        self.assertEqual(self.code.to_text().splitlines()[0], "1312")


class TestSearchCode(unittest.TestCase):
    """Codes found by exhaustive search."""

    def test_c5(self):
        code = search_code(cycle(5), 3, 2)
        self.assertEqual(len(code), 30)
        self.assertIsNone(validate_code(code))

    def test_not_hamiltonian(self):
        with self.assertRaises(ConstructionError):
            search_code(path(3), 3, 1)


class TestMultipartite(unittest.TestCase):
    """Codes of complete multipartite hosts with k and k + 1 colors."""

    def test_k_colors(self):
        for parts in ([1, 2], [1, 1, 1], [2, 2], [1, 2, 3]):
            code = multipartite_code_k(parts)
            self.assertEqual(code.j, min(parts) + max(parts))
            self.assertIsNone(validate_code(code), f"{parts}")

    def test_triangle_with_three_colors(self):
        code = multipartite_code_k([1, 1, 1])
        self.assertEqual(code.host, complete(3))
        self.assertEqual(len(code), 6)

    def test_bad_parts(self):
        with self.assertRaises(PreconditionError):
            multipartite_code_k([3])
        with self.assertRaises(PreconditionError):
            multipartite_code_k([0, 2])

    def test_k_plus_one_by_hypercube_splice(self):
        for parts, j in (([2, 2], 2), ([1, 1, 1], 1), ([3, 3], 1), ([1, 3], 1), ([1, 1, 3], 1)):
            with self.subTest(parts=parts):
                code = multipartite_code_kplus1(parts)
                self.assertEqual(code.j, j)
                self.assertEqual(code.notes["method"], "hypercube-splice")
                self.assertEqual(len(code), chromatic_polynomial(complete_multipartite(parts), len(parts) + 1))

    def test_k_plus_one_search_fallback(self):
        for parts in ([1, 2], [1, 1, 2], [1, 2, 2]):
            with self.subTest(parts=parts):
                code = multipartite_code_kplus1(parts)
                self.assertEqual(code.j, 2)
                self.assertEqual(code.notes["method"], "search")
                self.assertTrue("splice_violation" in code.notes or "splice_error" in code.notes)
                self.assertIsNone(validate_code(code))


class TestGrowth(unittest.TestCase):
    """Vertex-by-vertex growth and the degeneracy builder."""

    def test_grow_cycle(self):
        code = grow_code(cycle(5), range(5), 3, 2)
        self.assertEqual(len(code), 30)
        self.assertEqual(code.notes["order"], [0, 1, 2, 3, 4])

    def test_bad_order(self):
        with self.assertRaises(PreconditionError):
            grow_code(cycle(5), [0, 1, 2, 3], 3, 2)

    def test_degeneracy_code(self):
        code = degeneracy_code(path(3), 4)
        self.assertEqual(code.j, 1)
        self.assertEqual(len(code), 36)
        self.assertEqual(code.constructor, "degeneracy")

    def test_degeneracy_code_only_splices(self):
        for graph, k in ((path(3), 4), (star(3), 4), (cycle(5), 5), (complete(3), 5)):
            with self.subTest(graph=graph.display_name(), k=k):
                code = degeneracy_code(graph, k)
                self.assertEqual(code.notes["search_steps"], [])
                self.assertEqual(len(code), chromatic_polynomial(graph, k))
                self.assertIsNone(validate_code(code))

    def test_degeneracy_code_refuses_search(self):
        with patch("modules.graycodes.splice_blocks", return_value=None):
            with self.assertRaises(ConstructionError):
                degeneracy_code(path(2), 4)
            code = grow_code(path(2), [0, 1], 4, 1)
        self.assertEqual(code.notes["search_steps"], [1])

    def test_degeneracy_code_needs_enough_colors(self):
        with self.assertRaises(PreconditionError):
            degeneracy_code(cycle(4), 4)


class TestExtendCycle(unittest.TestCase):
    """Extension of a code of H' to a code of H."""

    def setUp(self):
        self.base = search_code(path(2), 3, 1)

    def test_loose_extension_of_an_edge_to_a_star(self):
        ctx = AttachmentContext(star(2), (2,), 3, 1)
        code = extend_cycle(ctx, self.base, "loose")
        self.assertEqual(code.j, 2)
        self.assertEqual(len(code), 12)
        self.assertIsNone(validate_code(code))

    def test_tight_extension_is_refused(self):
        ctx = AttachmentContext(path(3), (2,), 3, 1)
        with self.assertRaises(PreconditionError):
            extend_cycle(ctx, self.base, "tight")

    def test_palette_mismatch(self):
        ctx = AttachmentContext(path(3), (2,), 4, 1)
        with self.assertRaises(PreconditionError):
            extend_cycle(ctx, self.base)

    def test_unknown_mode(self):
        ctx = AttachmentContext(path(3), (2,), 3, 1)
        with self.assertRaises(PreconditionError):
            extend_cycle(ctx, self.base, "snug")


class TestCaseTables(unittest.TestCase):
    """The hard-coded endpoint tables against brute force."""

    def test_block_graphs_match(self):
        for (kind, pattern), table in CASE_TABLES.items():
            labels, edges = case_graph(kind, pattern)
            self.assertEqual(sorted(labels), table.nodes, f"{kind}/{pattern}")
            self.assertEqual(edges, {frozenset(edge) for edge in table.edges}, f"{kind}/{pattern}")

    def test_claimed_pairs_have_paths(self):
        for (kind, pattern), table in CASE_TABLES.items():
            labels, edges = case_graph(kind, pattern)
            index = {label: i for i, label in enumerate(labels)}
            adjacency = [[] for _ in labels]
            for edge in edges:
                a, b = (index[label] for label in edge)
                adjacency[a].append(b)
                adjacency[b].append(a)
            actual = {frozenset((labels[s], labels[t]))
                      for s, t in hamiltonian_endpoint_pairs([sorted(nbrs) for nbrs in adjacency])}
            self.assertLessEqual(table.claimed_pairs(), actual, f"{kind}/{pattern}")

    def test_kinds(self):
        self.assertEqual(set(CASE_KINDS), {"h4", "h3"})
        with self.assertRaises(PreconditionError):
            case_table("h5", "equal")
        with self.assertRaises(PreconditionError):
            case_graph("h4", "other")


if __name__ == "__main__":
    unittest.main()
