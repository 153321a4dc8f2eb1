#!/usr/bin/env python3
"""
Solver Tests
------------
Tests for Hamiltonicity search, g_k(H), h_k(H), the thresholds and parameter reports.
"""

import os
import sys
import unittest

import jsonschema

# Add parent directory to path to import from project root
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from modules.colorings import Coloring, build_localized_graph
from modules.config import REPORT_SCHEMA
from modules.errors import PreconditionError, UndecidedError
from modules.graphs import L_m, complete, cycle, disjoint_union, path, star
from modules.solvers import (
    DEGENERATE, HAMILTONIAN, NOT_HAMILTONIAN, analyze, complete_multipartite_above_k, component_summary,
    compute_g, compute_h, graycode_number_k0, hamiltonian_cycle, hamiltonian_endpoint_pairs, hamiltonian_path,
    is_connected_at, mixing_number_k1, reconfiguration_path
)


def ring(n):
    return [sorted(((i - 1) % n, (i + 1) % n)) for i in range(n)]


def line(n):
    return [[u for u in (i - 1, i + 1) if 0 <= u < n] for i in range(n)]


class TestHamiltonianSearch(unittest.TestCase):
    """The abstract Hamiltonicity solvers."""

    def test_ring(self):
        verdict = hamiltonian_cycle(ring(7))
        self.assertEqual(verdict.status, HAMILTONIAN)
        self.assertEqual(sorted(verdict.cycle), list(range(7)))

    def test_line_is_not_hamiltonian(self):
        self.assertEqual(hamiltonian_cycle(line(4)).status, NOT_HAMILTONIAN)

    def test_degenerate_conventions(self):
        self.assertEqual(hamiltonian_cycle([[]]).status, DEGENERATE)
        self.assertEqual(hamiltonian_cycle([[1], [0]]).cycle, [0, 1])
        self.assertFalse(hamiltonian_cycle([[], []]).is_hamiltonian)
        self.assertFalse(hamiltonian_cycle([]).is_hamiltonian)

    def test_petersen_graph_is_not_hamiltonian(self):
        outer = [[(i + 1) % 5, (i - 1) % 5, i + 5] for i in range(5)]
        inner = [[5 + (i + 2) % 5, 5 + (i - 2) % 5, i] for i in range(5)]
        adjacency = [sorted(nbrs) for nbrs in outer + inner]
        self.assertEqual(hamiltonian_cycle(adjacency).status, NOT_HAMILTONIAN)

    def test_expansion_budget(self):
        complete4 = [[b for b in range(4) if b != a] for a in range(4)]
        with self.assertRaises(UndecidedError):
            hamiltonian_cycle(complete4, node_budget=1)

    def test_paths(self):
        self.assertEqual(hamiltonian_path(line(3), 0, 2), [0, 1, 2])
        self.assertIsNone(hamiltonian_path(line(3), 1))
        self.assertIsNone(hamiltonian_path(line(3), 0, 1))
        self.assertEqual(hamiltonian_path([[]], 0), [0])

    def test_endpoint_pairs(self):
        self.assertEqual(hamiltonian_endpoint_pairs(ring(4)), {(0, 1), (1, 2), (2, 3), (0, 3)})
        self.assertEqual(hamiltonian_endpoint_pairs(line(3)), {(0, 2)})
        self.assertEqual(hamiltonian_endpoint_pairs([[]]), {(0, 0)})
        with self.assertRaises(PreconditionError):
            hamiltonian_endpoint_pairs(ring(17))


class TestParameters(unittest.TestCase):
    """g_k(H) and h_k(H) on small hosts."""

    def test_cycles(self):
        self.assertEqual((compute_g(cycle(5), 3), compute_h(cycle(5), 3)), (2, 2))
        self.assertEqual((compute_g(cycle(4), 3), compute_h(cycle(4), 3)), (1, 2))

    def test_stars(self):
        self.assertEqual((compute_g(star(2), 3), compute_h(star(2), 3)), (1, 2))
        self.assertEqual(compute_h(star(2), 4), 1)

    def test_complete_graphs(self):
        self.assertEqual((compute_g(complete(3), 3), compute_h(complete(3), 3)), (2, 2))
        self.assertEqual((compute_g(complete(3), 4), compute_h(complete(3), 4)), (1, 1))

    def test_below_chromatic_number(self):
        with self.assertRaises(PreconditionError):
            compute_g(cycle(5), 2)

    def test_lm(self):
        self.assertFalse(is_connected_at(L_m(3), 3, 1))
        self.assertTrue(is_connected_at(L_m(3), 4, 1))

    def test_multipartite_above_k(self):
        self.assertTrue(complete_multipartite_above_k([1, 2], 3))
        with self.assertRaises(PreconditionError):
            complete_multipartite_above_k([1, 2], 2)

    def test_thresholds(self):
        self.assertEqual(mixing_number_k1(path(2), workers=2), 3)
        self.assertEqual(graycode_number_k0(path(2), workers=2), 3)
        self.assertEqual(mixing_number_k1(cycle(4), workers=1), 3)


class TestReports(unittest.TestCase):
    """Parameter reports, reconfiguration paths and component summaries."""

    def test_cycle_report(self):
        report = analyze(cycle(5), 3)
        self.assertEqual((report.g, report.h), (2, 2))
        self.assertEqual([row.j for row in report.rows], [1, 2])
        self.assertFalse(report.rows[0].connected)
        self.assertEqual(len(report.rows[1].certificate["cycle"]), 30)
        jsonschema.validate(instance=report.to_json(), schema=REPORT_SCHEMA)

    def test_single_row(self):
        report = analyze(path(3), 3, j=1)
        row = report.rows[0]
        self.assertTrue(row.connected)
        self.assertFalse(row.hamiltonian)
        self.assertEqual(row.status, NOT_HAMILTONIAN)
        self.assertEqual(report.g, 1)
        self.assertIsNone(report.h)

    def test_g_only(self):
        report = analyze(cycle(5), 3, want_h=False)
        self.assertEqual(report.g, 2)
        self.assertTrue(all(row.hamiltonian is None for row in report.rows))

    def test_spanning_tree_certificate(self):
        report = analyze(path(2), 3, j=1)
        parents = report.rows[0].certificate["spanning_tree_parent"]
        self.assertEqual(parents[0], -1)
        self.assertTrue(all(p is not None for p in parents))

    def test_reconfiguration_path(self):
        route = reconfiguration_path(path(2), 3, 1, Coloring((1, 2), 3), Coloring((2, 1), 3))
        self.assertEqual(len(route), 4)
        self.assertEqual((route[0].label, route[-1].label), ("12", "21"))

    def test_reconfiguration_path_between_components(self):
        localized = build_localized_graph(L_m(3), 3, 1)
        first, second = localized.components()[:2]
        route = reconfiguration_path(L_m(3), 3, 1, localized.nodes[first[0]], localized.nodes[second[0]])
        self.assertIsNone(route)

    def test_component_summary(self):
        summary = component_summary(disjoint_union(path(2), path(1)), 3)
        self.assertEqual([c["vertices"] for c in summary["components"]], [[0, 1], [2]])
        self.assertEqual(summary["g"], summary["g_max"])
        self.assertLessEqual(summary["h"], summary["h_max"])


if __name__ == "__main__":
    unittest.main()
