#!/usr/bin/env python3
"""
Hunt Tests
----------
Tests for graph sources, hunt predicates, finding documents and re-checking.
"""

import os
import sys
import tempfile
import unittest
from unittest.mock import patch

# Add parent directory to path to import from project root
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from modules.errors import PreconditionError, UndecidedError
from modules.graphs import cycle, path, read_graph6, star, write_graph6
from modules.graycodes import search_code
from modules.hunt import (
    HuntTask, conjecture_hosts, evaluate, load_graphs, once_subdivided, recheck_finding, run_hunt
)


class TestSources(unittest.TestCase):
    """Graph sources."""

    def test_atlas(self):
        graphs = load_graphs("atlas:3")
        self.assertEqual([g.display_name() for g in graphs], ["atlas-1", "atlas-3", "atlas-6", "atlas-7"])
        self.assertEqual([g.edge_count for g in graphs], [0, 1, 2, 3])

    def test_atlas_limits(self):
        with self.assertRaises(PreconditionError):
            load_graphs("atlas:8")
        with self.assertRaises(PreconditionError):
            load_graphs("atlas:x")

    def test_graph6_file(self):
        with tempfile.NamedTemporaryFile("w", suffix=".g6", delete=False) as f:
            f.write(write_graph6(cycle(5)) + "\n" + write_graph6(star(2)) + "\n")
            name = f.name
        try:
            self.assertEqual(load_graphs(name), [cycle(5), star(2)])
        finally:
            os.unlink(name)

    def test_missing_file(self):
        with self.assertRaises(PreconditionError):
            load_graphs("/nonexistent/graphs.g6")


class TestTask(unittest.TestCase):
    """HuntTask validation."""

    def test_unknown_predicate(self):
        with self.assertRaises(PreconditionError):
            HuntTask("atlas:3", predicate="everything")

    def test_palette_sizes(self):
        with self.assertRaises(PreconditionError):
            HuntTask("atlas:3", ks=())
        with self.assertRaises(PreconditionError):
            HuntTask("atlas:3", ks=(0, 3))

    def test_conjecture_needs_its_palette_sizes(self):
        with self.assertRaises(PreconditionError):
            HuntTask("atlas:3", ks=(5,), predicate="conjecture")
        self.assertEqual(HuntTask("atlas:3", ks=(4, 5), predicate="conjecture").ks, (4, 5))


class TestPredicates(unittest.TestCase):
    """Evaluation of single graphs."""

    def test_even_star_is_a_decrease(self):
        outcome = evaluate(star(2), HuntTask("atlas:3", ks=(3,)))
        self.assertEqual(outcome.findings, [])
        self.assertEqual(outcome.undecided, [])

    def test_below_chromatic_number_is_skipped(self):
        outcome = evaluate(cycle(5), HuntTask("atlas:5", ks=(2,), predicate="table"))
        self.assertEqual(outcome.findings, [])

    def test_table_rows(self):
        outcome = evaluate(cycle(5), HuntTask("atlas:5", ks=(3,), predicate="table"))
        self.assertEqual(outcome.findings[0].values, {"n": 5, "d": 2, "k": 3, "g": 2, "h": 2})

    def test_conjecture_holds_on_small_graphs(self):
        for graph in (path(2), star(2)):
            outcome = evaluate(graph, HuntTask("atlas:3", predicate="conjecture", multigraphs=False))
            self.assertEqual(outcome.findings, [])

    def test_once_subdivided(self):
        host = once_subdivided(path(2))
        self.assertEqual((host.n, host.edge_count), (3, 2))
        self.assertEqual(host.display_name(), "S(P2)")

    def test_conjecture_hosts_add_loops_and_parallel_edges(self):
        hosts = conjecture_hosts(path(2))
        self.assertEqual([h.display_name() for h, _ in hosts],
                         ["S(P2)", "S(P2+loop@0)", "S(P2+loop@1)", "S(P2+0=1)"])
        loop_host, loop_text = hosts[1]
        self.assertEqual((loop_host.n, loop_host.edge_count), (5, 5))
        self.assertEqual(loop_text, "2\n0 1 1\n0 0 2\n")
        doubled = hosts[3][0]
        self.assertEqual((doubled.n, doubled.edge_count), (4, 4))
        self.assertTrue(all(doubled.degree(v) == 2 for v in range(4)))
        self.assertEqual(len(conjecture_hosts(path(2), multigraphs=False)), 1)

    def test_single_vertex_with_a_loop(self):
        (host, text), = conjecture_hosts(path(1))
        self.assertEqual(host, cycle(3))
        self.assertEqual(text, "1\n0 0 2\n")
        self.assertEqual(conjecture_hosts(path(1), multigraphs=False), [])

    def test_conjecture_examines_loop_hosts(self):
        calls = []

        def fake_h(graph, k, time_budget=None):
            calls.append((graph.display_name(), k))
            return 1

        with patch("modules.hunt.compute_h", side_effect=fake_h):
            outcome = evaluate(path(1), HuntTask("atlas:1", ks=(3, 5), predicate="conjecture"))
        self.assertEqual(calls, [("S(P1+loop@0)", 3)])
        self.assertEqual(outcome.findings, [])

    def test_conjecture_finding_carries_the_multigraph(self):
        with patch("modules.hunt.compute_h", return_value=3):
            outcome = evaluate(path(1), HuntTask("atlas:1", ks=(3,), predicate="conjecture"))
        (finding,) = outcome.findings
        document = finding.to_json()
        self.assertEqual(document["values"], {"h_3": 3, "bound": 2})
        self.assertEqual(document["certificates"], {"multigraph": "1\n0 0 2\n"})
        self.assertEqual(read_graph6(document["graph"]), cycle(3))

    def test_undecided_is_recorded(self):
        with patch("modules.hunt.compute_h", side_effect=UndecidedError("out of time")):
            outcome = evaluate(path(2), HuntTask("atlas:2", ks=(3,), predicate="table"))
        self.assertEqual(outcome.findings, [])
        self.assertEqual(len(outcome.undecided), 1)
        self.assertIn("out of time", outcome.undecided[0])


class TestRunHunt(unittest.TestCase):
    """Parallel runs and finding documents."""

    def test_outcomes_follow_input_order(self):
        graphs = [cycle(5), path(2), star(2), cycle(4)]
        task = HuntTask("atlas:5", ks=(3,), predicate="table", workers=3)
        outcomes = list(run_hunt(task, graphs, progress=False))
        self.assertEqual([o.graph for o in outcomes], graphs)

    def test_table_finding_rechecks(self):
        task = HuntTask("atlas:2", ks=(3,), predicate="table", workers=1)
        (outcome,) = run_hunt(task, [path(2)], progress=False)
        document = outcome.findings[0].to_json()
        self.assertEqual(document["graph"], write_graph6(path(2)))
        self.assertTrue(recheck_finding(document))
        document["values"]["h"] = 2
        self.assertFalse(recheck_finding(document))

    def test_every_emitted_finding_rechecks(self):
        task = HuntTask("atlas:3", ks=(3,), predicate="table", workers=2)
        documents = [f.to_json() for outcome in run_hunt(task, progress=False) for f in outcome.findings]
        self.assertEqual(len(documents), 4)
        for document in documents:
            self.assertTrue(recheck_finding(document))

    def test_finding_that_fails_its_recheck_is_withheld(self):
        with patch("modules.hunt.recheck_finding", return_value=False):
            outcome = evaluate(path(2), HuntTask("atlas:2", ks=(3,), predicate="table"))
        self.assertEqual(outcome.findings, [])
        self.assertEqual(len(outcome.undecided), 1)
        self.assertIn("failed re-check", outcome.undecided[0])

    def test_undecided_recheck_is_counted(self):
        with patch("modules.hunt.recheck_finding", side_effect=UndecidedError("out of time")):
            outcome = evaluate(path(2), HuntTask("atlas:2", ks=(3,), predicate="table"))
        self.assertEqual(outcome.findings, [])
        self.assertIn("re-check undecided", outcome.undecided[0])

    def test_h_increase_claim_is_rejected_when_false(self):
        code = search_code(path(2), 3, 1)
        document = {
            "graph": write_graph6(path(2)),
            "predicate": "h-increase",
            "k": 3,
            "values": {"h_3": 1, "h_4": 2},
            "certificates": {"cycle": code.labels()},
        }
        self.assertFalse(recheck_finding(document))

    def test_malformed_finding(self):
        self.assertFalse(recheck_finding({"graph": "A_", "predicate": "other", "k": 3}))


if __name__ == "__main__":
    unittest.main()
