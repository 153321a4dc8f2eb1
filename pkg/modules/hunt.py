"""
Hunt Module

This module provides the counterexample search over small graphs: graphs come from the
networkx graph atlas or a graph6 file, each one is evaluated against a predicate on worker
threads, and findings carry the certificates needed to re-check them independently.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from tqdm import tqdm

from modules.colorings import Coloring, build_localized_graph
from modules.config import FINDING_SCHEMA, get_setting, validate_document
from modules.errors import BudgetExceeded, PreconditionError, UndecidedError
from modules.graphs import (
    MultiGraph, SimpleGraph, SubdivisionSpec, chromatic_number, degeneracy_order, format_multigraph,
    from_networkx, read_graph6, read_graph6_file, subdivide, write_graph6
)
from modules.graycodes import CyclicGrayCode, validate_code
from modules.solvers import compute_g, compute_h, hamiltonian_cycle, hamiltonicity_at

# Configure logger
logger = logging.getLogger('recolor.hunt')

PREDICATES = ("h-increase", "conjecture", "table")

# The graph atlas holds every graph on at most 7 vertices
ATLAS_LIMIT = 7

# Largest h allowed by the conjecture, per palette size
CONJECTURE_BOUNDS = {3: 2, 4: 1}


@dataclass
class HuntTask:
    """
    One hunt run.

    Attributes:
        source: "atlas:N" for all connected graphs on at most N vertices, or a graph6 file
        ks: Palette sizes to examine
        predicate: "h-increase", "conjecture" or "table"
        budget_secs: Time budget of each Hamiltonicity decision
        workers: Worker threads
        multigraphs: For the conjecture, also try each graph with one extra loop or one
            doubled edge
    """
    source: str
    ks: Tuple[int, ...] = (3, 4)
    predicate: str = "h-increase"
    budget_secs: Optional[float] = None
    workers: Optional[int] = None
    multigraphs: bool = True

    def __post_init__(self):
        if self.predicate not in PREDICATES:
            raise PreconditionError(f"unknown predicate {self.predicate!r}; choose from {', '.join(PREDICATES)}")
        if not self.ks or min(self.ks) < 1:
            raise PreconditionError(f"palette sizes must be positive (got {list(self.ks)})")
        if self.predicate == "conjecture" and not set(self.ks) & set(CONJECTURE_BOUNDS):
            raise PreconditionError(
                f"the conjecture bounds h_3 and h_4 only; include 3 or 4 in the palette sizes (got {list(self.ks)})")


@dataclass
class Finding:
    """A graph and palette size with the values and certificates that back the claim."""
    graph: SimpleGraph
    predicate: str
    k: int
    values: Dict[str, Any] = field(default_factory=dict)
    certificates: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        return {
            "graph": write_graph6(self.graph),
            "name": self.graph.display_name(),
            "predicate": self.predicate,
            "k": self.k,
            "values": self.values,
            "certificates": self.certificates,
        }


@dataclass
class GraphOutcome:
    """Findings and undecided palette sizes of one source graph."""
    graph: SimpleGraph
    findings: List[Finding] = field(default_factory=list)
    undecided: List[str] = field(default_factory=list)


def load_graphs(source: str) -> List[SimpleGraph]:
    """
    Read the graphs of a hunt source in a fixed order.

    Args:
        source: "atlas:N" (connected graphs on 1..N vertices, N <= 7) or a graph6 file path

    Returns:
        List[SimpleGraph]: The graphs in atlas or file order
    """
    if source.startswith("atlas:"):
        try:
            limit = int(source.split(":", 1)[1])
        except ValueError:
            raise PreconditionError(f"invalid atlas size in {source!r}")
        if not 1 <= limit <= ATLAS_LIMIT:
            raise PreconditionError(f"the graph atlas covers 1..{ATLAS_LIMIT} vertices (got {limit})")
        graphs = []
        for index, nx_graph in enumerate(nx.graph_atlas_g()):
            n = nx_graph.number_of_nodes()
            if 1 <= n <= limit and nx.is_connected(nx_graph):
                graphs.append(from_networkx(nx_graph, f"atlas-{index}"))
        return graphs
    try:
        return read_graph6_file(source)
    except OSError as e:
        raise PreconditionError(f"cannot read graph6 source {source}: {e}")


def _cycle_certificate(graph: SimpleGraph, k: int, j: int, time_budget: Optional[float]) -> List[str]:
    localized = build_localized_graph(graph, k, j)
    verdict = hamiltonian_cycle(localized.adjacency, time_budget)
    return [localized.nodes[i].label for i in verdict.cycle]


def _h_increase(graph: SimpleGraph, task: HuntTask, time_budget: Optional[float],
                outcome: GraphOutcome) -> None:
    chi = chromatic_number(graph)
    values: Dict[int, int] = {}

    def h(k: int) -> int:
        if k not in values:
            values[k] = compute_h(graph, k, time_budget)
        return values[k]

    for k in task.ks:
        if k < chi:
            continue
        try:
            low, high = h(k), h(k + 1)
        except (BudgetExceeded, UndecidedError) as e:
            outcome.undecided.append(f"k={k}: {e}")
            continue
        if low < high:
            outcome.findings.append(Finding(
                graph, "h-increase", k, {f"h_{k}": low, f"h_{k + 1}": high},
                {"cycle": _cycle_certificate(graph, k, low, time_budget)}))


def least_subdivision(multigraph: MultiGraph) -> Tuple[SimpleGraph, SubdivisionSpec]:
    """
    Subdivide every edge once and every loop twice, the least that leaves a simple graph.

    Returns:
        Tuple[SimpleGraph, SubdivisionSpec]: The host and the counts used
    """
    spec = SubdivisionSpec(tuple(2 if u == v else 1 for u, v in multigraph.edges))
    return subdivide(multigraph, spec), spec


def once_subdivided(graph: SimpleGraph) -> SimpleGraph:
    """The graph with every edge subdivided once."""
    host, _ = least_subdivision(MultiGraph(graph.n, tuple(graph.edges())))
    return SimpleGraph(host.n, host.adj, f"S({graph.display_name()})")


def conjecture_hosts(graph: SimpleGraph, multigraphs: bool = True) -> List[Tuple[SimpleGraph, str]]:
    """
    Hosts the conjecture predicate examines for one source graph.

    The graph itself is used when it has an edge; with multigraphs, so is every
    multigraph obtained by adding one loop at a vertex or one copy of an edge.

    Returns:
        List[Tuple[SimpleGraph, str]]: Each host with its multigraph in text form
    """
    edges = tuple(graph.edges())
    name = graph.display_name()
    variants: List[Tuple[str, Tuple[Tuple[int, int], ...]]] = []
    if edges:
        variants.append((name, edges))
    if multigraphs:
        variants.extend((f"{name}+loop@{v}", edges + ((v, v),)) for v in range(graph.n))
        variants.extend((f"{name}+{u}={v}", edges + ((u, v),)) for u, v in edges)
    hosts = []
    for label, variant in variants:
        multigraph = MultiGraph(graph.n, variant)
        host, spec = least_subdivision(multigraph)
        hosts.append((SimpleGraph(host.n, host.adj, f"S({label})"), format_multigraph(multigraph, spec)))
    return hosts


def _conjecture(graph: SimpleGraph, task: HuntTask, time_budget: Optional[float],
                outcome: GraphOutcome) -> None:
    ks = sorted(set(task.ks) & set(CONJECTURE_BOUNDS))
    for host, multigraph_text in conjecture_hosts(graph, task.multigraphs):
        for k in ks:
            limit = CONJECTURE_BOUNDS[k]
            try:
                value = compute_h(host, k, time_budget)
            except (BudgetExceeded, UndecidedError) as e:
                outcome.undecided.append(f"{host.display_name()} k={k}: {e}")
                continue
            logger.debug(f"{host.display_name()}: h_{k} = {value} (bound {limit})")
            if value > limit:
                outcome.findings.append(Finding(
                    host, "conjecture", k, {f"h_{k}": value, "bound": limit},
                    {"multigraph": multigraph_text}))


def _table(graph: SimpleGraph, task: HuntTask, time_budget: Optional[float],
           outcome: GraphOutcome) -> None:
    chi = chromatic_number(graph)
    d, _ = degeneracy_order(graph)
    for k in task.ks:
        if k < chi:
            continue
        try:
            g, h = compute_g(graph, k), compute_h(graph, k, time_budget)
        except (BudgetExceeded, UndecidedError) as e:
            outcome.undecided.append(f"k={k}: {e}")
            continue
        outcome.findings.append(Finding(graph, "table", k, {"n": graph.n, "d": d, "k": k, "g": g, "h": h}))


_EVALUATORS = {"h-increase": _h_increase, "conjecture": _conjecture, "table": _table}


def evaluate(graph: SimpleGraph, task: HuntTask) -> GraphOutcome:
    """
    Evaluate one graph against the task's predicate.

    Every finding is re-checked from its JSON document before it is kept; one that does
    not re-check is dropped and its instance counted as undecided.
    """
    time_budget = task.budget_secs or get_setting("budget_secs")
    outcome = GraphOutcome(graph)
    _EVALUATORS[task.predicate](graph, task, time_budget, outcome)
    confirmed = []
    for finding in outcome.findings:
        document = finding.to_json()
        ok, message = validate_document(document, FINDING_SCHEMA)
        if not ok:
            raise PreconditionError(f"finding for {graph.display_name()} does not match the schema: {message}")
        try:
            rechecked = recheck_finding(document, time_budget)
        except (BudgetExceeded, UndecidedError) as e:
            outcome.undecided.append(f"{finding.graph.display_name()} k={finding.k}: re-check undecided ({e})")
            continue
        if not rechecked:
            logger.error(f"{finding.graph.display_name()} k={finding.k}: {finding.predicate} finding failed its re-check")
            outcome.undecided.append(f"{finding.graph.display_name()} k={finding.k}: failed re-check")
            continue
        confirmed.append(finding)
    outcome.findings = confirmed
    for note in outcome.undecided:
        logger.warning(f"{graph.display_name()}: undecided ({note})")
    return outcome


def run_hunt(task: HuntTask, graphs: Optional[Sequence[SimpleGraph]] = None,
             progress: bool = True) -> Iterator[GraphOutcome]:
    """
    Evaluate every graph of the source on worker threads.

    Outcomes are yielded in input order whatever order the workers finish in.
    """
    graphs = list(graphs) if graphs is not None else load_graphs(task.source)
    workers = max(1, task.workers or get_setting("workers"))
    logger.info(f"Hunting {task.predicate} over {len(graphs)} graph(s), k in {list(task.ks)}, {workers} worker(s)")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        outcomes = pool.map(lambda graph: evaluate(graph, task), graphs)
        yield from tqdm(outcomes, total=len(graphs), desc="hunt", unit="graph",
                        disable=None if progress else True)


def recheck_finding(document: Dict[str, Any], time_budget: Optional[float] = None) -> bool:
    """
    Re-check a finding from its JSON document alone.

    An h-increase finding is confirmed when its cycle certificate validates as a Gray code
    at j = h_k and G^{h_k}_{k+1} is not Hamiltonian; conjecture and table rows are
    recomputed from the graph.
    """
    ok, message = validate_document(document, FINDING_SCHEMA)
    if not ok:
        logger.error(f"Malformed finding: {message}")
        return False
    graph, k, values = read_graph6(document["graph"]), document["k"], document.get("values", {})
    predicate = document["predicate"]
    if predicate == "h-increase":
        low = values[f"h_{k}"]
        cycle = [Coloring.from_label(label, k) for label in document.get("certificates", {}).get("cycle", [])]
        if validate_code(CyclicGrayCode(graph, k, low, cycle)) is not None:
            return False
        return not hamiltonicity_at(graph, k + 1, low, time_budget).is_hamiltonian
    if predicate == "conjecture":
        return compute_h(graph, k, time_budget) == values[f"h_{k}"] > values["bound"]
    return (compute_g(graph, k), compute_h(graph, k, time_budget)) == (values["g"], values["h"])
