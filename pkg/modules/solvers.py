"""
Solvers Module

This module provides the exact decision procedures: Hamiltonicity search over coloring
graphs, the color mixing number g_k(H), the Gray code number h_k(H), the mixing and Gray
code thresholds k1(H) and k0(H), shortest reconfiguration paths, and per-j parameter
reports with certificates.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from modules.colorings import Coloring, LocalizedColoringGraph, build_localized_graph
from modules.config import get_setting
from modules.errors import ConstructionError, PreconditionError, UndecidedError
from modules.graphs import (
    SimpleGraph, chromatic_number, complete_multipartite, components, degeneracy_order, induced_subgraph
)

# Configure logger
logger = logging.getLogger('recolor.solvers')

HAMILTONIAN = "hamiltonian"
NOT_HAMILTONIAN = "not-hamiltonian"
DEGENERATE = "degenerate-convention"

# Full connectivity pruning on every step up to this many nodes, every 16 steps above
CONNECTIVITY_EVERY_STEP = 512
# networkx prechecks (articulation points, bipartite balance) up to this many nodes
NX_PRECHECK_LIMIT = 100_000
# Exact endpoint-pair tables by subset dynamic programming up to this many nodes
ENDPOINT_DP_LIMIT = 16


@dataclass
class HamiltonicityVerdict:
    """
    Outcome of a Hamiltonicity decision.

    Attributes:
        status: "hamiltonian", "not-hamiltonian" or "degenerate-convention"
        cycle: Node sequence of a Hamiltonian cycle, when one exists
    """
    status: str
    cycle: Optional[List[int]] = None

    @property
    def is_hamiltonian(self) -> bool:
        return self.status != NOT_HAMILTONIAN


def _nx_graph(adjacency: Sequence[Sequence[int]]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(adjacency)))
    graph.add_edges_from((a, b) for a, nbrs in enumerate(adjacency) for b in nbrs if a < b)
    return graph


def _connected_within(adjacency: Sequence[Sequence[int]], visited: bytearray, remaining: int) -> bool:
    """True if the unvisited nodes induce a connected subgraph."""
    if remaining <= 1:
        return True
    start = visited.find(0)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for a in frontier:
            for b in adjacency[a]:
                if not visited[b] and b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return len(seen) == remaining


def _precheck(adjacency: Sequence[Sequence[int]]) -> bool:
    """Cheap necessary conditions; False means certainly not Hamiltonian."""
    count = len(adjacency)
    if any(len(nbrs) < 2 for nbrs in adjacency):
        return False
    if count > NX_PRECHECK_LIMIT:
        return True
    graph = _nx_graph(adjacency)
    if not nx.is_connected(graph):
        return False
    if any(True for _ in nx.articulation_points(graph)):
        return False
    if nx.is_bipartite(graph):
        left, right = nx.bipartite.sets(graph)
        if len(left) != len(right):
            return False
    return True


def hamiltonian_cycle(adjacency: Sequence[Sequence[int]], time_budget: Optional[float] = None,
                      node_budget: Optional[int] = None) -> HamiltonicityVerdict:
    """
    Decide Hamiltonicity of an abstract graph given by sorted neighbor lists.

    One node, or two adjacent nodes, count as Hamiltonian under the degenerate convention.
    The search starts at node 0 and extends toward the lowest-index unvisited neighbor,
    with forced moves, local degree pruning and connectivity pruning of the unvisited region.

    Args:
        adjacency: Neighbor lists
        time_budget: Seconds before giving up (defaults to budget_secs)
        node_budget: Maximum search expansions (defaults to hamilton_expansions, unbounded if unset)

    Returns:
        HamiltonicityVerdict: The verdict with a cycle certificate when Hamiltonian

    Raises:
        UndecidedError: When a budget runs out before a verdict
    """
    count = len(adjacency)
    if count == 0:
        return HamiltonicityVerdict(NOT_HAMILTONIAN)
    if count == 1:
        return HamiltonicityVerdict(DEGENERATE, [0])
    if count == 2:
        if 1 in adjacency[0]:
            return HamiltonicityVerdict(DEGENERATE, [0, 1])
        return HamiltonicityVerdict(NOT_HAMILTONIAN)
    if not _precheck(adjacency):
        return HamiltonicityVerdict(NOT_HAMILTONIAN)

    time_budget = time_budget if time_budget is not None else get_setting("budget_secs")
    node_budget = node_budget if node_budget is not None else get_setting("hamilton_expansions")
    started = time.monotonic()

    start_adj = bytearray(count)
    for b in adjacency[0]:
        start_adj[b] = 1
    visited = bytearray(count)
    free_deg = [len(nbrs) for nbrs in adjacency]
    every = 1 if count <= CONNECTIVITY_EVERY_STEP else 16

    def visit(node: int) -> None:
        visited[node] = 1
        for b in adjacency[node]:
            free_deg[b] -= 1

    def unvisit(node: int) -> None:
        visited[node] = 0
        for b in adjacency[node]:
            free_deg[b] += 1

    def dead_end(node: int, previous: int, remaining: int, step: int) -> bool:
        if remaining == 0:
            return False
        for w in adjacency[node]:
            if not visited[w] and free_deg[w] + 1 + start_adj[w] < 2:
                return True
        if previous != 0:
            for w in adjacency[previous]:
                if not visited[w]:
                    near = 1 if node in adjacency[w] else 0
                    if free_deg[w] + near + start_adj[w] < 2:
                        return True
        if free_deg[0] == 0:
            return True
        if step % every == 0 and not _connected_within(adjacency, visited, remaining):
            return True
        return False

    def candidates(node: int, remaining: int) -> List[int]:
        options = [w for w in adjacency[node] if not visited[w]]
        if node == 0 or remaining <= 1:
            return options
        forced = [w for w in options if free_deg[w] + start_adj[w] + 1 == 2]
        if len(forced) > 1:
            return []
        return forced or options

    path = [0]
    visit(0)
    frames = [iter(candidates(0, count - 1))]
    expansions = 0
    while frames:
        expansions += 1
        if expansions % 1024 == 0 and time.monotonic() - started > time_budget:
            raise UndecidedError(f"Hamiltonicity search exceeded {time_budget}s on {count} nodes",
                                 elapsed=time.monotonic() - started, expansions=expansions)
        if node_budget is not None and expansions > node_budget:
            raise UndecidedError(f"Hamiltonicity search exceeded {node_budget} expansions on {count} nodes",
                                 elapsed=time.monotonic() - started, expansions=expansions)

        nxt = next(frames[-1], None)
        if nxt is None:
            frames.pop()
            if len(path) > 1:
                unvisit(path.pop())
            continue

        previous = path[-1]
        path.append(nxt)
        visit(nxt)
        remaining = count - len(path)
        if remaining == 0:
            if start_adj[nxt]:
                logger.debug(f"Hamiltonian cycle found on {count} nodes after {expansions} expansions")
                return HamiltonicityVerdict(HAMILTONIAN, path[:])
            unvisit(path.pop())
            continue
        if dead_end(nxt, previous, remaining, expansions):
            unvisit(path.pop())
            continue
        frames.append(iter(candidates(nxt, remaining)))

    return HamiltonicityVerdict(NOT_HAMILTONIAN)


def hamiltonian_path(adjacency: Sequence[Sequence[int]], start: int, end: Optional[int] = None,
                     node_budget: Optional[int] = None) -> Optional[List[int]]:
    """
    Exhaustive search for a Hamiltonian path from start (to end, when given).

    Returns:
        Optional[List[int]]: The path, or None if none exists
    """
    count = len(adjacency)
    if count == 0:
        return None
    if count == 1:
        return [start] if end is None or end == start else None
    if end == start:
        return None

    visited = bytearray(count)
    visited[start] = 1
    path = [start]
    frames = [iter(adjacency[start])]
    expansions = 0
    while frames:
        expansions += 1
        if node_budget is not None and expansions > node_budget:
            raise UndecidedError(f"Hamiltonian path search exceeded {node_budget} expansions")
        nxt = next(frames[-1], None)
        if nxt is None:
            frames.pop()
            if len(path) > 1:
                visited[path.pop()] = 0
            continue
        if visited[nxt]:
            continue
        remaining = count - len(path) - 1
        if end is not None and nxt == end and remaining > 0:
            continue
        path.append(nxt)
        visited[nxt] = 1
        if remaining == 0:
            return path[:]
        if not _connected_within(adjacency, visited, remaining):
            visited[path.pop()] = 0
            continue
        frames.append(iter(adjacency[nxt]))
    return None


def hamiltonian_endpoint_pairs(adjacency: Sequence[Sequence[int]]) -> set:
    """
    All unordered pairs {s, t} joined by a Hamiltonian path, by subset dynamic programming.

    A single node yields the pair (0, 0).
    """
    count = len(adjacency)
    if count == 0:
        return set()
    if count == 1:
        return {(0, 0)}
    if count > ENDPOINT_DP_LIMIT:
        raise PreconditionError(f"endpoint tables are limited to {ENDPOINT_DP_LIMIT} nodes (got {count})")
    nbr_mask = [0] * count
    for a, nbrs in enumerate(adjacency):
        for b in nbrs:
            nbr_mask[a] |= 1 << b
    full = (1 << count) - 1
    pairs = set()
    for s in range(count):
        reach = {1 << s: 1 << s}
        for mask in range(1, full + 1):
            ends = reach.get(mask)
            if not ends or not (mask >> s) & 1:
                continue
            e = ends
            while e:
                low = e & -e
                v = low.bit_length() - 1
                e ^= low
                step = nbr_mask[v] & ~mask
                while step:
                    bit = step & -step
                    step ^= bit
                    grown = mask | bit
                    reach[grown] = reach.get(grown, 0) | bit
        e = reach.get(full, 0)
        while e:
            low = e & -e
            t = low.bit_length() - 1
            e ^= low
            if t != s:
                pairs.add((min(s, t), max(s, t)))
    return pairs


def _require_colorable(graph: SimpleGraph, k: int) -> None:
    if graph.n == 0:
        raise PreconditionError("the host graph must have at least one vertex")
    chi = chromatic_number(graph)
    if k < chi:
        raise PreconditionError(f"k={k} is below the chromatic number {chi} of {graph.display_name()}")


def is_connected_at(graph: SimpleGraph, k: int, j: int) -> bool:
    return build_localized_graph(graph, k, j).is_connected()


def hamiltonicity_at(graph: SimpleGraph, k: int, j: int,
                     time_budget: Optional[float] = None) -> HamiltonicityVerdict:
    return hamiltonian_cycle(build_localized_graph(graph, k, j).adjacency, time_budget)


def compute_g(graph: SimpleGraph, k: int) -> int:
    """
    The color mixing number g_k(H): least j with G^j_k(H) connected.

    Raises:
        PreconditionError: When k is below the chromatic number
    """
    _require_colorable(graph, k)
    for j in range(1, graph.n + 1):
        if is_connected_at(graph, k, j):
            logger.debug(f"g_{k}({graph.display_name()}) = {j}")
            return j
    raise ConstructionError(f"G^n_{k}({graph.display_name()}) is not connected")


def compute_h(graph: SimpleGraph, k: int, time_budget: Optional[float] = None) -> int:
    """
    The color Gray code number h_k(H): least j with G^j_k(H) Hamiltonian.

    Raises:
        PreconditionError: When k is below the chromatic number
        UndecidedError: When a Hamiltonicity decision runs out of budget
    """
    start = compute_g(graph, k)
    for j in range(start, graph.n + 1):
        if hamiltonicity_at(graph, k, j, time_budget).is_hamiltonian:
            logger.debug(f"h_{k}({graph.display_name()}) = {j}")
            return j
    raise ConstructionError(f"G^n_{k}({graph.display_name()}) is not Hamiltonian")


@dataclass
class ReportRow:
    """Per-j line of a parameter report."""
    j: int
    connected: bool
    hamiltonian: Optional[bool] = None
    status: Optional[str] = None
    certificate: Optional[Dict[str, Any]] = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "j": self.j,
            "connected": self.connected,
            "hamiltonian": self.hamiltonian,
            "status": self.status,
            "certificate": self.certificate,
        }


@dataclass
class ParameterReport:
    """
    g_k(H), h_k(H) and the per-j table behind them.

    Attributes:
        graph: Host graph
        k: Palette size
        g: Mixing number, when decided within the scanned range
        h: Gray code number, when decided
        rows: Per-j connectivity and Hamiltonicity with certificates
        undecided: True if some Hamiltonicity decision ran out of budget
    """
    graph: SimpleGraph
    k: int
    g: Optional[int] = None
    h: Optional[int] = None
    rows: List[ReportRow] = field(default_factory=list)
    undecided: bool = False

    def to_json(self) -> Dict[str, Any]:
        return {
            "graph": self.graph.display_name(),
            "n": self.graph.n,
            "k": self.k,
            "g": self.g,
            "h": self.h,
            "undecided": self.undecided,
            "rows": [row.to_json() for row in self.rows],
        }


def _row(localized: LocalizedColoringGraph, want_h: bool,
         time_budget: Optional[float]) -> Tuple[ReportRow, bool]:
    parents = localized.bfs_parents()
    connected = all(p is not None for p in parents)
    row = ReportRow(localized.j, connected)
    if connected:
        row.certificate = {"spanning_tree_parent": parents}
    if not want_h:
        return row, False
    try:
        verdict = hamiltonian_cycle(localized.adjacency, time_budget)
    except UndecidedError as e:
        logger.warning(f"j={localized.j}: {e}")
        row.status = "undecided"
        return row, True
    row.hamiltonian = verdict.is_hamiltonian
    row.status = verdict.status
    if verdict.cycle is not None:
        row.certificate = dict(row.certificate or {})
        row.certificate["cycle"] = [localized.nodes[i].label for i in verdict.cycle]
    return row, False


def analyze(graph: SimpleGraph, k: int, j: Optional[int] = None, want_h: bool = True,
            time_budget: Optional[float] = None) -> ParameterReport:
    """
    Build a parameter report for (H, k).

    With j given only that row is produced (g and h are filled in only if the row
    settles them for j = 1). Otherwise j runs from 1 until h is found, or until g is
    found when want_h is False; an undecided Hamiltonicity row stops the scan.

    Returns:
        ParameterReport: The report
    """
    _require_colorable(graph, k)
    report = ParameterReport(graph, k)
    scan = [j] if j is not None else range(1, graph.n + 1)
    for current in scan:
        localized = build_localized_graph(graph, k, current)
        row, undecided = _row(localized, want_h, time_budget)
        report.rows.append(row)
        if undecided:
            report.undecided = True
            break
        if j is not None and current != 1:
            break
        if row.connected and report.g is None:
            report.g = current
        if row.hamiltonian and report.h is None:
            report.h = current
        if report.h is not None or (not want_h and report.g is not None):
            break
    return report


def _threshold(graph: SimpleGraph, upper: int, test, workers: Optional[int]) -> int:
    chi = chromatic_number(graph)
    ks = list(range(chi, upper + 1))
    workers = workers or get_setting("workers")
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        outcomes = list(pool.map(lambda k: (k, test(k)), ks))
    failing = [k for k, ok in outcomes if not ok]
    return max(failing) + 1 if failing else chi


def mixing_number_k1(graph: SimpleGraph, workers: Optional[int] = None) -> int:
    """
    k1(H): least K with G^1_k(H) connected for every k >= K.

    Only k <= d + 2 is tested; larger k are connected by the degeneracy bound.
    """
    d, _ = degeneracy_order(graph)
    return _threshold(graph, d + 2, lambda k: is_connected_at(graph, k, 1), workers)


def graycode_number_k0(graph: SimpleGraph, workers: Optional[int] = None,
                       time_budget: Optional[float] = None) -> int:
    """
    k0(H): least K with G^1_k(H) Hamiltonian for every k >= K.

    Only k <= d + 3 is tested; larger k are Hamiltonian by the degeneracy bound.
    """
    d, _ = degeneracy_order(graph)
    return _threshold(graph, d + 3,
                      lambda k: hamiltonicity_at(graph, k, 1, time_budget).is_hamiltonian, workers)


def reconfiguration_path(graph: SimpleGraph, k: int, j: int, source: Coloring,
                         target: Coloring) -> Optional[List[Coloring]]:
    """
    Shortest path from source to target in G^j_k(H), or None when they are separated.
    """
    if source == target:
        if not source.is_proper(graph):
            raise PreconditionError(f"coloring {source.label} is not proper")
        return [source]
    localized = build_localized_graph(graph, k, j)
    a, b = localized.index_of(source), localized.index_of(target)
    parents = localized.bfs_parents(a)
    if parents[b] is None:
        return None
    route = [b]
    while route[-1] != a:
        route.append(parents[route[-1]])
    return [localized.nodes[i] for i in reversed(route)]


def component_summary(graph: SimpleGraph, k: int) -> Dict[str, Any]:
    """
    Per-component g and h for a possibly disconnected host, with both aggregate sides.

    Returns:
        Dict[str, Any]: components (vertices, g, h), g_max, h_max, and g, h of H itself
    """
    rows = []
    for vertices in components(graph):
        sub, _ = induced_subgraph(graph, vertices)
        rows.append({"vertices": vertices, "g": compute_g(sub, k), "h": compute_h(sub, k)})
    return {
        "components": rows,
        "g_max": max(r["g"] for r in rows),
        "h_max": max(r["h"] for r in rows),
        "g": compute_g(graph, k),
        "h": compute_h(graph, k),
    }


def complete_multipartite_above_k(parts: Sequence[int], colors: int) -> bool:
    """
    Check that G^1_l(K_{m_1,...,m_k}) is connected for a palette of l > k colors.

    Raises:
        PreconditionError: When l <= k
    """
    if colors <= len(parts):
        raise PreconditionError(f"need more than {len(parts)} colors (got {colors})")
    return is_connected_at(complete_multipartite(parts), colors, 1)
