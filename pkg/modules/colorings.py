"""
Colorings Module

This module provides proper k-colorings of a host graph, their enumeration in
lexicographic order, and the j-localized coloring graph G^j_k(H) in which two colorings
are adjacent when the vertices they disagree on fit inside a connected subgraph of H on
at most j vertices.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from modules.config import get_setting
from modules.errors import BudgetExceeded, PreconditionError
from modules.graphs import (
    CoverCache, SimpleGraph, bits, components, connected_vertex_sets, induced_subgraph, popcount
)

# Configure logger
logger = logging.getLogger('recolor.colorings')

# Graphs with at most this many colorings use the pairwise edge strategy under "auto"
PAIRWISE_LIMIT = 1500


@dataclass(frozen=True)
class Coloring:
    """
    A color vector indexed by vertex, with values in 1..k.

    Attributes:
        colors: Color of each vertex
        k: Palette size
    """
    colors: Tuple[int, ...]
    k: int

    def __post_init__(self):
        for c in self.colors:
            if not 1 <= c <= self.k:
                raise PreconditionError(f"color {c} outside palette 1..{self.k}")

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def code(self) -> int:
        """Dense radix-k encoding sum((c - 1) * k**v)."""
        value = 0
        for c in reversed(self.colors):
            value = value * self.k + (c - 1)
        return value

    @property
    def label(self) -> str:
        if self.k > 9:
            return ",".join(str(c) for c in self.colors)
        return "".join(str(c) for c in self.colors)

    @classmethod
    def from_label(cls, label: str, k: int) -> "Coloring":
        label = label.strip()
        try:
            if "," in label:
                colors = tuple(int(c) for c in label.split(","))
            else:
                colors = tuple(int(c) for c in label)
        except ValueError:
            raise PreconditionError(f"invalid coloring label {label!r}")
        return cls(colors, k)

    def is_proper(self, graph: SimpleGraph) -> bool:
        if graph.n != self.n:
            return False
        return all(self.colors[u] != self.colors[v] for u, v in graph.edges())

    def restrict(self, vertices: Sequence[int]) -> "Coloring":
        return Coloring(tuple(self.colors[v] for v in vertices), self.k)

    def __str__(self) -> str:
        return self.label


def _neighbor_lists(graph: SimpleGraph) -> List[List[int]]:
    return [graph.neighbors(v) for v in range(graph.n)]


def iter_extensions(graph: SimpleGraph, k: int, partial: Sequence[int], order: Sequence[int],
                    lists: Optional[Dict[int, Sequence[int]]] = None) -> Iterator[Tuple[int, ...]]:
    """
    Enumerate proper extensions of a partial coloring.

    Vertices in order are colored in turn (colors ascending, or from their list when
    lists are given) against every already-colored neighbor; entries of partial equal to
    0 outside order must not exist. The output is lexicographic in the order given.

    Args:
        graph: Host graph
        k: Palette size
        partial: Starting color vector with 0 at every vertex of order
        order: Vertices to color
        lists: Optional per-vertex allowed colors

    Yields:
        Tuple[int, ...]: Complete color vectors
    """
    colors = list(partial)
    for v in order:
        colors[v] = 0
    if not order:
        yield tuple(colors)
        return
    nbrs = _neighbor_lists(graph)
    choices = [list(lists[v]) if lists is not None and v in lists else list(range(1, k + 1)) for v in order]
    position = [-1] * len(order)
    depth = 0
    last = len(order) - 1
    while depth >= 0:
        v = order[depth]
        position[depth] += 1
        if position[depth] >= len(choices[depth]):
            position[depth] = -1
            colors[v] = 0
            depth -= 1
            continue
        c = choices[depth][position[depth]]
        if any(colors[u] == c for u in nbrs[v]):
            continue
        colors[v] = c
        if depth == last:
            yield tuple(colors)
            colors[v] = 0
            continue
        depth += 1


def iter_colorings(graph: SimpleGraph, k: int) -> Iterator[Tuple[int, ...]]:
    return iter_extensions(graph, k, [0] * graph.n, list(range(graph.n)))


def first_coloring(graph: SimpleGraph, k: int) -> Optional[Coloring]:
    colors = next(iter_colorings(graph, k), None)
    return None if colors is None else Coloring(colors, k)


def enumerate_colorings(graph: SimpleGraph, k: int, budget: Optional[int] = None) -> List[Coloring]:
    """
    Enumerate all proper k-colorings in lexicographic order.

    Args:
        graph: Host graph
        k: Palette size, at least 1
        budget: Maximum number of colorings (defaults to the budget_nodes setting)

    Returns:
        List[Coloring]: Every proper coloring; empty when k < chi(H)

    Raises:
        BudgetExceeded: When more than budget colorings exist
    """
    if k < 1:
        raise PreconditionError(f"k must be at least 1 (got {k})")
    budget = budget or get_setting("budget_nodes")
    result = []
    for colors in iter_colorings(graph, k):
        result.append(Coloring(colors, k))
        if len(result) > budget:
            raise BudgetExceeded("colorings", len(result), budget)
    logger.debug(f"{graph.display_name()}: {len(result)} proper {k}-colorings")
    return result


def _check_pair(first: Coloring, second: Coloring) -> None:
    if first.n != second.n or first.k != second.k:
        raise PreconditionError("colorings belong to different hosts or palettes")


def diff(first: Coloring, second: Coloring) -> frozenset:
    """The set of vertices where the two colorings differ."""
    _check_pair(first, second)
    return frozenset(v for v, (a, b) in enumerate(zip(first.colors, second.colors)) if a != b)


def diff_mask(first: Coloring, second: Coloring) -> int:
    _check_pair(first, second)
    mask = 0
    for v, (a, b) in enumerate(zip(first.colors, second.colors)):
        if a != b:
            mask |= 1 << v
    return mask


def adjacent_in_Gjk(graph: SimpleGraph, k: int, j: int, first: Coloring, second: Coloring,
                    cover: Optional[CoverCache] = None) -> bool:
    """True iff the colorings differ and their difference set fits a connected subgraph on <= j vertices."""
    if first.k != k or second.k != k:
        raise PreconditionError(f"colorings must use palette size {k}")
    mask = diff_mask(first, second)
    if not mask:
        return False
    cover = cover or CoverCache(graph)
    return cover.within(mask, j)


def _recoloring_sets(graph: SimpleGraph, j: int) -> List[List[int]]:
    """Connected vertex sets of size min(j, |component|): every localized move lies inside one."""
    target = {}
    for comp in graph.component_masks():
        size = min(j, popcount(comp))
        for v in bits(comp):
            target[v] = size
    result = []
    for mask in connected_vertex_sets(graph, j):
        low = (mask & -mask).bit_length() - 1
        if popcount(mask) == target[low]:
            result.append(list(bits(mask)))
    return result


def _local_neighbor_codes(graph: SimpleGraph, k: int, coloring: Coloring,
                          sets: List[List[int]]) -> Set[int]:
    base = coloring.code
    weights = [k ** v for v in range(graph.n)]
    found = set()
    for vertices in sets:
        for colors in iter_extensions(graph, k, coloring.colors, vertices):
            code = base + sum((colors[v] - coloring.colors[v]) * weights[v] for v in vertices)
            if code != base:
                found.add(code)
    return found


def neighbors_of(graph: SimpleGraph, k: int, j: int, coloring: Coloring) -> List[Coloring]:
    """
    All colorings adjacent to coloring in G^j_k(H), without building the whole graph.

    Returns:
        List[Coloring]: Neighbors in lexicographic order
    """
    if not coloring.is_proper(graph):
        raise PreconditionError(f"coloring {coloring.label} is not proper")
    sets = _recoloring_sets(graph, j)
    result = set()
    for vertices in sets:
        for colors in iter_extensions(graph, k, coloring.colors, vertices):
            if colors != coloring.colors:
                result.add(colors)
    return [Coloring(c, k) for c in sorted(result)]


@dataclass
class LocalizedColoringGraph:
    """
    The j-localized k-coloring graph of a host graph.

    Attributes:
        host: Host graph H
        k: Palette size
        j: Localization
        nodes: Proper colorings in lexicographic order
        adjacency: Sorted neighbor indices of each node
    """
    host: SimpleGraph
    k: int
    j: int
    nodes: List[Coloring]
    adjacency: List[List[int]]
    _index: Dict[int, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._index:
            self._index = {c.code: i for i, c in enumerate(self.nodes)}

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def index_of(self, coloring: Coloring) -> int:
        try:
            return self._index[coloring.code]
        except KeyError:
            raise PreconditionError(f"{coloring.label} is not a proper {self.k}-coloring of the host")

    def degree(self, index: int) -> int:
        return len(self.adjacency[index])

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def edge_set(self) -> Set[Tuple[int, int]]:
        return {(a, b) for a, nbrs in enumerate(self.adjacency) for b in nbrs if a < b}

    def bfs_parents(self, root: int = 0) -> List[Optional[int]]:
        """Parent array of a BFS tree from root; unreachable nodes get None, root gets -1."""
        parents: List[Optional[int]] = [None] * self.node_count
        if not self.nodes:
            return parents
        parents[root] = -1
        frontier = [root]
        while frontier:
            nxt = []
            for a in frontier:
                for b in self.adjacency[a]:
                    if parents[b] is None:
                        parents[b] = a
                        nxt.append(b)
            frontier = nxt
        return parents

    def is_connected(self) -> bool:
        return all(p is not None for p in self.bfs_parents())

    def components(self) -> List[List[int]]:
        seen = [False] * self.node_count
        result = []
        for start in range(self.node_count):
            if seen[start]:
                continue
            seen[start] = True
            comp, frontier = [start], [start]
            while frontier:
                nxt = []
                for a in frontier:
                    for b in self.adjacency[a]:
                        if not seen[b]:
                            seen[b] = True
                            nxt.append(b)
                comp.extend(nxt)
                frontier = nxt
            result.append(sorted(comp))
        return result

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for i, c in enumerate(self.nodes):
            graph.add_node(i, label=c.label)
        graph.add_edges_from(self.edge_set())
        return graph

    def to_json(self) -> Dict:
        return {
            "graph": self.host.display_name(),
            "k": self.k,
            "j": self.j,
            "nodes": [c.label for c in self.nodes],
            "edges": sorted([a, b] for a, b in self.edge_set()),
        }

    def to_dot(self) -> str:
        dot = nx.drawing.nx_pydot.to_pydot(self.to_networkx())
        dot.set_name(f"G{self.j}_{self.k}")
        return dot.to_string()


def build_localized_graph(graph: SimpleGraph, k: int, j: int, strategy: str = "auto",
                          budget: Optional[int] = None) -> LocalizedColoringGraph:
    """
    Materialize G^j_k(H).

    Args:
        graph: Host graph
        k: Palette size
        j: Localization, at least 1
        strategy: "pairwise" tests every pair through a per-difference-set cover cache;
                  "local" recolors each connected vertex set of size <= j; "auto" picks by size
        budget: Coloring budget

    Returns:
        LocalizedColoringGraph: The coloring graph
    """
    if j < 1:
        raise PreconditionError(f"j must be at least 1 (got {j})")
    nodes = enumerate_colorings(graph, k, budget)
    if strategy == "auto":
        strategy = "pairwise" if len(nodes) <= PAIRWISE_LIMIT else "local"
    if strategy not in ("pairwise", "local"):
        raise PreconditionError(f"unknown edge strategy {strategy!r}")

    index = {c.code: i for i, c in enumerate(nodes)}
    adjacency: List[List[int]] = [[] for _ in nodes]
    if strategy == "pairwise":
        cover = CoverCache(graph)
        for a in range(len(nodes)):
            ca = nodes[a].colors
            for b in range(a + 1, len(nodes)):
                cb = nodes[b].colors
                mask = 0
                for v in range(graph.n):
                    if ca[v] != cb[v]:
                        mask |= 1 << v
                if cover.within(mask, j):
                    adjacency[a].append(b)
                    adjacency[b].append(a)
        for nbrs in adjacency:
            nbrs.sort()
    else:
        sets = _recoloring_sets(graph, j)
        for a, coloring in enumerate(nodes):
            adjacency[a] = sorted(index[code] for code in _local_neighbor_codes(graph, k, coloring, sets))

    result = LocalizedColoringGraph(graph, k, j, nodes, adjacency, index)
    logger.debug(f"G^{j}_{k}({graph.display_name()}): {result.node_count} nodes, "
                 f"{result.edge_count} edges ({strategy})")
    return result


def product_decomposition_check(graph: SimpleGraph, k: int, j: int) -> bool:
    """
    Check that G^j_k(H) is the Cartesian product of the component coloring graphs.

    The bijection sends a coloring to its tuple of restrictions. The check compares edge
    counts and confirms every edge changes exactly one component along an edge there.
    """
    parts = components(graph)
    if len(parts) <= 1:
        return True
    whole = build_localized_graph(graph, k, j)
    factors = []
    for vertices in parts:
        sub, _ = induced_subgraph(graph, vertices)
        factors.append(build_localized_graph(sub, k, j))

    sizes = [f.node_count for f in factors]
    total = 1
    for s in sizes:
        total *= s
    if whole.node_count != total:
        return False

    expected_edges = 0
    for i, factor in enumerate(factors):
        others = 1
        for l, s in enumerate(sizes):
            if l != i:
                others *= s
        expected_edges += factor.edge_count * others
    if whole.edge_count != expected_edges:
        return False

    for a, b in whole.edge_set():
        changed = []
        for i, vertices in enumerate(parts):
            ra = whole.nodes[a].restrict(vertices)
            rb = whole.nodes[b].restrict(vertices)
            if ra != rb:
                changed.append((i, ra, rb))
        if len(changed) != 1:
            return False
        i, ra, rb = changed[0]
        if not factors[i].has_edge(factors[i].index_of(ra), factors[i].index_of(rb)):
            return False
    return True
