"""
Graphs Module

This module provides the host-graph types, the named families used throughout recolor,
edge subdivision of multigraphs, graph6 and multigraph text I/O, and the connected-cover
primitive that decides localized adjacency between colorings.

Vertices are 0-indexed and neighbor sets are stored as integer bitmasks, so a host graph
has at most 64 vertices.
"""

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from modules.errors import PreconditionError, UnsupportedError

# Configure logger
logger = logging.getLogger('recolor.graphs')

# Constants
MAX_VERTICES = 64
DW_TERMINAL_LIMIT = 12

VertexSet = Union[int, Iterable[int]]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class SimpleGraph:
    """
    An undirected simple graph on vertices 0..n-1.

    Attributes:
        n: Vertex count
        adj: Neighbor bitmask of each vertex
        name: Optional display name (not part of equality)
    """
    n: int
    adj: Tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError("vertex count must be non-negative")
        if self.n > MAX_VERTICES:
            raise UnsupportedError(f"graphs are limited to {MAX_VERTICES} vertices (got {self.n})")
        if len(self.adj) != self.n:
            raise PreconditionError(f"expected {self.n} neighbor sets, got {len(self.adj)}")
        for v, nbrs in enumerate(self.adj):
            if nbrs >> self.n:
                raise PreconditionError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if (nbrs >> v) & 1:
                raise PreconditionError(f"vertex {v} is adjacent to itself")
            for u in bits(nbrs):
                if not (self.adj[u] >> v) & 1:
                    raise PreconditionError(f"adjacency is not symmetric between {v} and {u}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def neighbors(self, v: int) -> List[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def grow(self, mask: int, within: Optional[int] = None) -> int:
        """Return the vertex set reachable from mask, optionally inside within."""
        limit = self.full_mask if within is None else within
        reached = mask & limit
        frontier = reached
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            nxt &= limit & ~reached
            reached |= nxt
            frontier = nxt
        return reached

    def is_induced_connected(self, mask: int) -> bool:
        """True if the subgraph induced by mask is connected (and mask is nonempty)."""
        if not mask:
            return False
        return self.grow(mask & -mask, within=mask) == mask

    def component_mask(self, v: int) -> int:
        return self.grow(1 << v)

    def component_masks(self) -> List[int]:
        seen = 0
        result = []
        for v in range(self.n):
            if not (seen >> v) & 1:
                comp = self.component_mask(v)
                seen |= comp
                result.append(comp)
        return result

    def display_name(self) -> str:
        return self.name or f"graph(n={self.n},m={self.edge_count})"

    def __str__(self) -> str:
        return self.display_name()


@dataclass(frozen=True)
class MultiGraph:
    """
    A multigraph: parallel edges and loops (v, v) are allowed.

    Attributes:
        n: Vertex count
        edges: Edge multiset in input order
    """
    n: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise PreconditionError(f"edge ({u}, {v}) uses a vertex outside 0..{self.n - 1}")

    def is_loopless(self) -> bool:
        return all(u != v for u, v in self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class SubdivisionSpec:
    """Per-edge subdivision counts, one per multigraph edge in order."""
    counts: Tuple[int, ...]

    @classmethod
    def uniform(cls, multigraph: MultiGraph, count: int) -> "SubdivisionSpec":
        return cls(tuple([count] * multigraph.edge_count))

    def minimum(self) -> int:
        return min(self.counts, default=0)


def from_edges(n: int, edges: Iterable[Tuple[int, int]], name: str = "") -> SimpleGraph:
    """
    Build a SimpleGraph from an edge list.

    Args:
        n: Vertex count
        edges: Pairs (u, v) with u != v; repeated pairs are merged
        name: Optional display name

    Returns:
        SimpleGraph: The graph
    """
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise PreconditionError(f"loop at vertex {u} is not allowed in a simple graph")
        if not (0 <= u < n and 0 <= v < n):
            raise PreconditionError(f"edge ({u}, {v}) uses a vertex outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return SimpleGraph(n, tuple(adj), name)


def _require_positive(value: int, what: str) -> None:
    if value < 1:
        raise PreconditionError(f"{what} must be positive (got {value})")


def path(n: int) -> SimpleGraph:
    _require_positive(n, "path length")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise PreconditionError(f"a cycle needs at least 3 vertices (got {n})")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def star(m: int) -> SimpleGraph:
    """K_{1,m}: center 0 and leaves 1..m."""
    _require_positive(m, "star size")
    return from_edges(m + 1, [(0, i) for i in range(1, m + 1)], f"K1,{m}")


def complete(n: int) -> SimpleGraph:
    _require_positive(n, "complete graph size")
    return from_edges(n, combinations(range(n), 2), f"K{n}")


def part_vertices(parts: Sequence[int]) -> List[List[int]]:
    """Vertex lists of the parts of complete_multipartite(parts), in part order."""
    result = []
    start = 0
    for size in parts:
        result.append(list(range(start, start + size)))
        start += size
    return result


def complete_multipartite(parts: Sequence[int]) -> SimpleGraph:
    """
    Complete multipartite graph with the given part sizes.

    Parts occupy consecutive vertex ranges in the order given.
    """
    if not parts:
        raise PreconditionError("at least one part is required")
    for size in parts:
        _require_positive(size, "part size")
    groups = part_vertices(parts)
    edges = []
    for a, b in combinations(range(len(groups)), 2):
        edges.extend((u, v) for u in groups[a] for v in groups[b])
    name = "K" + ",".join(str(p) for p in parts)
    return from_edges(sum(parts), edges, name)


def L_m(m: int) -> SimpleGraph:
    """K_{m,m} minus a perfect matching: a_i = i, b_i = m + i, a_i ~ b_l iff i != l."""
    if m < 3:
        raise PreconditionError(f"L_m needs m >= 3 (got {m})")
    edges = [(i, m + l) for i in range(m) for l in range(m) if i != l]
    return from_edges(2 * m, edges, f"L{m}")


def build_L(i: int, j: int, k: int):
    """
    Build the i-chromatic graph L(i, j, k) with its distinguished proper k-coloring.

    For i == k the graph is the balanced complete i-partite graph with parts of size
    ceil(j/2), each part colored monochromatically. For i < k every part has k*ceil(j/i)
    vertices, ceil(j/i) of each color, and the edges join differently colored vertices
    in different parts.

    Args:
        i: Number of parts (the chromatic number), at least 2
        j: Localization parameter, at least 1
        k: Number of colors, at least i

    Returns:
        Tuple[SimpleGraph, Coloring]: The graph and the coloring that is isolated in G^{j-1}_k
    """
    from modules.colorings import Coloring

    if i < 2:
        raise PreconditionError(f"L(i,j,k) needs i >= 2 (got {i})")
    if i > k:
        raise PreconditionError(f"L(i,j,k) needs i <= k (got i={i}, k={k})")
    _require_positive(j, "j")

    if i == k:
        size = math.ceil(j / 2)
        graph = complete_multipartite([size] * i)
        colors = tuple(p + 1 for p in range(i) for _ in range(size))
    else:
        per_color = math.ceil(j / i)
        size = k * per_color
        colors = tuple(r // per_color + 1 for _ in range(i) for r in range(size))
        edges = []
        for a, b in combinations(range(i), 2):
            for r in range(size):
                for s in range(size):
                    u, v = a * size + r, b * size + s
                    if colors[u] != colors[v]:
                        edges.append((u, v))
        graph = from_edges(i * size, edges)
    graph = SimpleGraph(graph.n, graph.adj, f"L({i},{j},{k})")
    return graph, Coloring(colors, k)


def disjoint_union(first: SimpleGraph, second: SimpleGraph) -> SimpleGraph:
    shift = first.n
    adj = list(first.adj) + [a << shift for a in second.adj]
    return SimpleGraph(first.n + second.n, tuple(adj), f"{first.display_name()}+{second.display_name()}")


def cartesian_product(first: SimpleGraph, second: SimpleGraph) -> SimpleGraph:
    """Cartesian product; vertex (a, b) becomes a * second.n + b."""
    n1, n2 = first.n, second.n
    edges = []
    for a in range(n1):
        for b in range(n2):
            v = a * n2 + b
            for b2 in bits(second.adj[b]):
                if b2 > b:
                    edges.append((v, a * n2 + b2))
            for a2 in bits(first.adj[a]):
                if a2 > a:
                    edges.append((v, a2 * n2 + b))
    return from_edges(n1 * n2, edges, f"{first.display_name()}x{second.display_name()}")


def induced_subgraph(graph: SimpleGraph, vertices: Sequence[int]) -> Tuple[SimpleGraph, List[int]]:
    """
    Induced subgraph on the given vertices, relabeled 0..len-1 in the order given.

    Returns:
        Tuple[SimpleGraph, List[int]]: The subgraph and the new-to-old vertex map
    """
    index = {v: i for i, v in enumerate(vertices)}
    adj = []
    for v in vertices:
        adj.append(mask_of(index[u] for u in bits(graph.adj[v]) if u in index))
    return SimpleGraph(len(vertices), tuple(adj)), list(vertices)


def components(graph: SimpleGraph) -> List[List[int]]:
    return [list(bits(mask)) for mask in graph.component_masks()]


def is_connected(graph: SimpleGraph) -> bool:
    return len(graph.component_masks()) <= 1


def bfs_distances(graph: SimpleGraph, source: int) -> List[Optional[int]]:
    dist: List[Optional[int]] = [None] * graph.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for u in bits(graph.adj[v]):
                if dist[u] is None:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        frontier = nxt
    return dist


def distance(graph: SimpleGraph, x: int, y: int) -> Optional[int]:
    """Edge distance between x and y, or None when they lie in different components."""
    return bfs_distances(graph, x)[y]


def degeneracy_order(graph: SimpleGraph) -> Tuple[int, List[int]]:
    """
    Peel minimum-degree vertices (lowest index on ties).

    Returns:
        Tuple[int, List[int]]: The degeneracy d and the order v_1..v_n, where the first
        vertex peeled is v_n; each v_i has at most d neighbors among v_1..v_{i-1}.
    """
    remaining = graph.full_mask
    removal = []
    d = 0
    while remaining:
        best, best_degree = -1, graph.n + 1
        for v in bits(remaining):
            deg = popcount(graph.adj[v] & remaining)
            if deg < best_degree:
                best, best_degree = v, deg
        d = max(d, best_degree)
        removal.append(best)
        remaining &= ~(1 << best)
    return d, removal[::-1]


def chromatic_number(graph: SimpleGraph) -> int:
    """Least k admitting a proper k-coloring, found by incremental search."""
    from modules.colorings import first_coloring

    if graph.n == 0:
        return 0
    for k in range(1, graph.n + 1):
        if first_coloring(graph, k) is not None:
            return k
    return graph.n


def _drop_vertex(mask: int, v: int) -> int:
    return (mask & ((1 << v) - 1)) | ((mask >> (v + 1)) << v)


def _chromatic_count(adj: Tuple[int, ...], k: int, memo: Dict[Tuple[int, ...], int]) -> int:
    if adj in memo:
        return memo[adj]
    n = len(adj)
    u = next((w for w in range(n) if adj[w]), None)
    if u is None:
        result = k ** n
    else:
        v = (adj[u] & -adj[u]).bit_length() - 1
        deleted = list(adj)
        deleted[u] &= ~(1 << v)
        deleted[v] &= ~(1 << u)
        merged = list(deleted)
        merged[u] |= deleted[v]
        for w in bits(deleted[v]):
            merged[w] |= 1 << u
        contracted = tuple(_drop_vertex(merged[w], v) for w in range(n) if w != v)
        result = _chromatic_count(tuple(deleted), k, memo) - _chromatic_count(contracted, k, memo)
    memo[adj] = result
    return result


def chromatic_polynomial(graph: SimpleGraph, k: int) -> int:
    """
    Evaluate P(H, k) by deletion-contraction.

    Independent of the coloring enumerator, so it serves as a cross-check of node counts.
    """
    if graph.n > 14:
        raise UnsupportedError(f"deletion-contraction is limited to 14 vertices (got {graph.n})")
    return _chromatic_count(graph.adj, k, {})


def connected_vertex_sets(graph: SimpleGraph, max_size: int, within: Optional[int] = None) -> Iterator[int]:
    """
    Enumerate every connected induced vertex set of size 1..max_size exactly once.

    Each set is grown from its smallest vertex using only larger vertices.
    """
    limit = graph.full_mask if within is None else within
    for root in bits(limit):
        allowed = limit & ~((1 << root) - 1)
        start = 1 << root
        seen = {start}
        stack = [start]
        while stack:
            current = stack.pop()
            yield current
            if popcount(current) >= max_size:
                continue
            frontier = 0
            for v in bits(current):
                frontier |= graph.adj[v]
            frontier &= allowed & ~current
            for u in bits(frontier):
                grown = current | (1 << u)
                if grown not in seen:
                    seen.add(grown)
                    stack.append(grown)


# ---------------------------------------------------------------------------
# Connected covers
# ---------------------------------------------------------------------------

def _as_mask(graph: SimpleGraph, vertices: VertexSet) -> int:
    mask = vertices if isinstance(vertices, int) else mask_of(vertices)
    if mask >> graph.n:
        raise PreconditionError("vertex set contains vertices outside the graph")
    return mask


def _dreyfus_wagner(graph: SimpleGraph, terminals: List[int], comp: int) -> int:
    nodes = list(bits(comp))
    index = {v: i for i, v in enumerate(nodes)}
    size = len(nodes)
    dist = []
    for v in nodes:
        row = bfs_distances(graph, v)
        dist.append([row[u] for u in nodes])

    count = len(terminals)
    full = (1 << count) - 1
    dp: List[Optional[List[int]]] = [None] * (full + 1)
    for i, t in enumerate(terminals):
        dp[1 << i] = dist[index[t]][:]

    inf = graph.n * graph.n + 1
    for subset in range(1, full + 1):
        if subset & (subset - 1) == 0:
            continue
        best = [inf] * size
        low = subset & -subset
        sub = (subset - 1) & subset
        while sub:
            if sub & low:
                left, right = dp[sub], dp[subset ^ sub]
                for i in range(size):
                    value = left[i] + right[i]
                    if value < best[i]:
                        best[i] = value
            sub = (sub - 1) & subset
        dp[subset] = [min(best[u] + dist[u][v] for u in range(size)) for v in range(size)]
    return dp[full][index[terminals[0]]] + 1


def _grow_cover(graph: SimpleGraph, mask: int, comp: int, bound: Optional[int]) -> Optional[int]:
    count = popcount(mask)
    candidates = list(bits(comp & ~mask))
    top = len(candidates) if bound is None else min(len(candidates), bound - count)
    for extra in range(0, top + 1):
        for combo in combinations(candidates, extra):
            if graph.is_induced_connected(mask | mask_of(combo)):
                return count + extra
    return None


def min_connected_cover_size(graph: SimpleGraph, vertices: VertexSet) -> Optional[int]:
    """
    Smallest |S| with vertices ⊆ S and the subgraph induced by S connected.

    Args:
        graph: Host graph
        vertices: Nonempty terminal set (iterable or bitmask)

    Returns:
        Optional[int]: The cover size, or None if the terminals meet several components
    """
    mask = _as_mask(graph, vertices)
    if not mask:
        raise PreconditionError("the terminal set must be nonempty")
    comp = graph.component_mask((mask & -mask).bit_length() - 1)
    if mask & ~comp:
        return None
    count = popcount(mask)
    if count == 1:
        return 1
    if graph.is_induced_connected(mask):
        return count
    terminals = list(bits(mask))
    if count == 2:
        return distance(graph, terminals[0], terminals[1]) + 1
    if count == 3:
        rows = [bfs_distances(graph, t) for t in terminals]
        return min(rows[0][v] + rows[1][v] + rows[2][v] for v in bits(comp)) + 1
    if count <= DW_TERMINAL_LIMIT:
        return _dreyfus_wagner(graph, terminals, comp)
    return _grow_cover(graph, mask, comp, None)


class CoverCache:
    """
    Memoized connected-cover queries for one host graph.

    Many coloring pairs share a difference set, so sizes are cached per bitmask.
    """

    def __init__(self, graph: SimpleGraph):
        self.graph = graph
        self._sizes: Dict[int, Optional[int]] = {}
        self._bounded: Dict[Tuple[int, int], bool] = {}
        self._components = graph.component_masks()

    def _component(self, mask: int) -> Optional[int]:
        for comp in self._components:
            if mask & comp:
                return comp if not mask & ~comp else None
        return None

    def size(self, mask: int) -> Optional[int]:
        if mask not in self._sizes:
            self._sizes[mask] = min_connected_cover_size(self.graph, mask)
        return self._sizes[mask]

    def within(self, mask: int, j: int) -> bool:
        """True if mask lies in a connected induced subgraph on at most j vertices."""
        if not mask:
            return False
        count = popcount(mask)
        if count > j:
            return False
        if mask in self._sizes:
            size = self._sizes[mask]
            return size is not None and size <= j
        comp = self._component(mask)
        if comp is None:
            self._sizes[mask] = None
            return False
        if count == 1 or j >= popcount(comp):
            return True
        if count <= DW_TERMINAL_LIMIT:
            size = self.size(mask)
            return size is not None and size <= j
        key = (mask, j)
        if key not in self._bounded:
            self._bounded[key] = _grow_cover(self.graph, mask, comp, j) is not None
        return self._bounded[key]


# ---------------------------------------------------------------------------
# Subdivision
# ---------------------------------------------------------------------------

def subdivide_with_paths(multigraph: MultiGraph, spec: SubdivisionSpec) -> Tuple[SimpleGraph, List[List[int]]]:
    """
    Subdivide every edge of a multigraph.

    Original vertices keep indices 0..n-1; the new vertices are appended edge by edge
    in input order, listed from the first endpoint towards the second.

    Returns:
        Tuple[SimpleGraph, List[List[int]]]: The simple graph and, per edge, its internal vertices
    """
    if len(spec.counts) != multigraph.edge_count:
        raise PreconditionError(
            f"expected {multigraph.edge_count} subdivision counts, got {len(spec.counts)}")

    direct: Dict[Tuple[int, int], int] = {}
    for (u, v), count in zip(multigraph.edges, spec.counts):
        if count < 0:
            raise PreconditionError(f"subdivision count for edge ({u}, {v}) is negative")
        if u == v and count < 2:
            raise PreconditionError(
                f"loop at vertex {u} must be subdivided at least twice (got {count})")
        if u != v and count == 0:
            key = (min(u, v), max(u, v))
            direct[key] = direct.get(key, 0) + 1
            if direct[key] > 1:
                raise PreconditionError(
                    f"parallel edges between {key[0]} and {key[1]} left unsubdivided would repeat an edge")

    total = multigraph.n + sum(spec.counts)
    if total > MAX_VERTICES:
        raise UnsupportedError(f"subdivided graph would have {total} vertices (limit {MAX_VERTICES})")

    edges = []
    paths = []
    nxt = multigraph.n
    for (u, v), count in zip(multigraph.edges, spec.counts):
        internal = list(range(nxt, nxt + count))
        nxt += count
        chain = [u] + internal + [v]
        edges.extend(zip(chain, chain[1:]))
        paths.append(internal)
    graph = from_edges(total, edges)
    return graph, paths


def subdivide(multigraph: MultiGraph, spec: SubdivisionSpec) -> SimpleGraph:
    graph, _ = subdivide_with_paths(multigraph, spec)
    return graph


# ---------------------------------------------------------------------------
# I/O and named families
# ---------------------------------------------------------------------------

def parse_multigraph(text: str) -> Tuple[MultiGraph, SubdivisionSpec]:
    """
    Parse the plain-text multigraph format.

    The first entry is the vertex count; every further entry is "u v [count]" where the
    optional count (also written "x3") is the subdivision count of that edge, default 0.
    Entries are separated by newlines or ';' and '#' starts a comment.
    """
    entries = []
    for line in text.replace(";", "\n").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            entries.append(line.split())
    if not entries:
        raise PreconditionError("empty multigraph description")
    try:
        n = int(entries[0][0])
        edges, counts = [], []
        for fields in entries[1:]:
            if len(fields) not in (2, 3):
                raise PreconditionError(f"expected 'u v [count]', got {' '.join(fields)!r}")
            edges.append((int(fields[0]), int(fields[1])))
            counts.append(int(fields[2].lstrip("xX")) if len(fields) == 3 else 0)
    except ValueError as e:
        raise PreconditionError(f"invalid multigraph description: {e}")
    return MultiGraph(n, tuple(edges)), SubdivisionSpec(tuple(counts))


def format_multigraph(multigraph: MultiGraph, spec: SubdivisionSpec) -> str:
    lines = [str(multigraph.n)]
    lines.extend(f"{u} {v} {c}" for (u, v), c in zip(multigraph.edges, spec.counts))
    return "\n".join(lines) + "\n"


def to_networkx(graph: SimpleGraph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges())
    return result


def from_networkx(nx_graph: nx.Graph, name: str = "") -> SimpleGraph:
    relabeled = nx.convert_node_labels_to_integers(nx_graph)
    return from_edges(relabeled.number_of_nodes(), relabeled.edges(), name)


def read_graph6(line: str) -> SimpleGraph:
    line = line.strip()
    if not line:
        raise PreconditionError("empty graph6 string")
    try:
        nx_graph = nx.from_graph6_bytes(line.encode("ascii"))
    except Exception as e:
        raise PreconditionError(f"invalid graph6 string {line!r}: {e}")
    return from_networkx(nx_graph, line)


def write_graph6(graph: SimpleGraph) -> str:
    return nx.to_graph6_bytes(to_networkx(graph), header=False).decode("ascii").strip()


def read_graph6_file(file_path: str) -> List[SimpleGraph]:
    with open(file_path, "r") as f:
        return [read_graph6(line) for line in f if line.strip() and not line.startswith(">>")]


FAMILIES = ["path", "cycle", "star", "complete", "multipartite", "Lm", "L"]


def from_family(spec: str) -> SimpleGraph:
    """
    Build a named family from a "name:args" string, e.g. "cycle:5", "multipartite:1,2,2",
    "Lm:3" or "L:2,3,3".
    """
    name, _, raw = spec.partition(":")
    try:
        args = [int(a) for a in raw.split(",") if a.strip()]
    except ValueError:
        raise PreconditionError(f"invalid family arguments in {spec!r}")
    builders = {
        "path": lambda: path(*args),
        "cycle": lambda: cycle(*args),
        "star": lambda: star(*args),
        "complete": lambda: complete(*args),
        "multipartite": lambda: complete_multipartite(args),
        "Lm": lambda: L_m(*args),
        "L": lambda: build_L(*args)[0],
    }
    if name not in builders:
        raise PreconditionError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    try:
        return builders[name]()
    except TypeError:
        raise PreconditionError(f"wrong number of arguments for family {name!r}")
