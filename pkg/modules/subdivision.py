"""
Subdivision Module

This module provides the subdivision ladder H_1 (a forest), ..., H_m = H of a subdivided
multigraph, where each step attaches a path on l new vertices between two vertices x and y
of the previous graph, and the Gray code pipelines that follow the ladder: 4-colorings at
j = 1 for loopless multigraphs subdivided at least twice, and 3-colorings at j = 2 for
multigraphs subdivided at least three times.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from modules.colorings import Coloring
from modules.errors import ConstructionError, PreconditionError
from modules.graphs import (
    MultiGraph, SimpleGraph, SubdivisionSpec, bits, components, distance, induced_subgraph,
    subdivide_with_paths
)
from modules.graycodes import (
    ColorVector, CyclicGrayCode, degeneracy_code, fixture_c4_h3, grow_code, require_valid, splice_blocks,
    table_pair_source
)

# Configure logger
logger = logging.getLogger('recolor.subdivision')


@dataclass(frozen=True)
class LadderStep:
    """
    One attachment of the ladder.

    Attributes:
        edge: Index of the multigraph edge the path comes from
        x: Vertex of the previous graph adjacent to the first path vertex
        y: Vertex of the previous graph adjacent to the last path vertex
        path: The attached vertices, from the x side
    """
    edge: int
    x: int
    y: int
    path: Tuple[int, ...]


@dataclass
class SubdivisionLadder:
    """
    A subdivided multigraph grown from a forest by path attachments.

    Attributes:
        host: The subdivided graph H
        multigraph: The multigraph M
        spec: Subdivision counts
        length: Number of vertices in every attached path
        forest: Vertices of H_1
        steps: Attachments, in order
    """
    host: SimpleGraph
    multigraph: MultiGraph
    spec: SubdivisionSpec
    length: int
    forest: Tuple[int, ...]
    steps: List[LadderStep] = field(default_factory=list)

    @property
    def stage_count(self) -> int:
        return len(self.steps) + 1

    def order(self) -> List[int]:
        """Forest vertices, then the attached paths in ladder order."""
        result = list(self.forest)
        for step in self.steps:
            result.extend(step.path)
        return result

    def stage_vertices(self, stage: int) -> List[int]:
        """Vertices of H_{stage + 1}; stage 0 is the forest."""
        if not 0 <= stage < self.stage_count:
            raise PreconditionError(f"stage {stage} outside 0..{self.stage_count - 1}")
        return self.order()[:len(self.forest) + self.length * stage]

    def stage(self, stage: int) -> SimpleGraph:
        graph, _ = induced_subgraph(self.host, self.stage_vertices(stage))
        return graph

    def step_distance(self, index: int) -> Optional[int]:
        """Distance between x and y in the graph the step attaches to."""
        step = self.steps[index]
        vertices = self.stage_vertices(index)
        position = {v: t for t, v in enumerate(vertices)}
        graph, _ = induced_subgraph(self.host, vertices)
        return distance(graph, position[step.x], position[step.y])

    def is_forest(self) -> bool:
        graph = self.stage(0)
        return graph.edge_count == graph.n - len(components(graph))


def subdivision_ladder(multigraph: MultiGraph, spec: SubdivisionSpec, length: int) -> SubdivisionLadder:
    """
    Build the ladder of a subdivided multigraph.

    A spanning forest of M is kept whole. Every other edge, loops included, loses its last
    length internal vertices; they form its attachment and the remaining internal vertices
    stay in the forest as a pendant path.

    Args:
        multigraph: The multigraph M
        spec: Subdivision counts, each at least length
        length: Attached path length l

    Returns:
        SubdivisionLadder: The ladder
    """
    if length < 1:
        raise PreconditionError(f"attachment length must be positive (got {length})")
    short = [i for i, c in enumerate(spec.counts) if c < length]
    if short:
        raise PreconditionError(f"edges {short} are subdivided fewer than {length} times")
    host, paths = subdivide_with_paths(multigraph, spec)

    parent = list(range(multigraph.n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    kept = set()
    for i, (u, v) in enumerate(multigraph.edges):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            kept.add(i)

    forest = list(range(multigraph.n))
    steps = []
    for i, (u, v) in enumerate(multigraph.edges):
        internal = paths[i]
        if i in kept:
            forest.extend(internal)
            continue
        keep = len(internal) - length
        forest.extend(internal[:keep])
        x = internal[keep - 1] if keep > 0 else u
        steps.append(LadderStep(i, x, v, tuple(internal[keep:])))
    ladder = SubdivisionLadder(host, multigraph, spec, length, tuple(sorted(forest)), steps)
    logger.debug(f"ladder: forest on {len(ladder.forest)} vertices, {len(steps)} attachments of length {length}")
    return ladder


def _forest_order(graph: SimpleGraph) -> List[int]:
    """Breadth-first order per component, so every non-root vertex follows one neighbor."""
    order = []
    for comp in components(graph):
        frontier = [comp[0]]
        seen = {comp[0]}
        while frontier:
            order.extend(frontier)
            nxt = []
            for v in frontier:
                for u in bits(graph.adj[v]):
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
    return order


def _rotate_to_end(vectors: List[ColorVector], i: int) -> List[ColorVector]:
    """Rotate so that entries i and i + 1 become the last two."""
    cut = (i + 2) % len(vectors)
    return vectors[cut:] + vectors[:cut]


def _fixed_steps(vectors: List[ColorVector], x: int, y: int, equal: bool) -> Optional[int]:
    count = len(vectors)
    for i in range(count):
        a, b = vectors[i], vectors[(i + 1) % count]
        if a[x] != b[x] or a[y] != b[y]:
            continue
        if (a[x] == a[y]) == equal:
            return i
    return None


def h4_seam(vectors: List[ColorVector], x: int, y: int) -> Tuple[List[ColorVector], str]:
    """
    Rotate a 4-color code so that its last step keeps the colors of x and y.

    "case-2" puts a step with x and y colored differently at the end; "case-1" one with
    x and y sharing a color.

    Raises:
        PreconditionError: When neither pattern occurs
    """
    for equal, case in ((False, "case-2"), (True, "case-1")):
        i = _fixed_steps(vectors, x, y, equal)
        if i is not None:
            return _rotate_to_end(vectors, i), case
    raise PreconditionError("no consecutive colorings keep both x and y fixed (neither Case 1 nor Case 2 applies)")


def h3_seam(vectors: List[ColorVector], x: int, y: int) -> Tuple[List[ColorVector], str]:
    """
    Rotate a 3-color code so that its last step keeps x and y fixed, preferring x and y
    equal ("equal") over different ("distinct").
    """
    for equal, case in ((True, "equal"), (False, "distinct")):
        i = _fixed_steps(vectors, x, y, equal)
        if i is not None:
            return _rotate_to_end(vectors, i), case
    raise PreconditionError("no consecutive colorings keep both x and y fixed")


def _run_ladder(ladder: SubdivisionLadder, kind: str, k: int, j: int, base: CyclicGrayCode,
                check_step, seam_finder) -> Tuple[List[ColorVector], List[Dict[str, Any]]]:
    order = ladder.order()
    position = {v: t for t, v in enumerate(order)}
    vectors = [c.colors for c in base.sequence]
    size = len(ladder.forest)
    seams = []
    for index, step in enumerate(ladder.steps):
        stage, _ = induced_subgraph(ladder.host, order[:size])
        x, y = position[step.x], position[step.y]
        check_step(stage, x, y)
        attachment = list(range(size, size + len(step.path)))
        grown, _ = induced_subgraph(ladder.host, order[:size + len(step.path)])
        rotated, case = seam_finder(vectors, x, y)
        lifted = [v + (0,) * len(attachment) for v in rotated]
        result = splice_blocks(grown, k, j, lifted, attachment, table_pair_source(kind, x, y, attachment))
        pairs = "table"
        if result is None:
            logger.debug(f"table endpoints failed at step {index}; using exact endpoint search")
            result = splice_blocks(grown, k, j, lifted, attachment)
            pairs = "exact"
        if result is None:
            raise ConstructionError(f"attachment {index} (edge {step.edge}) could not be spliced")
        seams.append({"edge": step.edge, "case": case, "pairs": pairs})
        vectors = result
        size += len(step.path)
    return vectors, seams


def _to_host(ladder: SubdivisionLadder, vectors: Sequence[ColorVector], k: int) -> List[Coloring]:
    order = ladder.order()
    position = {v: t for t, v in enumerate(order)}
    return [Coloring(tuple(vec[position[v]] for v in range(ladder.host.n)), k) for vec in vectors]


def subdivided_h4_code(multigraph: MultiGraph, spec: SubdivisionSpec) -> CyclicGrayCode:
    """
    Gray code of the 4-colorings of a loopless multigraph subdivided at least twice, at j = 1.

    The forest H_1 gets a code from the degeneracy builder; each 2-vertex attachment
    is then spliced in after rotating the code to a seam that keeps x and y fixed.

    Args:
        multigraph: Loopless multigraph M
        spec: Subdivision counts, each at least 2

    Returns:
        CyclicGrayCode: The validated code
    """
    if not multigraph.is_loopless():
        raise PreconditionError("the 4-color pipeline needs a loopless multigraph")
    ladder = subdivision_ladder(multigraph, spec, 2)
    forest, _ = induced_subgraph(ladder.host, ladder.order()[:len(ladder.forest)])
    base = degeneracy_code(forest, 4)

    def check_step(stage: SimpleGraph, x: int, y: int) -> None:
        if x == y:
            raise PreconditionError("attachment ends coincide; the multigraph has a loop")
        if not any(v not in (x, y) for v in range(stage.n)):
            raise PreconditionError("no vertex z outside {x, y} in the graph being extended")

    vectors, seams = _run_ladder(ladder, "h4", 4, 1, base, check_step, h4_seam)
    code = CyclicGrayCode(ladder.host, 4, 1, _to_host(ladder, vectors, 4), "subdivided-h4",
                          {"base": "degeneracy", "seams": seams})
    return require_valid(code)


def subdivided_h3_code(multigraph: MultiGraph, spec: SubdivisionSpec) -> CyclicGrayCode:
    """
    Gray code of the 3-colorings of a multigraph subdivided at least three times, at j = 2.

    A single edge gives a path or a cycle, handled directly (the 4-cycle by its printed
    listing). Otherwise the forest H_1 is grown vertex by vertex at j = 2 and each 3-vertex
    attachment is spliced in; every step needs y outside N(x) and a vertex z of the graph
    being extended outside N[x] and N[y].

    Args:
        multigraph: Multigraph M, loops allowed
        spec: Subdivision counts, each at least 3

    Returns:
        CyclicGrayCode: The validated code
    """
    ladder = subdivision_ladder(multigraph, spec, 3)
    if multigraph.edge_count == 1:
        (u, v), count = multigraph.edges[0], spec.counts[0]
        if u == v and count == 3 and multigraph.n == 1:
            fixture = fixture_c4_h3()
            code = CyclicGrayCode(ladder.host, 3, 2, fixture.sequence, "subdivided-h3", {"base": "fixture"})
            return require_valid(code)
        return grow_code(ladder.host, _forest_order(ladder.host), 3, 2, "subdivided-h3")

    forest, _ = induced_subgraph(ladder.host, ladder.order()[:len(ladder.forest)])
    base = grow_code(forest, _forest_order(forest), 3, 2)

    def check_step(stage: SimpleGraph, x: int, y: int) -> None:
        if stage.has_edge(x, y):
            raise PreconditionError("attachment ends x and y are adjacent")
        blocked = stage.closed_neighborhood(x) | stage.closed_neighborhood(y)
        if not stage.full_mask & ~blocked:
            raise PreconditionError("no vertex z outside N[x] and N[y] in the graph being extended")

    vectors, seams = _run_ladder(ladder, "h3", 3, 2, base, check_step, h3_seam)
    code = CyclicGrayCode(ladder.host, 3, 2, _to_host(ladder, vectors, 3), "subdivided-h3",
                          {"base": "grow", "seams": seams})
    return require_valid(code)
