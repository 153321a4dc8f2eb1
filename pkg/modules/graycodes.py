"""
Gray Codes Module

This module provides cyclic Gray codes of proper colorings: the validator, codes for
complete multipartite hosts built from permutation and hypercube codes, the block splice
engine that lifts a code of H' to a code of H, vertex-by-vertex growth, and the endpoint
tables of the short-path attachments used by the subdivision pipelines.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from modules.choosability import (
    AttachmentContext, is_attachment_choosable, size_function, tight_h_failure
)
from modules.colorings import Coloring, build_localized_graph, iter_colorings, iter_extensions
from modules.config import get_setting
from modules.errors import ConstructionError, PreconditionError, UnsupportedError
from modules.graphs import (
    CoverCache, SimpleGraph, bits, complete_multipartite, cycle, degeneracy_order,
    induced_subgraph, part_vertices
)
from modules.hypercube import antipodal_gray_path, reflected_gray_cycle
from modules.permutations import star_graph_adjacency, star_transposition_code
from modules.solvers import hamiltonian_cycle, hamiltonian_endpoint_pairs, hamiltonian_path

# Configure logger
logger = logging.getLogger('recolor.graycodes')

ColorVector = Tuple[int, ...]
PairSource = Callable[[ColorVector, List[ColorVector]], Optional[Set[Tuple[int, int]]]]

C4_FIXTURE = (
    "1312, 1212, 1232, 1213, 1313, 1323, 2123, 2323, 2313, "
    "2321, 2121, 2131, 3231, 3131, 3121, 3132, 3232, 3212"
)


@dataclass
class CyclicGrayCode:
    """
    A cyclic listing of the proper k-colorings of a host graph.

    Attributes:
        host: Host graph H
        k: Palette size
        j: Localization at which consecutive entries are adjacent
        sequence: The colorings in order
        constructor: Name of the procedure that produced the listing
        notes: Construction metadata (seams, fallbacks, method)
    """
    host: SimpleGraph
    k: int
    j: int
    sequence: List[Coloring]
    constructor: str = ""
    notes: Dict[str, Any] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.sequence)

    def labels(self) -> List[str]:
        return [c.label for c in self.sequence]

    def to_json(self) -> Dict[str, Any]:
        return {
            "graph": self.host.display_name(),
            "k": self.k,
            "j": self.j,
            "length": len(self.sequence),
            "sequence": self.labels(),
            "constructor": self.constructor,
            "notes": self.notes,
        }

    def to_text(self) -> str:
        return "\n".join(self.labels()) + "\n"


@dataclass
class CodeViolation:
    """
    First broken invariant of a Gray code.

    Attributes:
        index: Offending position in the sequence
        reason: What is wrong there
        difference: Vertices changed by the offending step, if it is a step
    """
    index: int
    reason: str
    difference: Tuple[int, ...] = ()

    def __str__(self) -> str:
        text = f"index {self.index}: {self.reason}"
        if self.difference:
            text += f" (differs on {list(self.difference)})"
        return text


def _mask(first: Sequence[int], second: Sequence[int]) -> int:
    mask = 0
    for v, (a, b) in enumerate(zip(first, second)):
        if a != b:
            mask |= 1 << v
    return mask


def validate_code(code: CyclicGrayCode) -> Optional[CodeViolation]:
    """
    Check that a code lists every proper coloring once with adjacent consecutive entries.

    Returns:
        Optional[CodeViolation]: None when the code is valid
    """
    host = code.host
    seen: Dict[int, int] = {}
    for i, coloring in enumerate(code.sequence):
        if coloring.k != code.k or coloring.n != host.n:
            return CodeViolation(i, f"{coloring.label} is not a {code.k}-coloring of a {host.n}-vertex host")
        if not coloring.is_proper(host):
            return CodeViolation(i, f"{coloring.label} is not proper")
        if coloring.code in seen:
            return CodeViolation(i, f"{coloring.label} repeats entry {seen[coloring.code]}")
        seen[coloring.code] = i

    length = len(code.sequence)
    if length > 1:
        cover = CoverCache(host)
        for i in range(length):
            a, b = code.sequence[i], code.sequence[(i + 1) % length]
            mask = _mask(a.colors, b.colors)
            if not cover.within(mask, code.j):
                return CodeViolation(i, f"{a.label} -> {b.label} is not an edge of G^{code.j}_{code.k}",
                                     tuple(bits(mask)))

    total = sum(1 for _ in iter_colorings(host, code.k))
    if total != length:
        return CodeViolation(length, f"lists {length} of the {total} proper colorings")
    return None


def require_valid(code: CyclicGrayCode) -> CyclicGrayCode:
    violation = validate_code(code)
    if violation is not None:
        raise ConstructionError(f"{code.constructor} produced an invalid code: {violation}")
    logger.debug(f"{code.constructor}: {len(code)} colorings of {code.host.display_name()} "
                 f"at k={code.k}, j={code.j}")
    return code


def fixture_c4_h3() -> CyclicGrayCode:
    """The printed 18-entry Hamiltonian cycle of G^2_3(C_4)."""
    sequence = [Coloring.from_label(label, 3) for label in C4_FIXTURE.split(", ")]
    return CyclicGrayCode(cycle(4), 3, 2, sequence, "fixture", {"fixture": "c4-h3"})


def search_code(graph: SimpleGraph, k: int, j: int, constructor: str = "search") -> CyclicGrayCode:
    """
    Gray code found by exhaustive Hamiltonian search of G^j_k(H).

    Raises:
        BudgetExceeded: When H has more than brute_force_limit colorings
        ConstructionError: When G^j_k(H) is not Hamiltonian
    """
    localized = build_localized_graph(graph, k, j, budget=get_setting("brute_force_limit"))
    verdict = hamiltonian_cycle(localized.adjacency)
    if verdict.cycle is None:
        raise ConstructionError(f"G^{j}_{k}({graph.display_name()}) is not Hamiltonian")
    sequence = [localized.nodes[i] for i in verdict.cycle]
    return CyclicGrayCode(graph, k, j, sequence, constructor, {"method": "search"})


# ---------------------------------------------------------------------------
# Complete multipartite hosts
# ---------------------------------------------------------------------------

def _require_parts(parts: Sequence[int]) -> None:
    if len(parts) < 2:
        raise PreconditionError(f"need at least two parts (got {list(parts)})")
    if any(m < 1 for m in parts):
        raise PreconditionError(f"part sizes must be positive (got {list(parts)})")


def multipartite_code_k(parts: Sequence[int]) -> CyclicGrayCode:
    """
    Gray code of the k-colorings of K_{m_1,...,m_k} at j = m_1 + m_k.

    Every k-coloring colors each part with its own color, so colorings are permutations.
    A star transposition interchanges the colors of the smallest part and one other part.

    Args:
        parts: Part sizes, in any order

    Returns:
        CyclicGrayCode: The validated code
    """
    _require_parts(parts)
    k = len(parts)
    host = complete_multipartite(parts)
    groups = part_vertices(parts)
    positions = sorted(range(k), key=lambda p: (parts[p], p))
    sequence = []
    for perm in star_transposition_code(k).sequence:
        colors = [0] * host.n
        for position, part in enumerate(positions):
            for v in groups[part]:
                colors[v] = perm[position]
        sequence.append(Coloring(tuple(colors), k))
    j = min(parts) + max(parts)
    code = CyclicGrayCode(host, k, j, sequence, "multipartite-k",
                          {"method": "star-transpositions", "smallest_part": positions[0]})
    return require_valid(code)


def _changed_part(first: Sequence[int], second: Sequence[int]) -> int:
    # injections are indexed (unused color, color of part 0, ..., color of part k-1)
    moved = [p for p in range(1, len(first)) if first[p] != second[p]]
    if len(moved) != 1:
        raise ConstructionError(f"base step {first} -> {second} changes {len(moved)} parts")
    return moved[0] - 1


def _carries_parts(base: List[Tuple[int, ...]], big: List[int]) -> bool:
    matching = len(base) // 2
    steps = [_changed_part(base[i], base[(i + 1) % len(base)]) for i in range(len(base))]
    return all(steps.count(a) == matching for a in big)


def _injection_cycle(parts: Sequence[int]) -> Tuple[List[Tuple[int, ...]], str]:
    """
    Cyclic order of the (k+1)-colorings of K_k using every edge of each part of size >= 2.

    Every bichromatic coloring of a part hangs between the two injections it connects, so
    such edges must all lie on the base cycle.
    """
    k = len(parts)
    big = [a for a in range(k) if parts[a] >= 2]
    base = list(star_transposition_code(k + 1).sequence)
    if _carries_parts(base, big):
        return base, "star-transpositions"
    if len(big) != 1:
        raise ConstructionError(
            f"no base cycle carries every edge of parts {big}: their edges form short alternating cycles")
    nodes, adjacency = star_graph_adjacency(k + 1)
    if len(nodes) > get_setting("brute_force_limit"):
        raise ConstructionError(f"base cycle search over {len(nodes)} injections exceeds brute_force_limit")

    # subdividing every edge of the big part forces it into any Hamiltonian cycle
    position = big[0] + 1
    extended = [list(nbrs) for nbrs in adjacency]
    index = {p: i for i, p in enumerate(nodes)}
    for i, p in enumerate(nodes):
        q = list(p)
        q[0], q[position] = q[position], q[0]
        other = index[tuple(q)]
        if i < other:
            middle = len(extended)
            extended.append([i, other])
            extended[i] = sorted(middle if b == other else b for b in extended[i])
            extended[other] = sorted(middle if b == i else b for b in extended[other])
    verdict = hamiltonian_cycle(extended)
    if verdict.cycle is None:
        raise ConstructionError(f"no base cycle carries every edge of part {big[0]}")
    return [nodes[i] for i in verdict.cycle if i < len(nodes)], "forced-edge search"


def _with_part(base_colors: Sequence[int], group: Sequence[int], word: Sequence[int]) -> Tuple[int, ...]:
    colors = list(base_colors)
    for v, c in zip(group, word):
        colors[v] = c
    return tuple(colors)


def _splice_cubes(parts: Sequence[int], groups: List[List[int]], n: int,
                  base: List[Tuple[int, ...]], j: int) -> List[Tuple[int, ...]]:
    k = len(parts)

    def coloring_of(injection: Sequence[int]) -> List[int]:
        colors = [0] * n
        for a in range(k):
            for v in groups[a]:
                colors[v] = injection[a + 1]
        return colors

    count = len(base)
    first_lap: List[Tuple[int, ...]] = []
    second_lap: List[Tuple[int, ...]] = []
    for i in range(count):
        current, following = base[i], base[(i + 1) % count]
        a = _changed_part(current, following)
        m = parts[a]
        b, c = current[a + 1], following[a + 1]
        colors = coloring_of(current)
        first_lap.append(tuple(colors))
        if m == 1:
            continue
        if j == 1:
            words = antipodal_gray_path(m, b, c).sequence[1:-1]
            first_lap.extend(_with_part(colors, groups[a], w) for w in words)
            continue
        ring = reflected_gray_cycle(m, b, c).sequence
        far = ring.index((c,) * m)
        first_lap.extend(_with_part(colors, groups[a], w) for w in ring[1:far])
        back = ring[far + 1:][::-1]
        second_lap.extend(_with_part(colors, groups[a], w) for w in back)
    return first_lap + second_lap


def multipartite_code_kplus1(parts: Sequence[int]) -> CyclicGrayCode:
    """
    Gray code of the (k+1)-colorings of K_{m_1,...,m_k}.

    The localization is 1 when every part is odd and 2 otherwise. Injections of the parts
    into the k+1 colors are listed by a base cycle; the colorings where one part uses two
    colors fill in between the two injections they connect, along antipodal hypercube
    paths at j = 1 or along the two arcs of a hypercube cycle on two laps at j = 2.

    The splice builds the code for [2,2], [3,3], [1,3], [1,1,1] and [1,1,3]. A part of size 1
    beside an even part, as in [1,2], [1,1,2] and [1,2,2], leaves the spliced listing invalid;
    those codes and any other shape whose splice does not validate are found by exhaustive
    search, with notes recording why the splice was dropped.

    Args:
        parts: Part sizes

    Returns:
        CyclicGrayCode: The validated code; notes["method"] tells how it was built
    """
    _require_parts(parts)
    k = len(parts)
    host = complete_multipartite(parts)
    groups = part_vertices(parts)
    j = 1 if all(m % 2 for m in parts) else 2
    notes: Dict[str, Any] = {}
    try:
        base, base_method = _injection_cycle(parts)
        vectors = _splice_cubes(parts, groups, host.n, base, j)
        code = CyclicGrayCode(host, k + 1, j, [Coloring(v, k + 1) for v in vectors], "multipartite-kplus1",
                              {"method": "hypercube-splice", "base": base_method})
        violation = validate_code(code)
        if violation is None:
            return code
        notes["splice_violation"] = str(violation)
        logger.info(f"hypercube splice for {host.display_name()} is invalid ({violation}); searching")
    except ConstructionError as e:
        notes["splice_error"] = str(e)
        logger.info(f"hypercube splice for {host.display_name()} unavailable: {e}; searching")
    code = search_code(host, k + 1, j, "multipartite-kplus1")
    code.notes.update(notes)
    return code


# ---------------------------------------------------------------------------
# Block splicing
# ---------------------------------------------------------------------------

def _block_adjacency(block: List[ColorVector], j: int, cover: CoverCache) -> List[List[int]]:
    size = len(block)
    adjacency: List[List[int]] = [[] for _ in range(size)]
    for a in range(size):
        for b in range(a + 1, size):
            if cover.within(_mask(block[a], block[b]), j):
                adjacency[a].append(b)
                adjacency[b].append(a)
    return adjacency


def _exact_pairs(adjacency: List[List[int]], cache: Dict) -> Set[Tuple[int, int]]:
    size = len(adjacency)
    if size == 1:
        return {(0, 0)}
    if all(len(nbrs) == size - 1 for nbrs in adjacency):
        return {(s, t) for s in range(size) for t in range(size) if s != t}
    key = tuple(tuple(nbrs) for nbrs in adjacency)
    if key not in cache:
        limit = get_setting("block_limit")
        if size > limit:
            raise UnsupportedError(f"block of {size} extensions exceeds block_limit={limit}")
        unordered = hamiltonian_endpoint_pairs(adjacency)
        cache[key] = unordered | {(t, s) for s, t in unordered}
    return cache[key]


def splice_blocks(graph: SimpleGraph, k: int, j: int, base: Sequence[ColorVector],
                  attachment: Sequence[int], pair_source: Optional[PairSource] = None) -> Optional[List[ColorVector]]:
    """
    Lift a cyclic listing of colorings of H' to a Gray code of H.

    The extensions of each base coloring form a block that is traversed consecutively,
    from an entry to an exit joined by a Hamiltonian path of the block; the exit of each
    block must be adjacent to the entry of the next, cyclically. Base colorings with no
    extension are skipped.

    Args:
        graph: Host H
        k: Palette size
        j: Localization of the result
        base: Full-length color vectors with 0 on the attachment, in cyclic order
        attachment: Vertices of H''
        pair_source: Optional claimed (entry, exit) pairs per block; exact pairs otherwise

    Returns:
        Optional[List[ColorVector]]: The listing, or None if no such splice exists
    """
    cover = CoverCache(graph)
    cache: Dict = {}
    blocks: List[List[ColorVector]] = []
    adjacencies: List[List[List[int]]] = []
    pairs: List[Set[Tuple[int, int]]] = []
    for partial in base:
        block = list(iter_extensions(graph, k, partial, list(attachment)))
        if not block:
            continue
        adjacency = _block_adjacency(block, j, cover)
        claimed = pair_source(tuple(partial), block) if pair_source is not None else None
        blocks.append(block)
        adjacencies.append(adjacency)
        pairs.append(claimed if claimed is not None else _exact_pairs(adjacency, cache))
    if not blocks:
        raise PreconditionError(f"no coloring of H' extends to {graph.display_name()} with {k} colors")

    if len(blocks) == 1:
        verdict = hamiltonian_cycle(adjacencies[0])
        return None if verdict.cycle is None else [blocks[0][i] for i in verdict.cycle]

    def linked(i: int, exit_: int, entry: int) -> bool:
        return cover.within(_mask(blocks[i][exit_], blocks[i + 1][entry]), j)

    count = len(blocks)
    for first_entry in sorted({e for e, _ in pairs[0]}):
        # layers[i] maps an exit of block i to (its entry, the previous block's exit)
        layers: List[Dict[int, Tuple[int, Optional[int]]]] = [
            {x: (first_entry, None) for e, x in sorted(pairs[0]) if e == first_entry}]
        for i in range(1, count):
            reached: Dict[int, int] = {}
            for entry in sorted({e for e, _ in pairs[i]}):
                for exit_ in layers[-1]:
                    if linked(i - 1, exit_, entry):
                        reached[entry] = exit_
                        break
            layer: Dict[int, Tuple[int, Optional[int]]] = {}
            for entry, exit_ in sorted(pairs[i]):
                if entry in reached and exit_ not in layer:
                    layer[exit_] = (entry, reached[entry])
            if not layer:
                break
            layers.append(layer)
        if len(layers) < count:
            continue
        closing = next((x for x in layers[-1]
                        if cover.within(_mask(blocks[-1][x], blocks[0][first_entry]), j)), None)
        if closing is None:
            continue

        routes = []
        exit_: Optional[int] = closing
        for i in range(count - 1, -1, -1):
            entry, previous = layers[i][exit_]
            routes.append((entry, exit_))
            exit_ = previous
        routes.reverse()

        result: List[ColorVector] = []
        for i, (entry, exit_) in enumerate(routes):
            if len(blocks[i]) == 1:
                walk = [0]
            else:
                walk = hamiltonian_path(adjacencies[i], entry, exit_)
                if walk is None:
                    logger.debug(f"claimed endpoints ({entry}, {exit_}) of block {i} have no path")
                    return None
            result.extend(blocks[i][v] for v in walk)
        return result
    return None


def _lift(code: CyclicGrayCode, base_vertices: Sequence[int], n: int) -> List[ColorVector]:
    vectors = []
    for coloring in code.sequence:
        colors = [0] * n
        for t, v in enumerate(base_vertices):
            colors[v] = coloring.colors[t]
        vectors.append(tuple(colors))
    return vectors


def _torus(first: int, second: int) -> Optional[List[Tuple[int, int]]]:
    """Hamiltonian cycle of the product of two cycles of the given lengths, as index pairs."""
    if first == 1:
        return [(0, t) for t in range(second)]
    if second == 1:
        return [(i, 0) for i in range(first)]
    if first % 2 == 1:
        if second % 2 == 1:
            return None
        flipped = _torus(second, first)
        return [(i, t) for t, i in flipped]
    walk = []
    for i in range(first):
        columns = range(1, second) if i % 2 == 0 else range(second - 1, 0, -1)
        walk.extend((i, t) for t in columns)
    walk.extend((i, 0) for i in range(first - 1, -1, -1))
    return walk


def _product_code(ctx: AttachmentContext, base: CyclicGrayCode, j_out: int) -> CyclicGrayCode:
    host, k = ctx.host, ctx.k
    lifted = _lift(base, ctx.base_vertices, host.n)
    attached = [c for c in iter_colorings(ctx.attachment_graph(), k)]
    walk = _torus(len(lifted), len(attached))
    if walk is None:
        vectors = splice_blocks(host, k, j_out, lifted, ctx.attachment)
        if vectors is None:
            raise ConstructionError("product of two odd codes could not be spliced")
        method = "product-splice"
    else:
        vectors = []
        for i, t in walk:
            colors = list(lifted[i])
            for v, c in zip(ctx.attachment, attached[t]):
                colors[v] = c
            vectors.append(tuple(colors))
        method = "product"
    code = CyclicGrayCode(host, k, j_out, [Coloring(v, k) for v in vectors], "extend-cycle",
                          {"method": method})
    return require_valid(code)


def extend_cycle(ctx: AttachmentContext, base: CyclicGrayCode, mode: str = "loose") -> CyclicGrayCode:
    """
    Extend a Gray code of H' = H - V(H'') to a Gray code of H.

    In "loose" mode H'' must be (k - d')-choosable and the result lives at
    j' = base.j + |V(H'')|. In "tight" mode every connected F of H' on at most ctx.j
    vertices needs some u with H'' f^F_u-choosable, and the result stays at j' = ctx.j.
    The base cycle is rotated so that its last step changes a neighbor of H''.

    Args:
        ctx: Host split; in tight mode ctx.j must be at least base.j
        base: Gray code of H' with vertices in ctx.base_vertices order
        mode: "loose" or "tight"

    Returns:
        CyclicGrayCode: The validated code of H

    Raises:
        PreconditionError: When the choosability precondition or the seam is missing
    """
    if mode not in ("loose", "tight"):
        raise PreconditionError(f"unknown extension mode {mode!r}")
    base_vertices = ctx.base_vertices
    if base.host.n != len(base_vertices) or base.k != ctx.k:
        raise PreconditionError("the base code does not belong to H' with the same palette")

    if mode == "loose":
        size = size_function(ctx, "base")
        if not is_attachment_choosable(ctx, size):
            raise PreconditionError(f"the attachment is not choosable with list sizes {size.as_dict()}")
        j_out = base.j + len(ctx.attachment)
    else:
        if base.j > ctx.j:
            raise PreconditionError(f"base code lives at j={base.j}, above ctx.j={ctx.j}")
        failure = tight_h_failure(ctx)
        if failure is not None:
            F, size = failure
            raise PreconditionError(
                f"no vertex u makes the attachment choosable for F={list(F)} (sizes {size.as_dict()})")
        j_out = ctx.j

    neighbors = 0
    for v in ctx.attachment:
        neighbors |= ctx.host.adj[v]
    neighbors &= ~ctx.attachment_mask
    if not neighbors:
        return _product_code(ctx, base, j_out)

    lifted = _lift(base, base_vertices, ctx.host.n)
    count = len(lifted)
    seam = next((i for i in range(count)
                 if _mask(lifted[i], lifted[(i + 1) % count]) & neighbors), None)
    if seam is None:
        raise PreconditionError("no consecutive colorings of the base code differ on a neighbor of the attachment")
    rotated = lifted[seam + 1:] + lifted[:seam + 1]
    vectors = splice_blocks(ctx.host, ctx.k, j_out, rotated, ctx.attachment)
    if vectors is None:
        raise ConstructionError(f"no splice of the base code extends to {ctx.host.display_name()}")
    code = CyclicGrayCode(ctx.host, ctx.k, j_out, [Coloring(v, ctx.k) for v in vectors], "extend-cycle",
                          {"mode": mode, "seam": seam})
    return require_valid(code)


def grow_code(graph: SimpleGraph, order: Sequence[int], k: int, j: int,
              constructor: str = "grow", allow_search: bool = True) -> CyclicGrayCode:
    """
    Build a Gray code of H one vertex at a time along the given order.

    Each step splices the extensions of the new vertex into the code of the previous
    induced subgraph. When no splice exists the step falls back to exhaustive search
    (bounded by brute_force_limit), and notes["search_steps"] lists those vertices.

    Raises:
        ConstructionError: When a step has no splice and allow_search is False
    """
    order = list(order)
    if sorted(order) != list(range(graph.n)):
        raise PreconditionError("the order must list every vertex exactly once")
    if graph.n == 0:
        raise PreconditionError("the host graph must have at least one vertex")
    vectors: List[ColorVector] = [(c,) for c in range(1, k + 1)]
    fallbacks = []
    for size in range(2, graph.n + 1):
        sub, _ = induced_subgraph(graph, order[:size])
        base = [v + (0,) for v in vectors]
        result = splice_blocks(sub, k, j, base, [size - 1])
        if result is None:
            if not allow_search:
                raise ConstructionError(
                    f"no splice adds vertex {order[size - 1]} to the {constructor} code of {graph.display_name()}")
            logger.debug(f"no splice adding vertex {order[size - 1]}; searching G^{j}_{k} on {size} vertices")
            fallbacks.append(order[size - 1])
            result = [c.colors for c in search_code(sub, k, j).sequence]
        vectors = result

    position = {v: t for t, v in enumerate(order)}
    sequence = [Coloring(tuple(vec[position[v]] for v in range(graph.n)), k) for vec in vectors]
    code = CyclicGrayCode(graph, k, j, sequence, constructor,
                          {"order": order, "search_steps": fallbacks})
    return require_valid(code)


def degeneracy_code(graph: SimpleGraph, k: int) -> CyclicGrayCode:
    """
    Gray code in G^1_k(H) for k >= d + 3, adding vertices along a degeneracy order.

    Every step is a splice; no step searches.

    Raises:
        PreconditionError: When k < d + 3
        ConstructionError: When a step has no splice
    """
    d, order = degeneracy_order(graph)
    if k < d + 3:
        raise PreconditionError(f"k={k} is below degeneracy + 3 = {d + 3}")
    return grow_code(graph, order, k, 1, "degeneracy", allow_search=False)


# ---------------------------------------------------------------------------
# Endpoint tables for short-path attachments
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CaseTable:
    """
    Block graph of a short attachment path with its known Hamiltonian-path endpoints.

    Labels read x u v y (4 colors, j = 1) or x u w v y (3 colors, j = 2), normalized
    so that x has color 1 and y has color 1 ("equal") or 2 ("distinct").

    Attributes:
        kind: "h4" or "h3"
        pattern: "equal" or "distinct"
        edges: Block graph edges
        any_endpoint: Labels joined by a Hamiltonian path to every other label
        paired: Sets P whose members are joined to every label outside P
        path_pairs: Further explicit endpoint pairs
    """
    kind: str
    pattern: str
    edges: Tuple[Tuple[str, str], ...]
    any_endpoint: FrozenSet[str] = frozenset()
    paired: Tuple[FrozenSet[str], ...] = ()
    path_pairs: Tuple[Tuple[str, str], ...] = ()

    @property
    def nodes(self) -> List[str]:
        return sorted({label for edge in self.edges for label in edge})

    def claimed_pairs(self) -> Set[FrozenSet[str]]:
        nodes = self.nodes
        claims = set()
        for start in self.any_endpoint:
            claims.update(frozenset((start, other)) for other in nodes if other != start)
        for group in self.paired:
            for start in group:
                claims.update(frozenset((start, other)) for other in nodes if other not in group)
        claims.update(frozenset(pair) for pair in self.path_pairs)
        return claims


def _ring(labels: Sequence[str]) -> Tuple[Tuple[str, str], ...]:
    return tuple((labels[i], labels[(i + 1) % len(labels)]) for i in range(len(labels)))


_H4_RING = ("1231", "1241", "1341", "1321", "1421", "1431")

CASE_TABLES: Dict[Tuple[str, str], CaseTable] = {
    ("h4", "equal"): CaseTable(
        "h4", "equal", _ring(_H4_RING),
        path_pairs=_ring(_H4_RING),
    ),
    ("h4", "distinct"): CaseTable(
        "h4", "distinct",
        (("1412", "1212"), ("1212", "1312"), ("1312", "1342"), ("1342", "1242"), ("1242", "1232"),
         ("1232", "1432"), ("1432", "1412"), ("1412", "1312"), ("1242", "1212"), ("1212", "1232")),
        any_endpoint=frozenset({"1212", "1342", "1432"}),
        paired=(frozenset({"1232", "1412"}), frozenset({"1242", "1312"})),
    ),
    ("h3", "equal"): CaseTable(
        "h3", "equal",
        (("12121", "13121"), ("13121", "12321"), ("12321", "12131"), ("12131", "12121"),
         ("12121", "12321"), ("13131", "13121"), ("13121", "13231"), ("13231", "12131"),
         ("12131", "13131"), ("13131", "13231")),
        any_endpoint=frozenset({"12121", "12321", "13131", "13231"}),
        paired=(frozenset({"12131", "13121"}),),
    ),
    ("h3", "distinct"): CaseTable(
        "h3", "distinct",
        (("12312", "13212"), ("13212", "13232"), ("13232", "12132"), ("12132", "13132"),
         ("13132", "13212"), ("12312", "12132"), ("13232", "13132")),
        any_endpoint=frozenset({"12312", "13132", "13232"}),
        paired=(frozenset({"12132", "13212"}),),
    ),
}

# palette size, localization and attachment length of each kind
CASE_KINDS = {"h4": (4, 1, 2), "h3": (3, 2, 3)}


def case_table(kind: str, pattern: str) -> CaseTable:
    try:
        return CASE_TABLES[(kind, pattern)]
    except KeyError:
        raise PreconditionError(f"no endpoint table for kind={kind!r}, pattern={pattern!r}")


def case_graph(kind: str, pattern: str) -> Tuple[List[str], Set[FrozenSet[str]]]:
    """
    Compute the block graph of a table by brute force on the path x, H'', y.

    Returns:
        Tuple[List[str], Set[FrozenSet[str]]]: Node labels and edges
    """
    if kind not in CASE_KINDS or pattern not in ("equal", "distinct"):
        raise PreconditionError(f"no block graph for kind={kind!r}, pattern={pattern!r}")
    k, j, length = CASE_KINDS[kind]
    n = length + 2
    host = SimpleGraph(n, tuple((1 << (v - 1) if v else 0) | (1 << (v + 1) if v < n - 1 else 0)
                                for v in range(n)))
    partial = [0] * n
    partial[0] = 1
    partial[-1] = 1 if pattern == "equal" else 2
    block = list(iter_extensions(host, k, partial, list(range(1, n - 1))))
    labels = ["".join(str(c) for c in colors) for colors in block]
    cover = CoverCache(host)
    edges = set()
    for a in range(len(block)):
        for b in range(a + 1, len(block)):
            if cover.within(_mask(block[a], block[b]), j):
                edges.add(frozenset((labels[a], labels[b])))
    return labels, edges


def _normalizer(px: int, py: int, k: int) -> Dict[int, int]:
    sigma = {px: 1}
    if py != px:
        sigma[py] = 2
    for c in range(1, k + 1):
        if c not in sigma:
            sigma[c] = len(sigma) + 1
    return sigma


def table_pair_source(kind: str, x: int, y: int, attachment: Sequence[int]) -> PairSource:
    """
    Endpoint pairs of each block read off the hard-coded table after renaming colors.

    The source answers None for a block that does not match its table, so the splice
    falls back to exact endpoint search there.
    """
    k = CASE_KINDS[kind][0]

    def source(partial: ColorVector, block: List[ColorVector]) -> Optional[Set[Tuple[int, int]]]:
        px, py = partial[x], partial[y]
        table = case_table(kind, "equal" if px == py else "distinct")
        sigma = _normalizer(px, py, k)
        labels = ["".join(str(sigma[c]) for c in (px, *(colors[v] for v in attachment), py))
                  for colors in block]
        if sorted(labels) != table.nodes:
            return None
        index = {label: i for i, label in enumerate(labels)}
        ordered = set()
        for pair in table.claimed_pairs():
            s, t = sorted(pair)
            ordered.add((index[s], index[t]))
            ordered.add((index[t], index[s]))
        return ordered

    return source
