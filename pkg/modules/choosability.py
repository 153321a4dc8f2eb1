"""
Choosability Module

This module provides the attachment calculus used to bound g_k(H) and h_k(H) from an
induced subgraph H' = H - V(H''): the degree functions d' and d^F, the size functions
f, f^F, f_u and f^F_u, exhaustive f-choosability for small attachments, list coloring,
and the precondition evaluators behind the vertex and edge attachment bounds.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from modules.colorings import Coloring, iter_extensions
from modules.errors import PreconditionError, UnsupportedError
from modules.graphs import SimpleGraph, connected_vertex_sets, induced_subgraph, mask_of

# Configure logger
logger = logging.getLogger('recolor.choosability')

MAX_CHOOSABILITY_VERTICES = 6
VARIANTS = ("base", "f", "fF", "f_u", "fF_u")


@dataclass(frozen=True)
class AttachmentContext:
    """
    A host H split into H' and a connected attachment H'' on at most j vertices.

    Attributes:
        host: Host graph H
        attachment: Vertices of H''
        k: Palette size
        j: Localization
    """
    host: SimpleGraph
    attachment: Tuple[int, ...]
    k: int
    j: int

    def __post_init__(self):
        if not self.attachment:
            raise PreconditionError("the attachment must be nonempty")
        if len(set(self.attachment)) != len(self.attachment):
            raise PreconditionError("attachment vertices must be distinct")
        if any(not 0 <= v < self.host.n for v in self.attachment):
            raise PreconditionError("attachment contains vertices outside the host")
        if len(self.attachment) > self.j:
            raise PreconditionError(f"attachment has {len(self.attachment)} vertices, more than j={self.j}")
        if not self.host.is_induced_connected(self.attachment_mask):
            raise PreconditionError("the attachment must induce a connected subgraph")

    @property
    def attachment_mask(self) -> int:
        return mask_of(self.attachment)

    @property
    def base_vertices(self) -> List[int]:
        """Vertices of H' in increasing order."""
        mask = self.attachment_mask
        return [v for v in range(self.host.n) if not (mask >> v) & 1]

    def attachment_graph(self) -> SimpleGraph:
        """H'' relabeled 0..|H''|-1 in attachment order."""
        graph, _ = induced_subgraph(self.host, self.attachment)
        return graph

    def base_graph(self) -> SimpleGraph:
        graph, _ = induced_subgraph(self.host, self.base_vertices)
        return graph


@dataclass(frozen=True)
class SizeFunction:
    """
    Sizes of the lists allowed at each attachment vertex (may be zero or negative).

    Attributes:
        vertices: Attachment vertices (host indices)
        values: Size at each vertex, in the same order
    """
    vertices: Tuple[int, ...]
    values: Tuple[int, ...]

    def value(self, v: int) -> int:
        return self.values[self.vertices.index(v)]

    def as_dict(self) -> Dict[int, int]:
        return dict(zip(self.vertices, self.values))


@dataclass(frozen=True)
class ListAssignment:
    """A finite list of allowed colors per vertex of a graph."""
    lists: Tuple[Tuple[int, ...], ...]

    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(l) for l in self.lists)


def degree_functions(ctx: AttachmentContext,
                     F: Optional[Iterable[int]] = None) -> Tuple[Dict[int, int], Dict[int, int]]:
    """
    d'(v) = |N(v) ∩ V(H')| and d^F(v) = |N(v) ∩ V(F)| for every attachment vertex v.

    Raises:
        PreconditionError: When F is not inside H'
    """
    attachment = ctx.attachment_mask
    base = ctx.host.full_mask & ~attachment
    f_mask = mask_of(F) if F is not None else 0
    if f_mask & ~base:
        raise PreconditionError("F must be a subgraph of H'")
    d_prime, d_f = {}, {}
    for v in ctx.attachment:
        d_prime[v] = bin(ctx.host.adj[v] & base).count("1")
        d_f[v] = bin(ctx.host.adj[v] & f_mask).count("1")
    return d_prime, d_f


def size_function(ctx: AttachmentContext, variant: str, F: Optional[Iterable[int]] = None,
                  u: Optional[int] = None) -> SizeFunction:
    """
    Evaluate a size function on the attachment.

    Args:
        ctx: Attachment context
        variant: "base" (k - d'), "f", "fF", "f_u" or "fF_u"
        F: Subgraph of H' (vertex set), required by the F variants
        u: Attachment vertex, required by the _u variants

    Returns:
        SizeFunction: The values, negative ones included
    """
    if variant not in VARIANTS:
        raise PreconditionError(f"unknown size function {variant!r}; choose from {', '.join(VARIANTS)}")
    if variant.startswith("fF") and F is None:
        raise PreconditionError(f"size function {variant} needs F")
    if variant.endswith("_u"):
        if u is None:
            raise PreconditionError(f"size function {variant} needs u")
        if u not in ctx.attachment:
            raise PreconditionError(f"u={u} is not an attachment vertex")

    d_prime, d_f = degree_functions(ctx, F)
    values = []
    for v in ctx.attachment:
        if variant == "base":
            value = ctx.k - d_prime[v]
        elif variant.startswith("fF"):
            value = ctx.k - d_prime[v] - d_f[v]
        else:
            value = ctx.k - d_prime[v] - min(d_prime[v], ctx.j)
        if variant.endswith("_u") and v == u:
            value -= 1
        values.append(value)
    return SizeFunction(tuple(ctx.attachment), tuple(values))


def find_list_coloring(F: SimpleGraph, L: ListAssignment) -> Optional[Coloring]:
    """
    Backtracking search for a proper coloring with every color taken from its list.

    Vertices with the shortest lists are colored first.
    """
    if len(L.lists) != F.n:
        raise PreconditionError(f"expected {F.n} lists, got {len(L.lists)}")
    if F.n == 0:
        return Coloring((), 1)
    if any(not l for l in L.lists):
        return None
    order = sorted(range(F.n), key=lambda v: (len(L.lists[v]), v))
    palette = max(max(l) for l in L.lists)
    lists = {v: sorted(set(L.lists[v])) for v in range(F.n)}
    colors = next(iter_extensions(F, palette, [0] * F.n, order, lists), None)
    return None if colors is None else Coloring(colors, palette)


def _canonical_assignments(sizes: Sequence[int]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """
    List assignments with the given sizes up to renaming of colors.

    Each list takes some colors already seen plus fresh colors numbered consecutively,
    so the universe never exceeds the sum of the sizes.
    """
    chosen: List[Tuple[int, ...]] = []

    def extend(i: int, used: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
        if i == len(sizes):
            yield tuple(chosen)
            return
        size = sizes[i]
        for old_count in range(min(size, used), -1, -1):
            fresh = tuple(range(used + 1, used + 1 + size - old_count))
            for old in combinations(range(1, used + 1), old_count):
                chosen.append(old + fresh)
                yield from extend(i + 1, used + len(fresh))
                chosen.pop()

    yield from extend(0, 0)


def is_f_choosable(F: SimpleGraph, f) -> bool:
    """
    Exhaustive f-choosability test.

    Args:
        F: Graph on at most 6 vertices
        f: SizeFunction (values in vertex order of F) or a plain sequence of sizes

    Returns:
        bool: True iff every f-list assignment admits a list coloring

    Raises:
        UnsupportedError: When F has more than 6 vertices
    """
    sizes = tuple(f.values if isinstance(f, SizeFunction) else f)
    if len(sizes) != F.n:
        raise PreconditionError(f"expected {F.n} sizes, got {len(sizes)}")
    if F.n > MAX_CHOOSABILITY_VERTICES:
        raise UnsupportedError(f"choosability is checked on at most {MAX_CHOOSABILITY_VERTICES} vertices (got {F.n})")
    if F.n == 0:
        return True
    if any(s <= 0 for s in sizes):
        return False
    if all(sizes[v] > F.degree(v) for v in range(F.n)):
        return True
    for lists in _canonical_assignments(sizes):
        if find_list_coloring(F, ListAssignment(lists)) is None:
            logger.debug(f"no list coloring for {lists}")
            return False
    return True


def _base_candidates(ctx: AttachmentContext) -> Iterator[Tuple[int, ...]]:
    """Connected subgraphs F of H' on at most j vertices, one per distinct d^F profile."""
    base = ctx.host.full_mask & ~ctx.attachment_mask
    seen = set()
    for mask in connected_vertex_sets(ctx.host, ctx.j, within=base):
        profile = tuple(bin(ctx.host.adj[v] & mask).count("1") for v in ctx.attachment)
        if profile not in seen:
            seen.add(profile)
            yield tuple(v for v in range(ctx.host.n) if (mask >> v) & 1)


def is_attachment_choosable(ctx: AttachmentContext, size: SizeFunction) -> bool:
    return is_f_choosable(ctx.attachment_graph(), size)


def tight_g_failure(ctx: AttachmentContext) -> Optional[Tuple[Tuple[int, ...], SizeFunction]]:
    """The first F for which H'' is not f^F-choosable, or None when all pass."""
    for F in _base_candidates(ctx):
        size = size_function(ctx, "fF", F=F)
        if not is_attachment_choosable(ctx, size):
            return F, size
    return None


def tight_h_failure(ctx: AttachmentContext) -> Optional[Tuple[Tuple[int, ...], SizeFunction]]:
    """The first F for which no u makes H'' f^F_u-choosable, or None when all pass."""
    for F in _base_candidates(ctx):
        last = None
        for u in ctx.attachment:
            last = size_function(ctx, "fF_u", F=F, u=u)
            if is_attachment_choosable(ctx, last):
                break
        else:
            return F, last
    return None


@dataclass
class SubgraphBound:
    """
    Upper bound on g_k(H) or h_k(H) predicted from the value on H'.

    Attributes:
        bound: Predicted upper bound, or None when no attachment rule applies
        rule: "tight" (bound = max(value, |H''|)), "loose" (value + |H''|) or "none"
        failing: Size function that failed the tight rule, if it failed
        F: Subgraph of H' on which the tight rule failed
    """
    bound: Optional[int]
    rule: str
    failing: Optional[SizeFunction] = None
    F: Optional[Tuple[int, ...]] = None


def _bound(host: SimpleGraph, attachment: Sequence[int], k: int, value: int, tight) -> SubgraphBound:
    j = max(value, len(attachment))
    ctx = AttachmentContext(host, tuple(attachment), k, j)
    failure = tight(ctx)
    if failure is None:
        return SubgraphBound(j, "tight")
    F, size = failure
    if is_attachment_choosable(ctx, size_function(ctx, "base")):
        return SubgraphBound(value + len(attachment), "loose", size, F)
    return SubgraphBound(None, "none", size, F)


def check_g_subgraph(host: SimpleGraph, attachment: Sequence[int], k: int, g_base: int) -> SubgraphBound:
    """
    Bound g_k(H) from g_k(H') = g_base.

    The tight rule needs H'' to be f^F-choosable for every connected F of H' on at most
    j = max(g_base, |H''|) vertices and yields g_k(H) <= j; failing that, (k - d')-choosability
    yields g_k(H) <= g_base + |H''|.
    """
    return _bound(host, attachment, k, g_base, tight_g_failure)


def check_h_subgraph(host: SimpleGraph, attachment: Sequence[int], k: int, h_base: int) -> SubgraphBound:
    """
    Bound h_k(H) from h_k(H') = h_base.

    The tight rule needs, for every connected F of H' on at most j = max(h_base, |H''|)
    vertices, some u with H'' f^F_u-choosable, and yields h_k(H) <= j; failing that,
    (k - d')-choosability yields h_k(H) <= h_base + |H''|.
    """
    return _bound(host, attachment, k, h_base, tight_h_failure)


def attachment_lists(ctx: AttachmentContext, *partials: Sequence[int]) -> Dict[int, List[int]]:
    """Colors left at each attachment vertex after removing those used on its H'-neighbors by any partial."""
    base = ctx.host.full_mask & ~ctx.attachment_mask
    lists = {}
    for v in ctx.attachment:
        used = set()
        for colors in partials:
            used.update(colors[u] for u in range(ctx.host.n) if (base >> u) & 1 and ctx.host.has_edge(u, v))
        lists[v] = [c for c in range(1, ctx.k + 1) if c not in used]
    return lists


def extensions(ctx: AttachmentContext, partial: Sequence[int]) -> List[Tuple[int, ...]]:
    """All proper extensions of a coloring of H' (attachment entries ignored), lexicographic on H''."""
    start = list(partial)
    for v in ctx.attachment:
        start[v] = 0
    return list(iter_extensions(ctx.host, ctx.k, start, list(ctx.attachment)))


def extension_pair(ctx: AttachmentContext, first: Sequence[int],
                   second: Sequence[int]) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    Two distinct colorings of H'' that extend both given colorings of H'.

    The extended colorings differ only where first and second differ, so adjacent
    colorings of H' stay adjacent. When some u makes H'' f^F_u-choosable for a connected
    F covering the difference, such a pair always exists.

    Returns:
        Optional[Tuple]: Attachment color vectors (in attachment order), or None
    """
    lists = attachment_lists(ctx, first, second)
    start = list(first)
    for v in ctx.attachment:
        start[v] = 0
    found = []
    for colors in iter_extensions(ctx.host, ctx.k, start, list(ctx.attachment), lists):
        found.append(tuple(colors[v] for v in ctx.attachment))
        if len(found) == 2:
            return found[0], found[1]
    return None
