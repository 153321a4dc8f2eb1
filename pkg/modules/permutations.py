"""
Permutations Module

This module provides cyclic listings of all permutations of 1..n in which consecutive
permutations (including the last and the first) differ by swapping the first position
with one other position.
"""

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import List, Optional, Tuple

from modules.errors import ConstructionError, PreconditionError

# Configure logger
logger = logging.getLogger('recolor.permutations')

# Largest n handed to the exhaustive Cayley-graph search
SEARCH_LIMIT = 5

Permutation = Tuple[int, ...]


@dataclass
class PermutationCode:
    """
    A cyclic listing of the permutations of 1..n.

    Attributes:
        n: Number of symbols
        sequence: The permutations in order
    """
    n: int
    sequence: List[Permutation]

    def labels(self) -> List[str]:
        return ["".join(str(s) for s in p) if self.n <= 9 else ",".join(str(s) for s in p)
                for p in self.sequence]

    def swap_positions(self) -> List[int]:
        """Position swapped with the first one at each step (0-indexed), wrapping around."""
        result = []
        for i, current in enumerate(self.sequence):
            nxt = self.sequence[(i + 1) % len(self.sequence)]
            moved = [p for p in range(self.n) if current[p] != nxt[p]]
            result.append(moved[-1] if moved else -1)
        return result

    def violation(self) -> Optional[str]:
        """Describe the first broken invariant, or None if the listing is valid."""
        expected = 1
        for i in range(2, self.n + 1):
            expected *= i
        if len(self.sequence) != expected:
            return f"expected {expected} permutations, got {len(self.sequence)}"
        if len(set(self.sequence)) != len(self.sequence):
            return "a permutation is repeated"
        symbols = tuple(range(1, self.n + 1))
        for i, current in enumerate(self.sequence):
            if tuple(sorted(current)) != symbols:
                return f"entry {i} is not a permutation of 1..{self.n}"
            nxt = self.sequence[(i + 1) % len(self.sequence)]
            moved = [p for p in range(self.n) if current[p] != nxt[p]]
            if len(self.sequence) > 1 and (len(moved) != 2 or moved[0] != 0):
                return f"step {i} changes positions {moved}, not the first and one other"
        return None


def _star_transpositions_ehrlich(n: int) -> List[Permutation]:
    # Ehrlich's star-transposition scheme: a holds the permutation, b the reflected
    # index table, c the mixed-radix counter.
    a = list(range(n))
    b = list(range(n))
    c = [0] * (n + 1)
    result = [tuple(a)]
    while True:
        k = 1
        while c[k] == k:
            c[k] = 0
            k += 1
        if k == n:
            break
        c[k] += 1
        a[0], a[b[k]] = a[b[k]], a[0]
        result.append(tuple(a))
        lo, hi = 1, k - 1
        while lo < hi:
            b[lo], b[hi] = b[hi], b[lo]
            lo += 1
            hi -= 1
    return [tuple(s + 1 for s in p) for p in result]


def star_graph_adjacency(n: int) -> Tuple[List[Permutation], List[List[int]]]:
    """Nodes and neighbor lists of the star-transposition Cayley graph on 1..n."""
    nodes = sorted(permutations(range(1, n + 1)))
    index = {p: i for i, p in enumerate(nodes)}
    adjacency = []
    for p in nodes:
        nbrs = []
        for t in range(1, n):
            q = list(p)
            q[0], q[t] = q[t], q[0]
            nbrs.append(index[tuple(q)])
        adjacency.append(sorted(nbrs))
    return nodes, adjacency


def star_transposition_search(n: int) -> PermutationCode:
    """Hamiltonian cycle of the star-transposition Cayley graph found by exhaustive search."""
    from modules.solvers import hamiltonian_cycle

    if n < 2 or n > SEARCH_LIMIT:
        raise PreconditionError(f"exhaustive search supports 2 <= n <= {SEARCH_LIMIT} (got {n})")
    nodes, adjacency = star_graph_adjacency(n)
    verdict = hamiltonian_cycle(adjacency)
    if verdict.cycle is None:
        raise ConstructionError(f"no star-transposition cycle found for n={n}")
    return PermutationCode(n, [nodes[i] for i in verdict.cycle])


def star_transposition_code(n: int) -> PermutationCode:
    """
    List all permutations of 1..n cyclically by star transpositions.

    Args:
        n: Number of symbols, at least 2

    Returns:
        PermutationCode: The listing, validated before it is returned
    """
    if n < 2:
        raise PreconditionError(f"star-transposition codes need n >= 2 (got {n})")
    code = PermutationCode(n, _star_transpositions_ehrlich(n))
    problem = code.violation()
    if problem is None:
        return code
    logger.warning(f"star-transposition listing for n={n} is invalid ({problem}); searching instead")
    if n <= SEARCH_LIMIT:
        return star_transposition_search(n)
    raise ConstructionError(f"star-transposition listing for n={n} is invalid: {problem}")
