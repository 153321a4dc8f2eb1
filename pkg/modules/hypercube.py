"""
Hypercube Module

This module provides Hamiltonian cycles and antipodal Hamiltonian paths of the hypercube
Q_n(b, c), whose vertices are the n-letter words over the two-letter alphabet {b, c}.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from modules.errors import ConstructionError, PreconditionError

# Configure logger
logger = logging.getLogger('recolor.hypercube')

# Square traversed on the two new coordinates when lifting a path from n to n + 2
_SQUARE = ("bb", "cb", "cc", "bc")


@dataclass
class HypercubeCode:
    """
    A Hamiltonian cycle or path of Q_n(b, c).

    Attributes:
        n: Dimension
        b: First letter
        c: Second letter
        sequence: Words in order, each a tuple of n letters
        cyclic: True for a cycle, False for a path
    """
    n: int
    b: object
    c: object
    sequence: List[Tuple]
    cyclic: bool

    def words(self) -> List[str]:
        return ["".join(str(letter) for letter in word) for word in self.sequence]

    def violation(self) -> Optional[str]:
        """Describe the first broken invariant, or None if the listing is valid."""
        if len(self.sequence) != 2 ** self.n:
            return f"expected {2 ** self.n} words, got {len(self.sequence)}"
        if len(set(self.sequence)) != len(self.sequence):
            return "a word is repeated"
        letters = {self.b, self.c}
        for i, word in enumerate(self.sequence):
            if len(word) != self.n or any(letter not in letters for letter in word):
                return f"word {i} is not an {self.n}-letter word over the alphabet"
        steps = len(self.sequence) if self.cyclic else len(self.sequence) - 1
        for i in range(steps):
            first, second = self.sequence[i], self.sequence[(i + 1) % len(self.sequence)]
            changed = sum(1 for p, q in zip(first, second) if p != q)
            if changed != 1:
                return f"step {i} changes {changed} coordinates"
        if not self.cyclic:
            if self.sequence[0] != (self.b,) * self.n or self.sequence[-1] != (self.c,) * self.n:
                return "path does not run from b...b to c...c"
        return None


def _check_letters(b, c) -> None:
    if b == c:
        raise PreconditionError("the two letters must differ")


def reflected_gray_cycle(n: int, b=0, c=1) -> HypercubeCode:
    """
    Reflected binary Gray code of Q_n(b, c), starting at b...b.

    Args:
        n: Dimension, at least 2
        b: Letter for bit 0
        c: Letter for bit 1
    """
    if n < 2:
        raise PreconditionError(f"Q_{n} has no Hamiltonian cycle; n must be at least 2")
    _check_letters(b, c)
    sequence = []
    for i in range(2 ** n):
        gray = i ^ (i >> 1)
        sequence.append(tuple(c if bit == "1" else b for bit in format(gray, f"0{n}b")))
    return HypercubeCode(n, b, c, sequence, True)


def antipodal_gray_path(n: int, b=0, c=1) -> HypercubeCode:
    """
    Hamiltonian path of Q_n(b, c) from b...b to c...c.

    Such a path exists if and only if n is odd. The path for n + 2 walks each word of
    the path for n around the square bb, cb, cc, bc on two new coordinates; every square
    is entered at the suffix where the previous one was left, and the last one turns in
    whichever direction ends at cc.

    Raises:
        PreconditionError: When n is even (b...b and c...c then lie on the same side of Q_n)
    """
    if n < 1:
        raise PreconditionError(f"dimension must be positive (got {n})")
    if n % 2 == 0:
        raise PreconditionError(
            f"Q_{n} has a Hamiltonian path from b...b to c...c only for odd n")
    _check_letters(b, c)
    path: List[str] = ["b", "c"]
    dim = 1
    while dim < n:
        lifted = []
        start = 0
        for i, word in enumerate(path):
            last = i == len(path) - 1
            direction = 1
            if last:
                if (start - 1) % 4 == 2:
                    direction = 1
                elif (start + 1) % 4 == 2:
                    direction = -1
                else:
                    raise ConstructionError(f"cannot close the lifted path at dimension {dim + 2}")
            for step in range(4):
                lifted.append(word + _SQUARE[(start + direction * step) % 4])
            start = (start + direction * 3) % 4
        path = lifted
        dim += 2
    sequence = [tuple(b if ch == "b" else c for ch in word) for word in path]
    return HypercubeCode(n, b, c, sequence, False)


def hypercube_adjacency(n: int) -> List[List[int]]:
    """Neighbor lists of Q_n with vertex i the word whose bit d is coordinate n-1-d."""
    return [sorted(i ^ (1 << d) for d in range(n)) for i in range(2 ** n)]


def antipodal_path_exists(n: int, node_budget: Optional[int] = None) -> bool:
    """Decide by exhaustive search whether Q_n has a Hamiltonian path from b...b to c...c."""
    from modules.solvers import hamiltonian_path

    if n < 1:
        raise PreconditionError(f"dimension must be positive (got {n})")
    return hamiltonian_path(hypercube_adjacency(n), 0, 2 ** n - 1, node_budget) is not None
