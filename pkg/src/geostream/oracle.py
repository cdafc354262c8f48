"""Exact maximum independent set and clique for small instances.

Ground truth for every approximation and gap test in this package. The
intersection graph is held as one bitmask row per object; the solver is a
depth-first branch and bound over those masks with a greedy initial bound.
Branching always splits on the lowest-index remaining vertex, include
branch first, and prunes only branches that cannot reach the best size
found so far; the first optimum reached in that order is the
lexicographically smallest one, which keeps witnesses deterministic.

A size cap (default 64) keeps instances at validation scale; the solver is
itself cross-validated against exhaustive subset enumeration in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .geometry import GeomObject, kind_of, objects_intersect

DEFAULT_CAP = 64


class CapExceededError(ValueError):
    """More objects than the oracle is willing to solve exactly."""


class MixedKindError(TypeError):
    """The objects do not all share one geometric kind."""


@dataclass(frozen=True)
class AdjacencyMatrix:
    """Symmetric intersection graph with a zero diagonal, one bitmask per row."""

    kind: str
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError("row count must equal n")
        for u, row in enumerate(self.rows):
            if row >> self.n:
                raise ValueError("row has bits outside 0..n-1")
            if (row >> u) & 1:
                raise ValueError("diagonal must be zero")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if ((self.rows[u] >> v) & 1) != ((self.rows[v] >> u) & 1):
                    raise ValueError("matrix must be symmetric")

    def edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def complement(self) -> AdjacencyMatrix:
        full = (1 << self.n) - 1
        rows = tuple((full & ~row) & ~(1 << u) for u, row in enumerate(self.rows))
        return AdjacencyMatrix(self.kind, self.n, rows)


def intersection_graph(
    objects: Sequence[GeomObject], cap: int = DEFAULT_CAP
) -> AdjacencyMatrix:
    """Pairwise-intersection graph of same-kind objects (n <= cap)."""
    objs = list(objects)
    n = len(objs)
    if n > cap:
        raise CapExceededError(f"{n} objects exceed the oracle cap {cap}")
    kinds = {kind_of(o) for o in objs}
    if len(kinds) > 1:
        raise MixedKindError(f"objects of several kinds: {sorted(kinds)}")
    kind = kinds.pop() if kinds else "empty"
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if objects_intersect(objs[u], objs[v]):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return AdjacencyMatrix(kind, n, tuple(rows))


def _greedy_size(n: int, closed: list[int]) -> int:
    # Take vertices of minimum remaining degree; a decent initial bound.
    remaining = (1 << n) - 1
    size = 0
    while remaining:
        best_v = -1
        best_deg = n + 1
        m = remaining
        while m:
            lsb = m & -m
            v = lsb.bit_length() - 1
            deg = (closed[v] & remaining).bit_count()
            if deg < best_deg:
                best_deg = deg
                best_v = v
            m ^= lsb
        remaining &= ~closed[best_v]
        size += 1
    return size


def solve_max_independent_set(adj: AdjacencyMatrix) -> tuple[int, tuple[int, ...]]:
    """Exact (size, witness) for a prebuilt adjacency matrix."""
    n = adj.n
    if n == 0:
        return 0, ()
    closed = [row | (1 << u) for u, row in enumerate(adj.rows)]

    best_size = _greedy_size(n, closed)
    best_set: tuple[int, ...] | None = None
    # Iterative DFS; stack frames are (candidate mask, chosen so far).
    stack: list[tuple[int, tuple[int, ...]]] = [((1 << n) - 1, ())]
    while stack:
        cand, chosen = stack.pop()
        if len(chosen) + cand.bit_count() < best_size:
            continue
        if not cand:
            if len(chosen) > best_size or (
                len(chosen) == best_size and best_set is None
            ):
                best_size = len(chosen)
                best_set = chosen
            continue
        v = (cand & -cand).bit_length() - 1
        # Explore the include branch first: pushed last, popped first.
        stack.append((cand & ~(1 << v), chosen))
        stack.append((cand & ~closed[v], chosen + (v,)))
    # A maximum set's path is never pruned (its potential stays >= best_size),
    # so the search always records one.
    assert best_set is not None
    return best_size, best_set


def max_independent_set(
    objects: Sequence[GeomObject], cap: int = DEFAULT_CAP
) -> tuple[int, tuple[int, ...]]:
    """Exact independence number and the lexicographically least witness."""
    return solve_max_independent_set(intersection_graph(objects, cap))


def max_clique(
    objects: Sequence[GeomObject], cap: int = DEFAULT_CAP
) -> tuple[int, tuple[int, ...]]:
    """Exact clique number, solved as independent set on the complement."""
    return solve_max_independent_set(intersection_graph(objects, cap).complement())
