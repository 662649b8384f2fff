"""Immutable bit-row graphs and the basic graph algebra.

Vertices are the integers 0..n-1.  Row v is an integer whose bit u is set
iff u and v are adjacent, so neighborhood intersections, degree counts and
connectivity all reduce to machine-word operations for n <= 62.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 62  # keeps every row in one machine word and the graph6 order in one byte


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph, adjacency stored as one bitmask row per vertex."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} has neighbor bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            m = row
            while m:
                b = m & -m
                m -= b
                u = b.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    # -- basic queries ----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            m = self.rows[u] >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                m -= b
                yield (u, b.bit_length() - 1)

    # -- structure --------------------------------------------------------

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by least vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 0
            frontier = 1 << v
            while frontier:
                comp |= frontier
                nxt = 0
                m = frontier
                while m:
                    b = m & -m
                    m -= b
                    nxt |= self.rows[b.bit_length() - 1]
                frontier = nxt & ~comp
            comps.append(comp)
            seen |= comp
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Image of the graph under the vertex map v -> perm[v]."""
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            r = 0
            m = row
            while m:
                b = m & -m
                m -= b
                r |= 1 << perm[b.bit_length() - 1]
            rows[perm[v]] = r
        return Graph(self.n, tuple(rows))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        mask -= b
        out.append(b.bit_length() - 1)
    return out


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates and reversed pairs collapse."""
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop ({u}, {v}) not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row ^ (1 << v)) for v, row in enumerate(g.rows)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    if n > MAX_ORDER:
        raise ValueError(f"combined order {n} exceeds {MAX_ORDER}")
    rows = list(g1.rows) + [row << g1.n for row in g2.rows]
    return Graph(n, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    n = g1.n + g2.n
    if n > MAX_ORDER:
        raise ValueError(f"combined order {n} exceeds {MAX_ORDER}")
    left = (1 << g1.n) - 1
    right = ((1 << n) - 1) ^ left
    rows = [row | right for row in g1.rows]
    rows += [(row << g1.n) | left for row in g2.rows]
    return Graph(n, tuple(rows))


def degree_data(g: Graph) -> tuple[list[int], list[Fraction]]:
    """Degrees d(v) and exact average neighbor degrees m(v).

    m(v) is the mean degree over N(v), and 0 by convention when v is isolated.
    """
    degs = g.degrees()
    avg = []
    for v in range(g.n):
        d = degs[v]
        if d == 0:
            avg.append(Fraction(0))
        else:
            total = 0
            m = g.rows[v]
            while m:
                b = m & -m
                m -= b
                total += degs[b.bit_length() - 1]
            avg.append(Fraction(total, d))
    return degs, avg
