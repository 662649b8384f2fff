"""Independent oracles and fixtures shared across the test suite.

Everything here is deliberately implemented on a different route than the
library: eigenvalues come from exact-arithmetic inertia bisection instead
of LAPACK, graph6 decoding walks bits one at a time, and the closure
reference processes candidate pairs in random order.
"""

from __future__ import annotations

import random
from fractions import Fraction

from hamspec import Graph, from_edges


class ZeroPivot(Exception):
    pass


def eigen_count_below(matrix, x: Fraction) -> int:
    """Eigenvalues of a symmetric integer matrix strictly below x.

    Counts negative pivots of the LDL^T factorization of M - x*I in exact
    rational arithmetic (Sylvester's law of inertia).
    """
    n = len(matrix)
    a = [[Fraction(matrix[i][j]) - (x if i == j else 0) for j in range(n)]
         for i in range(n)]
    negative = 0
    for k in range(n):
        pivot = a[k][k]
        if pivot == 0:
            raise ZeroPivot
        if pivot < 0:
            negative += 1
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return negative


def largest_eigenvalue_bisect(matrix, hi: int) -> float:
    """Largest eigenvalue by bisection on the eigenvalue-counting function.

    The query point is nudged by 1e-12 on an exact zero pivot; the nudge is
    far below the 1e-10 bisection width.
    """
    n = len(matrix)

    def all_below(x: Fraction) -> bool:
        while True:
            try:
                return eigen_count_below(matrix, x) == n
            except ZeroPivot:
                x += Fraction(1, 10**12)

    lo, hi = Fraction(-1), Fraction(hi)
    assert all_below(hi)
    while hi - lo > Fraction(1, 10**10):
        mid = (lo + hi) / 2
        if all_below(mid):
            hi = mid
        else:
            lo = mid
    return float((lo + hi) / 2)


def adjacency_int_matrix(g: Graph) -> list[list[int]]:
    return [[g.rows[i] >> j & 1 for j in range(g.n)] for i in range(g.n)]


def signless_int_matrix(g: Graph) -> list[list[int]]:
    m = adjacency_int_matrix(g)
    for v in range(g.n):
        m[v][v] = g.degree(v)
    return m


def largest_root_bisect(poly, vertex: float, hi: float) -> float:
    """Largest root of an upward parabola, bisected from its vertex."""
    assert poly(vertex) <= 0
    while poly(hi) <= 0:
        hi *= 2
    lo = vertex
    while hi - lo > 1e-10:
        mid = (lo + hi) / 2
        if poly(mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def decode_graph6_reference(text: str) -> tuple[int, set[tuple[int, int]]]:
    """Minimal independent graph6 decoder, bit by bit."""
    vals = [ord(c) - 63 for c in text]
    n = vals[0]
    stream = []
    for v in vals[1:]:
        stream.extend((v >> k) & 1 for k in range(5, -1, -1))
    edges = set()
    idx = 0
    for j in range(n):
        for i in range(j):
            if stream[idx]:
                edges.add((i, j))
            idx += 1
    return n, edges


def closure_reference(g: Graph, k: int, rng: random.Random) -> Graph:
    """Closure computed by joining qualifying pairs in random order."""
    n = g.n
    rows = list(g.rows)
    degs = [r.bit_count() for r in rows]
    while True:
        cands = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if not rows[u] >> v & 1 and degs[u] + degs[v] >= k]
        if not cands:
            return Graph(n, tuple(rows))
        u, v = cands[rng.randrange(len(cands))]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        degs[u] += 1
        degs[v] += 1


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edges(n, edges)


def degree_preserving_rewire(g: Graph, steps: int, rng: random.Random) -> Graph:
    """Randomize by double edge swaps; the degree sequence is preserved."""
    rows = list(g.rows)
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if rows[u] >> v & 1]
    for _ in range(steps):
        if len(edges) < 2:
            break
        i, j = rng.randrange(len(edges)), rng.randrange(len(edges))
        (a, b), (c, d) = edges[i], edges[j]
        if len({a, b, c, d}) != 4:
            continue
        if rows[a] >> c & 1 or rows[b] >> d & 1:
            continue
        rows[a] = rows[a] & ~(1 << b) | (1 << c)
        rows[b] = rows[b] & ~(1 << a) | (1 << d)
        rows[c] = rows[c] & ~(1 << d) | (1 << a)
        rows[d] = rows[d] & ~(1 << c) | (1 << b)
        edges[i] = (min(a, c), max(a, c))
        edges[j] = (min(b, d), max(b, d))
    return Graph(g.n, tuple(rows))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def prism() -> Graph:
    return from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                          (0, 3), (1, 4), (2, 5)])


def complete_split(independent: int, clique: int) -> Graph:
    """Independent set joined completely to a clique."""
    n = independent + clique
    edges = [(u, v) for u in range(independent, n) for v in range(u + 1, n)]
    edges += [(u, v) for u in range(independent) for v in range(independent, n)]
    return from_edges(n, edges)
