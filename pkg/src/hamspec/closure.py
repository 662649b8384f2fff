"""The degree-sum closure operator.

The k-closure repeatedly joins nonadjacent pairs whose degree sum is at
least k until none remain.  The fixpoint is unique whatever the processing
order; pairs are scanned in lexicographic order so the added-edge list is
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class ClosureResult:
    graph: Graph
    added_edges: tuple[tuple[int, int], ...]
    k: int


def k_closure(g: Graph, k: int) -> ClosureResult:
    """Close g under "join nonadjacent pairs with degree sum >= k".

    k = 0 (and any k below the least degree sum) yields the complete graph.
    """
    n = g.n
    rows = list(g.rows)
    degs = [r.bit_count() for r in rows]
    added: list[tuple[int, int]] = []
    changed = True
    while changed:
        changed = False
        for u in range(n):
            for v in range(u + 1, n):
                if not rows[u] >> v & 1 and degs[u] + degs[v] >= k:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                    degs[u] += 1
                    degs[v] += 1
                    added.append((u, v))
                    changed = True
    return ClosureResult(Graph(n, tuple(rows)), tuple(added), k)
