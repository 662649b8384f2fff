"""Exact Hamiltonicity oracles and the combinatorial sufficient conditions.

The oracle is a subset dynamic program over (visited set, endpoint) states
run from a fixed start vertex: O(2^n * n^2) time and one 2^n-entry table,
exact for every input.  Hamilton-connectivity reads all-pairs answers off
n such runs (one per start) instead of one per vertex pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .graph import Graph

DEFAULT_ORACLE_CAP = 20
HARD_ORACLE_CAP = 24  # the 2^n endpoint table is the binding memory constraint


class CapacityError(Exception):
    """Input larger than the configured exact-oracle capacity."""


@dataclass(frozen=True)
class HamiltonProfile:
    has_path: bool
    has_cycle: bool
    hamilton_connected: bool
    witness_path: tuple[int, ...] | None
    failing_pair: tuple[int, int] | None

    def to_json_dict(self) -> dict:
        return {
            "has_path": self.has_path,
            "has_cycle": self.has_cycle,
            "hamilton_connected": self.hamilton_connected,
            "witness_path": list(self.witness_path) if self.witness_path else None,
            "failing_pair": list(self.failing_pair) if self.failing_pair else None,
        }


def _check_cap(g: Graph, max_order: int | None) -> None:
    cap = DEFAULT_ORACLE_CAP if max_order is None else max_order
    if cap > HARD_ORACLE_CAP:
        raise ValueError(f"oracle cap cannot exceed {HARD_ORACLE_CAP}")
    if g.n > cap:
        raise CapacityError(f"order {g.n} above oracle cap {cap}")


def _endpoint_table(rows: tuple[int, ...], n: int, start: int) -> list[int]:
    """dp[mask] = endpoint set of simple paths from `start` covering `mask`."""
    dp = [0] * (1 << n)
    dp[1 << start] = 1 << start
    for mask in range(1 << start, 1 << n):
        ends = dp[mask]
        if not ends:
            continue
        free = ~mask
        while ends:
            vbit = ends & -ends
            ends -= vbit
            ext = rows[vbit.bit_length() - 1] & free
            while ext:
                ubit = ext & -ext
                ext -= ubit
                dp[mask | ubit] |= ubit
    return dp


def _reconstruct(rows, dp, start: int, end: int, n: int) -> tuple[int, ...]:
    full = (1 << n) - 1
    path = [end]
    mask, cur = full, end
    while mask != 1 << start:
        prev_mask = mask ^ (1 << cur)
        cands = dp[prev_mask] & rows[cur]
        cur = (cands & -cands).bit_length() - 1
        mask = prev_mask
        path.append(cur)
    path.reverse()
    return tuple(path)


def hamilton_profile(g: Graph, max_order: int | None = None) -> HamiltonProfile:
    """Exact path / cycle / Hamilton-connectivity answers with witnesses.

    Conventions for tiny orders: the one-vertex graph has a Hamiltonian path
    and is Hamilton-connected (vacuously); an adjacent pair is
    Hamilton-connected; cycles need n >= 3.  Disconnected graphs
    short-circuit to all-false.  The witness is the first path found in
    (start, endpoint) order; the failing pair is the lexicographically
    smallest pair with no spanning path.
    """
    _check_cap(g, max_order)
    n = g.n
    if n == 1:
        return HamiltonProfile(True, False, True, (0,), None)
    if not g.is_connected():
        return HamiltonProfile(False, False, False, None, (0, 1))
    rows = g.rows
    full = (1 << n) - 1
    has_path = False
    has_cycle = False
    connected_all = True
    witness = None
    failing = None
    for s in range(n):
        dp = _endpoint_table(rows, n, s)
        ends = dp[full]
        if s == 0 and n >= 3 and ends & rows[0]:
            has_cycle = True
        if ends and not has_path:
            has_path = True
            end = (ends & -ends).bit_length() - 1
            witness = _reconstruct(rows, dp, s, end, n)
        if connected_all:
            missing = (full ^ (1 << s)) & ~ends
            if missing:
                connected_all = False
                failing = (s, (missing & -missing).bit_length() - 1)
    return HamiltonProfile(has_path, has_cycle, connected_all, witness, failing)


def has_hamiltonian_path(g: Graph, max_order: int | None = None) -> bool:
    _check_cap(g, max_order)
    if g.n == 1:
        return True
    if not g.is_connected():
        return False
    full = (1 << g.n) - 1
    return any(_endpoint_table(g.rows, g.n, s)[full] for s in range(g.n))


def has_hamiltonian_cycle(g: Graph, max_order: int | None = None) -> bool:
    _check_cap(g, max_order)
    if g.n < 3 or not g.is_connected():
        return False
    full = (1 << g.n) - 1
    return bool(_endpoint_table(g.rows, g.n, 0)[full] & g.rows[0])


def is_hamilton_connected(g: Graph, max_order: int | None = None) -> bool:
    _check_cap(g, max_order)
    if g.n == 1:
        return True
    if not g.is_connected():
        return False
    full = (1 << g.n) - 1
    return all(_endpoint_table(g.rows, g.n, s)[full] == full ^ (1 << s)
               for s in range(g.n))


@dataclass(frozen=True)
class DegreeSumCheck:
    ore_path: bool        # every nonadjacent pair sums to >= n - 1
    ore_cycle: bool       # >= n
    erdos_gallai_hc: bool # >= n + 1


def degree_sum_check(g: Graph) -> DegreeSumCheck:
    """Minimum nonadjacent degree sum against the three classical thresholds.

    All flags are vacuously true on complete graphs.
    """
    n = g.n
    degs = g.degrees()
    lowest = None
    for u in range(n):
        for v in range(u + 1, n):
            if not g.rows[u] >> v & 1:
                s = degs[u] + degs[v]
                if lowest is None or s < lowest:
                    lowest = s
    if lowest is None:
        return DegreeSumCheck(True, True, True)
    return DegreeSumCheck(lowest >= n - 1, lowest >= n, lowest >= n + 1)


class EdgeCountConclusion(Enum):
    NONE = "None"
    PATH_UNLESS_CLIQUE_PLUS_ISOLATED = "PathUnlessCliquePlusIsolated"
    CYCLE_UNLESS_CLIQUE_PLUS_PENDANT = "CycleUnlessCliquePlusPendant"
    HC_UNLESS_CLIQUE_PLUS_TWO_EDGES = "HamiltonConnectedUnlessCliquePlusTwoEdges"


@dataclass(frozen=True)
class EdgeCountClassification:
    r: int  # e(G) - C(n-1, 2)
    conclusion: EdgeCountConclusion


def edge_count_classification(g: Graph) -> EdgeCountClassification:
    """Strongest conclusion available from the edge-count surplus r.

    r >= 2 forces Hamilton-connectivity, r >= 1 a Hamiltonian cycle and
    r >= 0 a Hamiltonian path, in each case with a single exceptional graph
    (the near-complete family of the matching conclusion name).
    """
    r = g.edge_count - comb(g.n - 1, 2)
    if r >= 2:
        c = EdgeCountConclusion.HC_UNLESS_CLIQUE_PLUS_TWO_EDGES
    elif r == 1:
        c = EdgeCountConclusion.CYCLE_UNLESS_CLIQUE_PLUS_PENDANT
    elif r == 0:
        c = EdgeCountConclusion.PATH_UNLESS_CLIQUE_PLUS_ISOLATED
    else:
        c = EdgeCountConclusion.NONE
    return EdgeCountClassification(r, c)
