"""Graph enumeration and sampling, criterion validation, and report assembly.

Random graphs come from an explicit 64-bit linear congruential generator
(MMIX constants: x' = 6364136223846793005*x + 1442695040888963407 mod 2^64,
uniform draw = x' >> 11 scaled by 2^-53) so that identical seeds reproduce
identical corpora on any platform.  Edge bits are drawn in the column-major
pair order (0,1), (0,2), (1,2), (0,3), ... used throughout.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .graph import Graph
from .graph6 import write_graph6
from .families import remark_family
from .closure import k_closure
from .hamilton import (
    CapacityError,
    DEFAULT_ORACLE_CAP,
    hamilton_profile,
    has_hamiltonian_cycle,
    has_hamiltonian_path,
    is_hamilton_connected,
)
from .certify import CriterionId, CriterionStatus, Prediction, apply_criterion, verdict_is_sound
from .spectral import adjacency_spectral_radius, signless_spectral_radius

ENUMERATION_CAP = 7  # 2^21 labeled graphs; beyond this use sampling


class Lcg:
    """Seedable 64-bit linear congruential generator (MMIX multiplier)."""

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.MULTIPLIER * self.state + self.INCREMENT) & self.MASK
        return self.state

    def uniform(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)

    def randrange(self, n: int) -> int:
        return int(self.uniform() * n) % n

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]


def triangle_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in column-major order; bit i of an edge mask is pair i."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> bit & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(rows))


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labeled graphs on n vertices, in edge-mask order."""
    if n > ENUMERATION_CAP:
        raise CapacityError(
            f"exhaustive enumeration capped at order {ENUMERATION_CAP}; use sample_random")
    npairs = n * (n - 1) // 2
    for mask in range(1 << npairs):
        yield graph_from_edge_mask(n, mask)


def sample_random(n: int, p: float, count: int, seed: int) -> Iterator[Graph]:
    """`count` independent G(n, p) draws from the documented generator."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = Lcg(seed)
    npairs = n * (n - 1) // 2
    for _ in range(count):
        mask = 0
        for bit in range(npairs):
            if rng.uniform() < p:
                mask |= 1 << bit
        yield graph_from_edge_mask(n, mask)


def random_regular(n: int, degree: int, seed: int) -> Graph:
    """Uniform-ish d-regular graph by the pairing model with rejection."""
    if degree < 0 or degree >= n:
        raise ValueError(f"degree must be in 0..{n - 1}, got {degree}")
    if (n * degree) % 2:
        raise ValueError(f"no {degree}-regular graph on {n} vertices (odd product)")
    rng = Lcg(seed)
    while True:
        stubs = [v for v in range(n) for _ in range(degree)]
        rng.shuffle(stubs)
        rows = [0] * n
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or rows[u] >> v & 1:
                ok = False
                break
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if ok:
            return Graph(n, tuple(rows))


class ValidationMode(Enum):
    EXHAUSTIVE_LABELED = "exhaustive"
    RANDOM_SAMPLE = "random"


@dataclass(frozen=True)
class ValidationReport:
    criterion: str
    orders: tuple[int, ...]
    mode: str
    graphs_checked: int
    predictions_issued: int
    exceptions_matched: int
    violations: tuple[str, ...]
    boundary_cases: int
    elapsed_ms: int

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "orders": list(self.orders),
            "mode": self.mode,
            "graphs_checked": self.graphs_checked,
            "predictions_issued": self.predictions_issued,
            "exceptions_matched": self.exceptions_matched,
            "violations": list(self.violations),
            "boundary_cases": self.boundary_cases,
            "elapsed_ms": self.elapsed_ms,
        }


def merge_reports(reports: Sequence[ValidationReport]) -> ValidationReport:
    """Combine reports from a partitioned run: counters add, violations sort."""
    if not reports:
        raise ValueError("nothing to merge")
    if len({(r.criterion, r.mode) for r in reports}) != 1:
        raise ValueError("cannot merge reports for different criteria or modes")
    orders = tuple(o for r in reports for o in r.orders)
    return ValidationReport(
        criterion=reports[0].criterion,
        orders=orders,
        mode=reports[0].mode,
        graphs_checked=sum(r.graphs_checked for r in reports),
        predictions_issued=sum(r.predictions_issued for r in reports),
        exceptions_matched=sum(r.exceptions_matched for r in reports),
        violations=tuple(sorted(v for r in reports for v in r.violations)),
        boundary_cases=sum(r.boundary_cases for r in reports),
        elapsed_ms=sum(r.elapsed_ms for r in reports),
    )


@lru_cache(maxsize=1 << 17)
def _profile_cached(g: Graph):
    return hamilton_profile(g)


def _graph_stream(orders, mode, samples, p, seed) -> Iterator[Graph]:
    rng_seed = seed
    for i, n in enumerate(orders):
        if mode is ValidationMode.EXHAUSTIVE_LABELED:
            yield from enumerate_labeled(n)
        else:
            yield from sample_random(n, p, samples, rng_seed + i)


def validate(criterion: CriterionId, orders: Iterable[int],
             mode: ValidationMode = ValidationMode.EXHAUSTIVE_LABELED, *,
             samples: int = 500, p: float = 0.5, seed: int = 1,
             threshold_shift: float = 0.0) -> ValidationReport:
    """Check one criterion against the exact oracle over a graph corpus.

    Every graph is scored with apply_criterion, then the oracle, then the
    soundness gate; unsound verdicts record the graph6 string as a
    violation.  Boundary statuses are counted, never treated as violations.
    `threshold_shift` is the fault-injection hook (see apply_criterion).
    """
    orders = tuple(orders)
    for n in orders:
        if n > DEFAULT_ORACLE_CAP:
            raise CapacityError(f"order {n} above oracle cap {DEFAULT_ORACLE_CAP}")
    start = time.perf_counter()
    checked = predictions = exceptions = boundary = 0
    violations = []
    for g in _graph_stream(orders, mode, samples, p, seed):
        checked += 1
        verdict = apply_criterion(g, criterion, threshold_shift=threshold_shift)
        if verdict.status is CriterionStatus.BOUNDARY:
            boundary += 1
        if verdict.predicted is not Prediction.NO_PREDICTION:
            predictions += 1
        if verdict.exception is not None:
            exceptions += 1
        if not verdict_is_sound(g, verdict, _profile_cached(g)):
            violations.append(write_graph6(g))
    return ValidationReport(
        criterion=criterion.value,
        orders=orders,
        mode=mode.value,
        graphs_checked=checked,
        predictions_issued=predictions,
        exceptions_matched=exceptions,
        violations=tuple(sorted(violations)),
        boundary_cases=boundary,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
    )


@lru_cache(maxsize=1 << 17)
def _path_cached(g: Graph) -> bool:
    return has_hamiltonian_path(g)


@lru_cache(maxsize=1 << 17)
def _cycle_cached(g: Graph) -> bool:
    return has_hamiltonian_cycle(g)


@lru_cache(maxsize=1 << 17)
def _hc_cached(g: Graph) -> bool:
    return is_hamilton_connected(g)


def validate_closure_equivalence(orders: Iterable[int],
                                 mode: ValidationMode = ValidationMode.EXHAUSTIVE_LABELED, *,
                                 samples: int = 500, p: float = 0.5,
                                 seed: int = 1) -> ValidationReport:
    """Check the three closure equivalences against the exact oracle.

    For each graph: a spanning path survives the (n-1)-closure, a spanning
    cycle the n-closure, and Hamilton-connectivity the (n+1)-closure, in
    both directions.
    """
    orders = tuple(orders)
    for n in orders:
        if n > DEFAULT_ORACLE_CAP:
            raise CapacityError(f"order {n} above oracle cap {DEFAULT_ORACLE_CAP}")
    start = time.perf_counter()
    checked = 0
    violations = []
    for g in _graph_stream(orders, mode, samples, p, seed):
        checked += 1
        n = g.n
        ok = (_path_cached(g) == _path_cached(k_closure(g, n - 1).graph)
              and _cycle_cached(g) == _cycle_cached(k_closure(g, n).graph)
              and _hc_cached(g) == _hc_cached(k_closure(g, n + 1).graph))
        if not ok:
            violations.append(write_graph6(g))
    return ValidationReport(
        criterion="ClosureEquivalence",
        orders=orders,
        mode=mode.value,
        graphs_checked=checked,
        predictions_issued=0,
        exceptions_matched=0,
        violations=tuple(sorted(violations)),
        boundary_cases=0,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
    )


@dataclass(frozen=True)
class RemarkRow:
    """One admissible (r, s) row of the two-cliques-joined-to-a-clique scan."""

    r: int
    s: int
    n: int
    f_at_n_minus_2: int    # (2r-1)(r-1) - s, exact
    g_at_2n_minus_4: int   # 4(r-1)^2 - 2s, exact
    mu: float
    gamma: float
    mu_below: bool         # mu <  n - 2
    gamma_above: bool      # gamma >= 2(n - 2)
    oracle_has_cycle: bool | None

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "n": self.n,
            "f_at_n_minus_2": self.f_at_n_minus_2,
            "g_at_2n_minus_4": self.g_at_2n_minus_4,
            "mu": self.mu,
            "gamma": self.gamma,
            "mu_below": self.mu_below,
            "gamma_above": self.gamma_above,
            "oracle_has_cycle": self.oracle_has_cycle,
        }


def admissible_remark_window(r: int) -> range:
    """Admissible s values for a given r: 2(r-1)^2 <= s < (2r-1)(r-1)."""
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    return range(2 * (r - 1) ** 2, (2 * r - 1) * (r - 1))


def remark_scan(r_values: Iterable[int],
                oracle_cap: int = DEFAULT_ORACLE_CAP) -> list[RemarkRow]:
    """Scan the adjacency-vs-signless comparison family over admissible (r, s).

    Each row checks the exact sign conditions (f(n-2) > 0, g(2n-4) <= 0) and
    the spectral gates (mu < n-2, gamma >= 2(n-2)); the oracle column is
    filled only when the order is within the oracle cap.  The window is
    nonempty for every r >= 2.
    """
    rows = []
    for r in r_values:
        for s in admissible_remark_window(r):
            n = 2 * r + s
            g = remark_family(r, s)
            mu = adjacency_spectral_radius(g)
            gamma = signless_spectral_radius(g)
            f_val = (2 * r - 1) * (r - 1) - s
            g_val = 4 * (r - 1) ** 2 - 2 * s
            row = RemarkRow(
                r=r, s=s, n=n,
                f_at_n_minus_2=f_val,
                g_at_2n_minus_4=g_val,
                mu=mu, gamma=gamma,
                mu_below=mu < n - 2 - 1e-9,
                gamma_above=gamma >= 2 * (n - 2) - 1e-9,
                oracle_has_cycle=has_hamiltonian_cycle(g) if n <= oracle_cap else None,
            )
            if not (row.f_at_n_minus_2 > 0 and row.g_at_2n_minus_4 <= 0
                    and row.mu_below and row.gamma_above):
                raise RuntimeError(f"sign conditions failed at r={r}, s={s}: {row}")
            rows.append(row)
    return rows


def canonical_graph6(g: Graph) -> str:
    """Minimum graph6 string over all vertex relabelings (n <= 7 only).

    Brute-force canonical form for deduplication and recognizer tests; not
    a general isomorphism engine.
    """
    if g.n > ENUMERATION_CAP:
        raise CapacityError(f"canonical form capped at order {ENUMERATION_CAP}")
    return min(write_graph6(g.relabel(perm)) for perm in permutations(range(g.n)))
