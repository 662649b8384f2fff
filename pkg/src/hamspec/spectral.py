"""Spectral radii and the bound battery with equality-case detection.

mu(G) is the largest adjacency eigenvalue, gamma(G) the largest eigenvalue
of the signless Laplacian D(G) + A(G).  Bounds are normalized to the form
lhs <= rhs, so slack = rhs - lhs and a bound holds iff slack >= -1e-9.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import Graph, degree_data
from . import recognizers

TOLERANCE = 1e-9      # bound comparisons
EQUALITY_TOL = 1e-8   # equality detection on float-valued bounds

BOUND_IDS = (
    "mu_edge_upper",       # mu <= -1/2 + sqrt(2m + 1/4)
    "dm_mean_upper",       # max(d+m) <= 2m/(n-1) + n - 2   (exact rationals)
    "gamma_dm_upper",      # gamma <= max(d+m)
    "gamma_mean_upper",    # gamma <= 2m/(n-1) + n - 2
    "hofmeister_lower",    # sum d^2 <= n * mu^2
    "gamma_ratio_lower",   # Z/e <= gamma                    (needs e > 0)
    "gamma_two_mu_lower",  # 2*mu <= gamma
)


def symmetric_eigen_max(matrix) -> float:
    """Largest eigenvalue of a real symmetric matrix.

    Input symmetry is enforced to 1e-12.  Backed by LAPACK's symmetric
    solver, which is deterministic across runs for identical input.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise ValueError("empty matrix")
    if np.abs(a - a.T).max() > 1e-12:
        raise ValueError("matrix is not symmetric within 1e-12")
    return float(np.linalg.eigvalsh(a)[-1])


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for v, row in enumerate(g.rows):
        m = row
        while m:
            b = m & -m
            m -= b
            a[v, b.bit_length() - 1] = 1.0
    return a


def signless_laplacian_matrix(g: Graph) -> np.ndarray:
    a = adjacency_matrix(g)
    return a + np.diag([float(d) for d in g.degrees()])


def adjacency_spectral_radius(g: Graph) -> float:
    return symmetric_eigen_max(adjacency_matrix(g))


def signless_spectral_radius(g: Graph) -> float:
    return symmetric_eigen_max(signless_laplacian_matrix(g))


@dataclass(frozen=True)
class SpectralSummary:
    mu: float
    gamma: float
    edge_count: int
    degrees: tuple[int, ...]
    avg_neighbor: tuple[Fraction, ...]
    degree_square_sum: int
    max_d_plus_m: Fraction


def spectral_summary(g: Graph) -> SpectralSummary:
    degs, avg = degree_data(g)
    return SpectralSummary(
        mu=adjacency_spectral_radius(g),
        gamma=signless_spectral_radius(g),
        edge_count=g.edge_count,
        degrees=tuple(degs),
        avg_neighbor=tuple(avg),
        degree_square_sum=sum(d * d for d in degs),
        max_d_plus_m=max(d + m for d, m in zip(degs, avg)),
    )


@dataclass(frozen=True)
class BoundReport:
    bound: str
    lhs: float
    rhs: float
    slack: float
    holds: bool
    equality: bool
    equality_case_expected: bool

    def to_json_dict(self) -> dict:
        return {
            "bound": self.bound,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "holds": self.holds,
            "equality": self.equality,
            "equality_expected": self.equality_case_expected,
        }


def _float_bound(bound: str, lhs: float, rhs: float, expected: bool) -> BoundReport:
    slack = rhs - lhs
    return BoundReport(bound, lhs, rhs, slack,
                       holds=slack >= -TOLERANCE,
                       equality=abs(slack) <= EQUALITY_TOL,
                       equality_case_expected=expected)


def bound_suite(g: Graph, summary: SpectralSummary | None = None) -> list[BoundReport]:
    """Evaluate every applicable bound on g, one report per bound.

    Skipped for lack of definition: the two mean bounds at n = 1 (their
    right-hand sides divide by n - 1) and the degree-ratio bound when
    e(G) = 0.  The degree-mean bound is compared in exact rational
    arithmetic, so its equality flag carries no tolerance.
    """
    s = summary or spectral_summary(g)
    n, m = g.n, s.edge_count
    out = []

    rhs = -0.5 + math.sqrt(2 * m + 0.25)
    out.append(_float_bound("mu_edge_upper", s.mu, rhs,
                            recognizers.is_complete_plus_isolated(g)))

    if n >= 2:
        mean_rhs = Fraction(2 * m, n - 1) + (n - 2)
        expected = recognizers.has_universal_vertex(g) or recognizers.is_clique_plus_isolated(g)
        slack = mean_rhs - s.max_d_plus_m
        out.append(BoundReport("dm_mean_upper", float(s.max_d_plus_m), float(mean_rhs),
                               float(slack), holds=slack >= 0, equality=slack == 0,
                               equality_case_expected=expected))

        if g.is_connected():
            mean_expected = recognizers.is_star(g) or recognizers.is_complete(g)
        else:
            mean_expected = recognizers.is_clique_plus_isolated(g)
        out.append(_float_bound("gamma_mean_upper", s.gamma, float(mean_rhs), mean_expected))

    out.append(_float_bound(
        "gamma_dm_upper", s.gamma, float(s.max_d_plus_m),
        recognizers.all_nontrivial_components_regular_or_semiregular(g)))

    out.append(_float_bound("hofmeister_lower", float(s.degree_square_sum),
                            n * s.mu * s.mu, False))

    if m > 0:
        out.append(_float_bound("gamma_ratio_lower",
                                float(Fraction(s.degree_square_sum, m)), s.gamma, False))

    out.append(_float_bound("gamma_two_mu_lower", 2 * s.mu, s.gamma, False))

    # keep the declared ordering regardless of skips
    order = {b: i for i, b in enumerate(BOUND_IDS)}
    out.sort(key=lambda r: order[r.bound])
    return out
