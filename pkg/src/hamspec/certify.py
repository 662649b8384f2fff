"""The six spectral criteria with exception-family recognition.

Each criterion compares one spectral radius (of the graph or its
complement) against an order-dependent threshold and, when satisfied,
predicts a Hamiltonian property unless the graph matches the criterion's
exceptional family.  Strictness is handled with a 1e-9 guard band so
rounding can never manufacture a prediction: strict criteria report
Boundary (and predict nothing) inside the band, non-strict criteria treat
exact equality as satisfied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .graph import Graph, complement
from .hamilton import HamiltonProfile
from .spectral import adjacency_spectral_radius, signless_spectral_radius
from . import recognizers

STRICTNESS_TOL = 1e-9


class CriterionId(Enum):
    T31_AdjacencyHC = "T31_AdjacencyHC"
    T32_ComplementAdjacencyHC = "T32_ComplementAdjacencyHC"
    T33_SignlessHC = "T33_SignlessHC"
    T34_ComplementSignlessHC = "T34_ComplementSignlessHC"
    T41_SignlessPathCycle = "T41_SignlessPathCycle"
    T42_AdjacencyPathCycle = "T42_AdjacencyPathCycle"


class CriterionStatus(Enum):
    SATISFIED = "Satisfied"
    NOT_SATISFIED = "NotSatisfied"
    BOUNDARY = "Boundary"


class Prediction(Enum):
    HAMILTON_CONNECTED = "HamiltonConnected"
    HAMILTONIAN_CYCLE = "HamiltonianCycle"
    HAMILTONIAN_PATH = "HamiltonianPath"
    NO_PREDICTION = "NoPrediction"


class FamilyTag(Enum):
    CLIQUE_PLUS_ISOLATED = "CliquePlusIsolated"
    CLIQUE_PLUS_PENDANT = "CliquePlusPendant"
    CLIQUE_PLUS_TWO_EDGES = "CliquePlusTwoEdges"
    JOIN_OF_TWO_CLIQUES = "JoinOfTwoCliques"
    BALANCED_COMPLETE_BIPARTITE = "BalancedCompleteBipartite"
    REGULAR_JOIN_CLIQUE = "RegularJoinClique"


# tags whose presence voids the complement-signless criterion's hypothesis,
# in the deterministic order used to pick the reported exception
_SPLIT_FAMILY_TAGS = (
    FamilyTag.JOIN_OF_TWO_CLIQUES,
    FamilyTag.BALANCED_COMPLETE_BIPARTITE,
    FamilyTag.REGULAR_JOIN_CLIQUE,
)

_RECOGNIZER_BY_TAG = {
    FamilyTag.CLIQUE_PLUS_ISOLATED: recognizers.is_clique_plus_isolated,
    FamilyTag.CLIQUE_PLUS_PENDANT: recognizers.is_clique_plus_pendant,
    FamilyTag.CLIQUE_PLUS_TWO_EDGES: recognizers.is_clique_plus_two_edges,
    FamilyTag.JOIN_OF_TWO_CLIQUES: recognizers.is_join_of_two_cliques,
    FamilyTag.BALANCED_COMPLETE_BIPARTITE: recognizers.is_balanced_complete_bipartite,
    FamilyTag.REGULAR_JOIN_CLIQUE: recognizers.is_regular_join_clique,
}


@dataclass(frozen=True)
class CriterionVerdict:
    criterion: CriterionId
    lhs: float
    threshold: float
    status: CriterionStatus
    predicted: Prediction
    exception: FamilyTag | None

    def to_json_dict(self) -> dict:
        return {
            "criterion": self.criterion.value,
            "lhs": self.lhs,
            "threshold": self.threshold,
            "status": self.status.value,
            "predicted": self.predicted.value,
            "exception": self.exception.value if self.exception else None,
        }


def criterion_threshold(criterion: CriterionId, n: int) -> float:
    """The order-n threshold the criterion's spectral radius is compared to."""
    if criterion is CriterionId.T31_AdjacencyHC:
        return -0.5 + math.sqrt((n - 1.5) ** 2 + 2)
    if criterion is CriterionId.T32_ComplementAdjacencyHC:
        return math.sqrt((n - 2) ** 2 / n)
    if criterion is CriterionId.T33_SignlessHC:
        return 2 * (n - 2) + 2 / (n - 1)
    if criterion is CriterionId.T34_ComplementSignlessHC:
        return float(n - 2)
    if criterion is CriterionId.T41_SignlessPathCycle:
        return float(2 * (n - 2))
    if criterion is CriterionId.T42_AdjacencyPathCycle:
        return float(n - 2)
    raise ValueError(f"unknown criterion {criterion!r}")


def criterion_order_minimum(criterion: CriterionId) -> int:
    if criterion is CriterionId.T32_ComplementAdjacencyHC:
        return 4
    if criterion is CriterionId.T34_ComplementSignlessHC:
        return 6
    if criterion is CriterionId.T33_SignlessHC:
        return 2  # the threshold's 2/(n-1) term is undefined at n = 1
    return 1


def recognize_exception(g: Graph) -> set[FamilyTag]:
    """All exception families the graph structurally matches (label-free)."""
    return {tag for tag, check in _RECOGNIZER_BY_TAG.items() if check(g)}


def apply_criterion(g: Graph, criterion: CriterionId, *,
                    threshold_shift: float = 0.0) -> CriterionVerdict:
    """Evaluate one criterion on g.

    `threshold_shift` is a fault-injection hook for harness self-tests only:
    it is added to the threshold before comparison, so a negative shift makes
    a greater-than criterion fire on graphs it should not.
    """
    n = g.n
    minimum = criterion_order_minimum(criterion)
    if n < minimum:
        raise ValueError(f"{criterion.value} requires order >= {minimum}, got {n}")

    threshold = criterion_threshold(criterion, n) + threshold_shift

    if criterion is CriterionId.T31_AdjacencyHC:
        lhs = adjacency_spectral_radius(g)
        return _strict_hc(criterion, g, lhs, threshold, FamilyTag.CLIQUE_PLUS_TWO_EDGES)
    if criterion is CriterionId.T33_SignlessHC:
        lhs = signless_spectral_radius(g)
        return _strict_hc(criterion, g, lhs, threshold, FamilyTag.CLIQUE_PLUS_TWO_EDGES)
    if criterion is CriterionId.T32_ComplementAdjacencyHC:
        lhs = adjacency_spectral_radius(complement(g))
        margin = threshold - lhs  # satisfied when strictly below
        if margin > STRICTNESS_TOL:
            return CriterionVerdict(criterion, lhs, threshold, CriterionStatus.SATISFIED,
                                    Prediction.HAMILTON_CONNECTED, None)
        if margin >= -STRICTNESS_TOL:
            return CriterionVerdict(criterion, lhs, threshold, CriterionStatus.BOUNDARY,
                                    Prediction.NO_PREDICTION, None)
        return CriterionVerdict(criterion, lhs, threshold, CriterionStatus.NOT_SATISFIED,
                                Prediction.NO_PREDICTION, None)
    if criterion is CriterionId.T34_ComplementSignlessHC:
        lhs = signless_spectral_radius(complement(g))
        if threshold - lhs >= -STRICTNESS_TOL:  # non-strict: equality satisfies
            exception = None
            for tag in _SPLIT_FAMILY_TAGS:
                if _RECOGNIZER_BY_TAG[tag](g):
                    exception = tag
                    break
            predicted = Prediction.NO_PREDICTION if exception else Prediction.HAMILTON_CONNECTED
            return CriterionVerdict(criterion, lhs, threshold, CriterionStatus.SATISFIED,
                                    predicted, exception)
        return CriterionVerdict(criterion, lhs, threshold, CriterionStatus.NOT_SATISFIED,
                                Prediction.NO_PREDICTION, None)
    if criterion is CriterionId.T41_SignlessPathCycle:
        return _two_tier(criterion, g, signless_spectral_radius(g), threshold)
    if criterion is CriterionId.T42_AdjacencyPathCycle:
        return _two_tier(criterion, g, adjacency_spectral_radius(g), threshold)
    raise ValueError(f"unknown criterion {criterion!r}")


def _strict_hc(criterion, g, lhs, threshold, exception_tag) -> CriterionVerdict:
    """Strictly-above-threshold criteria that predict Hamilton-connectivity."""
    margin = lhs - threshold
    if margin > STRICTNESS_TOL:
        exception = exception_tag if _RECOGNIZER_BY_TAG[exception_tag](g) else None
        return CriterionVerdict(criterion, lhs, threshold, CriterionStatus.SATISFIED,
                                Prediction.HAMILTON_CONNECTED, exception)
    if margin >= -STRICTNESS_TOL:
        return CriterionVerdict(criterion, lhs, threshold, CriterionStatus.BOUNDARY,
                                Prediction.NO_PREDICTION, None)
    return CriterionVerdict(criterion, lhs, threshold, CriterionStatus.NOT_SATISFIED,
                            Prediction.NO_PREDICTION, None)


def _two_tier(criterion, g, lhs, threshold) -> CriterionVerdict:
    """Non-strict clause predicts a path, strict clause upgrades to a cycle.

    The cycle clause is only applied for n >= 3 (no smaller graph has a
    cycle); below that the path clause still applies.
    """
    margin = lhs - threshold
    if margin > STRICTNESS_TOL and g.n >= 3:
        tag = FamilyTag.CLIQUE_PLUS_PENDANT
        exception = tag if _RECOGNIZER_BY_TAG[tag](g) else None
        return CriterionVerdict(criterion, lhs, threshold, CriterionStatus.SATISFIED,
                                Prediction.HAMILTONIAN_CYCLE, exception)
    if margin >= -STRICTNESS_TOL:
        tag = FamilyTag.CLIQUE_PLUS_ISOLATED
        exception = tag if _RECOGNIZER_BY_TAG[tag](g) else None
        return CriterionVerdict(criterion, lhs, threshold, CriterionStatus.SATISFIED,
                                Prediction.HAMILTONIAN_PATH, exception)
    return CriterionVerdict(criterion, lhs, threshold, CriterionStatus.NOT_SATISFIED,
                            Prediction.NO_PREDICTION, None)


def verdict_is_sound(g: Graph, verdict: CriterionVerdict,
                     oracle: HamiltonProfile) -> bool:
    """A verdict is sound when it predicts nothing, names an exception, or
    the exact oracle confirms the predicted property."""
    if verdict.predicted is Prediction.NO_PREDICTION or verdict.exception is not None:
        return True
    if verdict.predicted is Prediction.HAMILTON_CONNECTED:
        return oracle.hamilton_connected
    if verdict.predicted is Prediction.HAMILTONIAN_CYCLE:
        return oracle.has_cycle
    return oracle.has_path
