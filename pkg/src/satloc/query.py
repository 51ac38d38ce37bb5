"""Ground entailment queries against a saturated state.

For a saturated state, a ground clause is entailed iff it has a local proof
inside the reach set of its own atoms, so each query reduces to one finite
instance enumeration plus one propositional check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .entailment import LocalCertificate, decide_local
from .rewriting import reach_clause
from .saturation import SATURATED, SaturationState
from .terms import Clause

ENTAILED = "entailed"
NOT_ENTAILED = "not-entailed"
LOCALLY_NOT_PROVABLE = "locally-not-provable"


class NotSaturatedError(Exception):
    """Raised for queries against a state without the saturation guarantee."""


@dataclass
class QueryResult:
    verdict: str
    certificate: LocalCertificate | None
    universe_size: int
    elapsed: float


def entails(state: SaturationState, goal: Clause, allow_unsaturated: bool = False) -> QueryResult:
    """Decide whether the state's clause set entails a ground clause.

    Unsaturated states are refused unless allow_unsaturated is set, in which
    case a negative answer is reported as "locally-not-provable" (a positive
    answer is still sound).
    """
    if not goal.is_ground():
        raise ValueError(f"queries must be ground, got {goal}")
    if state.status != SATURATED and not allow_unsaturated:
        raise NotSaturatedError(
            f"state has status '{state.status}'; only saturated states decide entailment"
        )
    start = time.perf_counter()
    universe = reach_clause(state.rules, goal)
    certificate = decide_local(state.clauses, universe, goal)
    elapsed = time.perf_counter() - start
    if certificate is not None:
        verdict = ENTAILED
    elif state.status == SATURATED:
        verdict = NOT_ENTAILED
    else:
        verdict = LOCALLY_NOT_PROVABLE
    return QueryResult(
        verdict=verdict,
        certificate=certificate,
        universe_size=len(universe),
        elapsed=elapsed,
    )
