"""Fair saturation loop and the post-hoc saturatedness verifier.

Every unordered premise pair (and every single clause, for factoring) is
queued exactly once; each a priori inference is classified by the first
matching case: non-maximality (harvest rules from the unified premise
instances), redundancy (conclusion locally provable under the current
rules), discovery (add the conclusion and its rules, queue new work).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .entailment import clause_redundant, subsumes
from .orderings import Ordering
from .resolution import (
    Inference,
    a_priori_factors,
    a_priori_resolvents,
    is_a_posteriori,
)
from .rewriting import RewriteSystem, rules_of
from .terms import Clause, Var, match_onto, substitute

SATURATED = "saturated"
LIMIT_REACHED = "limit_reached"
RUNNING = "running"


@dataclass
class Limits:
    max_clauses: int | None = None
    max_steps: int | None = None


@dataclass
class SaturationStats:
    items_processed: int = 0
    inferences_considered: int = 0
    non_maximality: int = 0
    redundant: int = 0
    redundant_by_subsumption: int = 0
    discovered: int = 0

    def summary(self) -> str:
        return (
            f"{self.inferences_considered} inferences"
            f" (non-maximality {self.non_maximality},"
            f" redundant {self.redundant},"
            f" discovered {self.discovered})"
        )


# queue items: ("resolve", i, j) with i <= j, or ("factor", i)
WorkItem = tuple


@dataclass
class SaturationState:
    ordering: Ordering
    clauses: list[Clause] = field(default_factory=list)
    rules: RewriteSystem = field(default_factory=RewriteSystem)
    queue: deque = field(default_factory=deque)
    stats: SaturationStats = field(default_factory=SaturationStats)
    status: str = RUNNING

    def add_clause(self, c: Clause) -> bool:
        """Add a clause unless a variant is already present; queue its work."""
        if any(variant_equal(c, d) for d in self.clauses):
            return False
        k = len(self.clauses)
        self.clauses.append(c)
        self.queue.append(("factor", k))
        for i in range(k + 1):
            self.queue.append(("resolve", i, k))
        return True


def variant_equal(c: Clause, d: Clause) -> bool:
    """Equality modulo variable renaming (mutual exact instances)."""
    if len(c.antecedent) != len(d.antecedent) or len(c.succedent) != len(d.succedent):
        return False
    if c == d:
        return True
    return _maps_exactly_onto(c, d) and _maps_exactly_onto(d, c)


def _maps_exactly_onto(c: Clause, d: Clause) -> bool:
    """Is there a variable-for-variable substitution with c·sigma == d?"""
    goals = [(c.antecedent, d.antecedent), (c.succedent, d.succedent)]

    def bt(side: int, i: int, rho: dict) -> bool:
        if side == len(goals):
            return substitute(rho, c) == d
        pats, targets = goals[side]
        if i == len(pats):
            return bt(side + 1, 0, rho)
        for target in targets:
            m = match_onto(pats[i], target)
            if m is None or not all(isinstance(t, Var) for t in m.values()):
                continue
            merged = dict(rho)
            ok = True
            for v, t in m.items():
                if merged.setdefault(v, t) != t:
                    ok = False
                    break
            if ok and bt(side, i + 1, merged):
                return True
        return False

    return bt(0, 0, {})


def _inferences_for(state: SaturationState, item: WorkItem) -> list[Inference]:
    if item[0] == "factor":
        return a_priori_factors(state.ordering, state.clauses[item[1]])
    _, i, j = item
    out = a_priori_resolvents(state.ordering, state.clauses[i], state.clauses[j])
    if i != j:
        out += a_priori_resolvents(state.ordering, state.clauses[j], state.clauses[i])
    return out


def saturate(ordering: Ordering, clauses, limits: Limits = Limits()) -> SaturationState:
    """Run the saturation loop to a fixed point or a limit.

    Returns the final state; status is "saturated" iff the work queue
    emptied, else "limit_reached" (the state is still usable but carries no
    completeness guarantee).
    """
    state = SaturationState(ordering)
    for c in clauses:
        state.add_clause(c)
    state.rules = rules_of(ordering, state.clauses)
    while state.queue:
        if limits.max_steps is not None and state.stats.inferences_considered >= limits.max_steps:
            state.status = LIMIT_REACHED
            return state
        item = state.queue.popleft()
        state.stats.items_processed += 1
        for inf in _inferences_for(state, item):
            state.stats.inferences_considered += 1
            if not is_a_posteriori(ordering, inf):
                state.rules = state.rules | rules_of(ordering, inf.premise_instances)
                state.stats.non_maximality += 1
            elif any(subsumes(d, inf.conclusion) for d in state.clauses):
                state.stats.redundant += 1
                state.stats.redundant_by_subsumption += 1
            elif clause_redundant(state.clauses, state.rules, inf.conclusion):
                state.stats.redundant += 1
            else:
                state.stats.discovered += 1
                state.add_clause(inf.conclusion)
                state.rules = state.rules | rules_of(ordering, [inf.conclusion])
                if limits.max_clauses is not None and len(state.clauses) > limits.max_clauses:
                    state.status = LIMIT_REACHED
                    return state
    state.status = SATURATED
    return state


@dataclass
class VerifyReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_saturated(ordering: Ordering, clauses, rules: RewriteSystem) -> VerifyReport:
    """Check saturatedness of (clauses, rules) from scratch.

    (1) every a priori resolution inference has a locally provable
    conclusion within its frozen reach set; (2) the clause-extracted rules
    are contained in the system; (3) inferences failing the a posteriori
    conditions contributed the rules of their premise instances.
    """
    clauses = list(clauses)
    report = VerifyReport()
    missing = rules_of(ordering, clauses).rules - rules.rules
    for rule in sorted(missing, key=str):
        report.violations.append(f"condition 2: missing rule {rule}")
    for c1 in clauses:
        for c2 in clauses:
            for inf in a_priori_resolvents(ordering, c1, c2):
                if not clause_redundant(clauses, rules, inf.conclusion):
                    report.violations.append(f"condition 1: not redundant: {inf}")
                if not is_a_posteriori(ordering, inf):
                    harvested = rules_of(ordering, inf.premise_instances)
                    for rule in sorted(harvested.rules - rules.rules, key=str):
                        report.violations.append(
                            f"condition 3: missing rule {rule} from {inf}"
                        )
    return report
