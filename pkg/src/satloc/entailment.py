"""Local entailment: ground instances inside a finite atom universe + SAT.

A clause is provable from S inside a universe of ground atoms iff the
ground instances of S whose atoms stay inside the universe, together with
the negated goal units, are propositionally unsatisfiable.  Redundancy of a
non-ground clause is decided on a single generic instance obtained by
freezing its variables to fresh constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .resolution import Inference
from .rewriting import RewriteSystem, reach_clause
from .terms import (
    Atom,
    Clause,
    Subst,
    atom_key,
    compose,
    freeze,
    is_ground,
    match_onto,
    rename_apart,
    substitute,
    vars_of,
)


def negated_units(c: Clause) -> set[Clause]:
    """The unit clauses asserting the negation of a clause."""
    out = {Clause((), (a,)) for a in c.antecedent}
    out |= {Clause((b,), ()) for b in c.succedent}
    return out


@dataclass(frozen=True, eq=False)
class LocalCertificate:
    """Witness for a local proof: everything needed to re-check it."""

    atom_universe: frozenset[Atom]
    instances: frozenset[Clause]
    negated_goal: frozenset[Clause]

    def validate(self) -> bool:
        """Re-check both certificate invariants."""
        for c in self.instances | self.negated_goal:
            if not c.atom_set() <= self.atom_universe:
                return False
        return ground_sat(self.instances | self.negated_goal) is None


def enumerate_local_instances(clauses: Iterable[Clause], universe: set[Atom]) -> set[Clause]:
    """All ground instances of the clauses whose atoms lie in the universe.

    Backtracking match-join: clause atoms are matched one by one against
    universe members under the accumulated substitution, fewest-variables
    first.  Every clause variable occurs in some atom, so survivors are
    ground.
    """
    for a in universe:
        if not is_ground(a):
            raise ValueError(f"universe must be ground, got {a}")
    members = sorted(universe, key=atom_key)
    out: set[Clause] = set()
    for d in clauses:
        atoms = sorted(d.atoms(), key=lambda a: (len(vars_of(a)), atom_key(a)))

        def join(i: int, sigma: Subst) -> None:
            if i == len(atoms):
                out.add(substitute(sigma, d))
                return
            pattern = substitute(sigma, atoms[i])
            for target in members:
                m = match_onto(pattern, target)
                if m is not None:
                    join(i + 1, compose(sigma, m))

        join(0, {})
    return out


def ground_sat(clauses: Iterable[Clause]) -> dict[Atom, bool] | None:
    """Satisfying assignment for a set of ground clauses, or None if unsat.

    DPLL with unit propagation; branching picks the lowest atom index and
    tries false first, so the verdict and model are deterministic.
    """
    atoms: set[Atom] = set()
    clause_list = []
    for c in clauses:
        if not c.is_ground():
            raise ValueError(f"ground_sat requires ground clauses, got {c}")
        atoms |= c.atom_set()
        clause_list.append(c)
    index = {a: i + 1 for i, a in enumerate(sorted(atoms, key=atom_key))}
    cnf: set[frozenset[int]] = set()
    for c in clause_list:
        lits = frozenset(
            {-index[a] for a in c.antecedent} | {index[b] for b in c.succedent}
        )
        if any(-lit in lits for lit in lits):
            continue  # tautologous row, satisfied everywhere
        cnf.add(lits)
    model = _dpll(sorted(cnf, key=sorted))
    if model is None:
        return None
    by_atom = {a: model.get(i, False) for a, i in index.items()}
    return by_atom


def _dpll(cnf) -> dict[int, bool] | None:
    """Iterative DPLL: unit propagation, lowest-variable branching (false
    first), chronological backtracking.  Counters per clause keep every step
    cheap; the verdict and model are deterministic."""
    clauses = [tuple(sorted(lits, key=lambda l: (abs(l), l))) for lits in cnf]
    occurs: dict[int, list[tuple[int, bool]]] = {}
    for i, lits in enumerate(clauses):
        for lit in lits:
            occurs.setdefault(abs(lit), []).append((i, lit > 0))
    n_free = [len(lits) for lits in clauses]
    n_sat = [0] * len(clauses)
    open_clauses = set(range(len(clauses)))  # sat count still zero
    assignment: dict[int, bool] = {}
    trail: list[int] = []
    decisions: list[tuple[int, int, bool]] = []  # (trail mark, var, tried True)

    def assign(var: int, value: bool) -> None:
        assignment[var] = value
        trail.append(var)
        for i, positive in occurs.get(var, ()):
            n_free[i] -= 1
            if positive == value:
                n_sat[i] += 1
                if n_sat[i] == 1:
                    open_clauses.discard(i)

    def unassign(var: int) -> None:
        value = assignment.pop(var)
        for i, positive in occurs.get(var, ()):
            n_free[i] += 1
            if positive == value:
                n_sat[i] -= 1
                if n_sat[i] == 0:
                    open_clauses.add(i)

    def free_literal(i: int) -> int:
        for lit in clauses[i]:
            if abs(lit) not in assignment:
                return lit
        raise AssertionError("no free literal in a unit clause")

    def propagate(queue: list[int]) -> bool:
        qi = 0
        while qi < len(queue):
            var = queue[qi]
            qi += 1
            for i, _ in occurs.get(var, ()):
                if n_sat[i] > 0:
                    continue
                if n_free[i] == 0:
                    return False
                if n_free[i] == 1:
                    lit = free_literal(i)
                    assign(abs(lit), lit > 0)
                    queue.append(abs(lit))
        return True

    queue: list[int] = []
    for i, lits in enumerate(clauses):
        if n_sat[i] > 0 or n_free[i] > 1:
            continue
        if n_free[i] == 0:
            return None
        lit = free_literal(i)
        if abs(lit) not in assignment:
            assign(abs(lit), lit > 0)
            queue.append(abs(lit))
    ok = propagate(queue)
    while True:
        if not ok:
            # undo exhausted decisions, then flip the newest untried one
            while decisions and decisions[-1][2]:
                mark, _, _ = decisions.pop()
                while len(trail) > mark:
                    unassign(trail.pop())
            if not decisions:
                return None
            mark, var, _ = decisions[-1]
            while len(trail) > mark:
                unassign(trail.pop())
            decisions[-1] = (mark, var, True)
            assign(var, True)
            ok = propagate([var])
            continue
        # at a propagation fixpoint; branch on the lowest variable still open
        branch = None
        for i in open_clauses:
            for lit in clauses[i]:
                var = abs(lit)
                if var not in assignment and (branch is None or var < branch):
                    branch = var
        if branch is None:
            return dict(assignment)
        decisions.append((len(trail), branch, False))
        assign(branch, False)
        ok = propagate([branch])


def decide_local(
    clauses: Iterable[Clause], universe: set[Atom], goal: Clause
) -> LocalCertificate | None:
    """Certificate for a local proof of the goal from the clauses, or None.

    The goal must be ground with all its atoms inside the universe.
    """
    if not goal.is_ground():
        raise ValueError(f"decide_local requires a ground goal, got {goal}")
    if not goal.atom_set() <= universe:
        raise ValueError("goal atoms must lie inside the universe")
    instances = enumerate_local_instances(clauses, universe)
    negated = negated_units(goal)
    if ground_sat(instances | negated) is None:
        return LocalCertificate(
            atom_universe=frozenset(universe),
            instances=frozenset(instances),
            negated_goal=frozenset(negated),
        )
    return None


def clause_redundant(clauses: Iterable[Clause], rules: RewriteSystem, c: Clause) -> bool:
    """Redundancy of a clause via its frozen generic instance.

    A local proof of the frozen clause maps to one for every ground instance
    (matching, rewriting and propositional refutation are all stable under
    replacing the frozen constants), so this under-approximates safely.
    """
    frozen_c, _ = freeze(c)
    universe = reach_clause(rules, frozen_c)
    return decide_local(clauses, universe, frozen_c) is not None


def inference_redundant(
    clauses: Iterable[Clause], rules: RewriteSystem, inf: Inference
) -> bool:
    """Full redundancy test: a redundant premise, or a locally provable conclusion."""
    clauses = list(clauses)
    if any(clause_redundant(clauses, rules, p) for p in inf.premises):
        return True
    return clause_redundant(clauses, rules, inf.conclusion)


def subsumes(d: Clause, c: Clause) -> bool:
    """True iff some substitution embeds d's sides into c's sides."""
    d = rename_apart(d, vars_of(c))
    goals = [(d.antecedent, c.antecedent), (d.succedent, c.succedent)]

    def bt(side: int, i: int, sigma: Subst) -> bool:
        if side == len(goals):
            return True
        pats, targets = goals[side]
        if i == len(pats):
            return bt(side + 1, 0, sigma)
        pattern = substitute(sigma, pats[i])
        for target in targets:
            m = match_onto(pattern, target)
            if m is not None and bt(side, i + 1, compose(sigma, m)):
                return True
        return False

    return bt(0, 0, {})
