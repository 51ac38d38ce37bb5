"""Resolution and factoring: standard, a priori ordered, a posteriori check.

A priori rules test maximality on the premises before unification; the
a posteriori check re-tests on the unified premise instances, at the level
of atom occurrences (an occurrence that collapses onto the resolved atom
defeats strict maximality).
"""

from __future__ import annotations

from dataclasses import dataclass

from .orderings import Ordering
from .terms import Atom, Clause, Subst, mgu, rename_apart, substitute, vars_of

RESOLUTION = "resolution"
FACTORING = "factoring"


@dataclass(frozen=True, eq=False)
class Inference:
    """One resolution or factoring step with everything redundancy checks need.

    premises are the renamed-apart clauses actually used; resolved holds the
    pre-unification atom occurrences (A in the first premise's succedent and
    A' in the second premise's antecedent for resolution; the kept and the
    dropped succedent atom for factoring).
    """

    kind: str
    premises: tuple[Clause, ...]
    unifier: Subst
    resolved: tuple[Atom, ...]
    resolved_atom: Atom
    premise_instances: tuple[Clause, ...]
    conclusion: Clause

    def __str__(self) -> str:
        prem = " ; ".join(str(p) for p in self.premises)
        return f"[{self.kind}] {prem} => {self.conclusion} (on {self.resolved_atom})"


def _resolvents(c1: Clause, c2: Clause, ordering: Ordering | None) -> list[Inference]:
    c2r = rename_apart(c2, vars_of(c1))
    atoms1 = c1.atoms()
    atoms2 = c2r.atoms()
    out: list[Inference] = []
    for a in c1.succedent:
        if ordering is not None and not ordering.is_maximal(a, atoms1):
            continue
        for ap in c2r.antecedent:
            if ordering is not None and not ordering.is_maximal(ap, atoms2):
                continue
            alpha = mgu(a, ap)
            if alpha is None:
                continue
            conclusion = substitute(
                alpha,
                Clause(
                    c1.antecedent + tuple(x for x in c2r.antecedent if x != ap),
                    tuple(x for x in c1.succedent if x != a) + c2r.succedent,
                ),
            )
            out.append(
                Inference(
                    kind=RESOLUTION,
                    premises=(c1, c2r),
                    unifier=alpha,
                    resolved=(a, ap),
                    resolved_atom=substitute(alpha, a),
                    premise_instances=(substitute(alpha, c1), substitute(alpha, c2r)),
                    conclusion=conclusion,
                )
            )
    return out


def _factors(c: Clause, ordering: Ordering | None) -> list[Inference]:
    atoms = c.atoms()
    succ = c.succedent
    out: list[Inference] = []
    for i, a in enumerate(succ):
        for ap in succ[i + 1:]:
            alpha = mgu(a, ap)
            if alpha is None:
                continue
            if ordering is None or ordering.is_maximal(a, atoms):
                kept, dropped = a, ap
            elif ordering.is_maximal(ap, atoms):
                kept, dropped = ap, a
            else:
                continue
            conclusion = substitute(
                alpha,
                Clause(c.antecedent, tuple(x for x in succ if x != dropped)),
            )
            out.append(
                Inference(
                    kind=FACTORING,
                    premises=(c,),
                    unifier=alpha,
                    resolved=(kept, dropped),
                    resolved_atom=substitute(alpha, kept),
                    premise_instances=(substitute(alpha, c),),
                    conclusion=conclusion,
                )
            )
    return out


def a_priori_resolvents(ordering: Ordering, c1: Clause, c2: Clause) -> list[Inference]:
    """Resolution inferences whose premise-side maximality conditions hold.

    The second premise is renamed apart internally; enumeration follows the
    canonical atom order, so the output is deterministic.
    """
    return _resolvents(c1, c2, ordering)


def a_priori_factors(ordering: Ordering, c: Clause) -> list[Inference]:
    """Factoring inferences: one per unifiable pair of succedent atoms with a
    maximal member (the maximal one is kept)."""
    return _factors(c, ordering)


def plain_resolvents(c1: Clause, c2: Clause) -> list[Inference]:
    """Standard resolution, no ordering conditions."""
    return _resolvents(c1, c2, None)


def plain_factors(c: Clause) -> list[Inference]:
    """Standard factoring, no ordering conditions."""
    return _factors(c, None)


def is_a_posteriori(ordering: Ordering, inf: Inference) -> bool:
    """Re-test maximality on the unified premise instances.

    Occurrence-level: each premise atom other than the resolved occurrence is
    instantiated separately, so a sibling collapsing onto the resolved atom
    blocks strict maximality.
    """
    alpha = inf.unifier
    a_inst = inf.resolved_atom
    if inf.kind == RESOLUTION:
        c1, c2 = inf.premises
        a, ap = inf.resolved
        others1 = [substitute(alpha, b) for b in c1.antecedent]
        others1 += [substitute(alpha, b) for b in c1.succedent if b != a]
        others2 = [substitute(alpha, b) for b in c2.antecedent if b != ap]
        others2 += [substitute(alpha, b) for b in c2.succedent]
        return ordering.is_strictly_maximal(a_inst, others1) and ordering.is_maximal(
            a_inst, others2
        )
    c = inf.premises[0]
    kept, dropped = inf.resolved
    others_ant = [substitute(alpha, b) for b in c.antecedent]
    others_suc = [substitute(alpha, b) for b in c.succedent if b not in (kept, dropped)]
    return ordering.is_strictly_maximal(a_inst, others_ant) and ordering.is_maximal(
        a_inst, others_suc
    )
