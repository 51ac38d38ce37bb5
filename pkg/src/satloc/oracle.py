"""Brute-force bounded-Herbrand entailment oracle for differential testing.

Instantiates every clause over all ground terms up to a height bound (seeded
with the subterms of the query) and hands the result to the propositional
checker.  Sound but incomplete: "entailed" is always right, "unknown" only
means the bound or budget was too small.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .entailment import ground_sat, negated_units
from .terms import Clause, Fn, Signature, Term, fresh_names, is_ground, sorted_vars, substitute, subterms

ENTAILED = "entailed"
UNKNOWN = "unknown"

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class HerbrandBound:
    depth: int
    extra_terms: frozenset[Term] = frozenset()

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise ValueError("depth must be non-negative")
        for t in self.extra_terms:
            if not is_ground(t):
                raise ValueError(f"seed terms must be ground, got {t}")


@dataclass
class OracleResult:
    verdict: str
    reason: str | None = None  # "depth" or "budget" when unknown


def herbrand_terms(signature: Signature, bound: HerbrandBound) -> set[Term]:
    """Ground terms built from constants and seeds by at most `depth` function layers.

    A default constant is injected when the signature has none and no seed
    terms were supplied.
    """
    seeds: set[Term] = {Fn(name) for name in signature.constants()}
    seeds |= set(bound.extra_terms)
    if not seeds:
        taken = set(signature.functions) | set(signature.predicates)
        seeds = {Fn(fresh_names(taken, 1, prefix="c")[0])}
    functions = sorted(
        (name, k) for name, k in signature.functions.items() if k > 0
    )
    terms = set(seeds)
    for _ in range(bound.depth):
        layer = set(terms)
        for name, k in functions:
            for args in itertools.product(sorted(terms, key=str), repeat=k):
                layer.add(Fn(name, args))
        terms = layer
    return terms


def oracle_entails(
    clauses,
    goal: Clause,
    bound: HerbrandBound,
    budget: int = DEFAULT_BUDGET,
) -> OracleResult:
    """Semi-decide entailment of a ground clause by exhaustive instantiation."""
    if not goal.is_ground():
        raise ValueError(f"oracle queries must be ground, got {goal}")
    clauses = list(clauses)
    signature = Signature.scan(clauses + [goal])
    harvested: set[Term] = set()
    for atom in goal.atoms():
        for t in atom.args:
            harvested |= subterms(t)
    terms = sorted(
        herbrand_terms(signature, HerbrandBound(bound.depth, frozenset(bound.extra_terms) | frozenset(harvested))),
        key=str,
    )
    total = 0
    for c in clauses:
        total += len(terms) ** len(sorted_vars(c))
        if total > budget:
            return OracleResult(UNKNOWN, "budget")
    instances: set[Clause] = set()
    for c in clauses:
        variables = sorted_vars(c)
        for values in itertools.product(terms, repeat=len(variables)):
            instances.add(substitute(dict(zip(variables, values)), c))
    if ground_sat(instances | negated_units(goal)) is None:
        return OracleResult(ENTAILED)
    return OracleResult(UNKNOWN, "depth")
