"""Atom rewriting systems: extraction from clauses, reachability, derived order.

A rule rewrites a whole atom to a strictly smaller atom (argumentwise, under
the atom ordering).  Reachability from a ground atom is finite because rules
only descend and each step is a matched instance of finitely many rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .orderings import Ordering
from .terms import (
    Atom,
    Clause,
    Subst,
    Var,
    atom_key,
    fresh_names,
    is_ground,
    match_onto,
    substitute,
    vars_of,
)


@dataclass(frozen=True)
class RewriteRule:
    lhs: Atom
    rhs: Atom

    def __post_init__(self) -> None:
        if self.lhs == self.rhs:
            raise ValueError("identity rewrite rules are excluded")
        if not vars_of(self.rhs) <= vars_of(self.lhs):
            raise ValueError(f"rule {self} introduces variables on the right")

    def __str__(self) -> str:
        return f"{self.lhs} -> {self.rhs}"


def rule_key(r: RewriteRule):
    return (atom_key(r.lhs), atom_key(r.rhs))


def canonical_rule(lhs: Atom, rhs: Atom) -> RewriteRule:
    """Rule with variables renamed V0, V1, ... in first occurrence order."""
    seen: list[Var] = []

    def walk(t) -> None:
        if isinstance(t, Var):
            if t not in seen:
                seen.append(t)
        else:
            for a in t.args:
                walk(a)

    for a in lhs.args + rhs.args:
        walk(a)
    names = fresh_names(set(), len(seen))
    rho: Subst = {v: Var(n) for v, n in zip(seen, names)}
    return RewriteRule(substitute(rho, lhs), substitute(rho, rhs))


@dataclass(frozen=True)
class RewriteSystem:
    """Immutable set of rewrite rules, deduplicated modulo renaming."""

    rules: frozenset[RewriteRule] = frozenset()

    @classmethod
    def of(cls, ordering: Ordering, pairs: Iterable[tuple[Atom, Atom]]) -> "RewriteSystem":
        """Build from (lhs, rhs) pairs, checking the ordering orientation."""
        out = set()
        for lhs, rhs in pairs:
            if not ordering.atom_greater(lhs, rhs):
                raise ValueError(f"rule {lhs} -> {rhs} is not ordered")
            out.add(canonical_rule(lhs, rhs))
        return cls(frozenset(out))

    def __or__(self, other: "RewriteSystem") -> "RewriteSystem":
        return RewriteSystem(self.rules | other.rules)

    def __le__(self, other: "RewriteSystem") -> bool:
        return self.rules <= other.rules

    def __len__(self) -> int:
        return len(self.rules)

    def sorted_rules(self) -> list[RewriteRule]:
        return sorted(self.rules, key=rule_key)

    def __iter__(self) -> Iterator[RewriteRule]:
        return iter(self.sorted_rules())


def rules_of(ordering: Ordering, clauses: Iterable[Clause]) -> RewriteSystem:
    """All ordered pairs of distinct atoms within single clauses."""
    rules = set()
    for c in clauses:
        atoms = c.atoms()
        for lhs in atoms:
            for rhs in atoms:
                if lhs != rhs and ordering.atom_greater(lhs, rhs):
                    rules.add(canonical_rule(lhs, rhs))
    return RewriteSystem(frozenset(rules))


def rewrite_one(system: RewriteSystem, a: Atom) -> set[Atom]:
    """All single-step rewrites of an atom."""
    out: set[Atom] = set()
    for rule in system.sorted_rules():
        sigma = match_onto(rule.lhs, a)
        if sigma is not None:
            out.add(substitute(sigma, rule.rhs))
    return out


def reach(system: RewriteSystem, a: Atom) -> set[Atom]:
    """Atoms reachable from a ground atom, including the atom itself."""
    if not is_ground(a):
        raise ValueError(f"reach requires a ground atom, got {a}")
    seen: set[Atom] = {a}
    frontier: list[Atom] = [a]
    while frontier:
        current = frontier.pop()
        for nxt in rewrite_one(system, current):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def reach_clause(system: RewriteSystem, c: Clause) -> set[Atom]:
    """Union of the reach sets of a ground clause's atoms."""
    if not c.is_ground():
        raise ValueError(f"reach_clause requires a ground clause, got {c}")
    out: set[Atom] = set()
    for a in c.atoms():
        out |= reach(system, a)
    return out


def r_less(system: RewriteSystem, a: Atom, b: Atom) -> bool:
    """Derived finite-complexity order: a below b iff a reachable from b, a != b."""
    if not is_ground(a) or not is_ground(b):
        raise ValueError("r_less requires ground atoms")
    return a != b and a in reach(system, b)
