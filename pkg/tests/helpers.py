"""Shared test helpers: parsing shorthands, reference implementations used as
independent oracles, and seeded random generators."""

from __future__ import annotations

import itertools
import random

from satloc import (
    Atom,
    Clause,
    Fn,
    Ordering,
    Var,
    parse_clause_text,
)
from satloc.terms import Term


def cl(text: str) -> Clause:
    return parse_clause_text(text)


def at(text: str) -> Atom:
    c = parse_clause_text(f"-> {text}")
    assert len(c.succedent) == 1 and not c.antecedent
    return c.succedent[0]


def tm(text: str) -> Term:
    return at(f"scratch({text})").args[0]


# ---------------------------------------------------------------------------
# Reference orderings: a direct, unoptimized transcription of the recursive
# definitions, kept separate from the implementation under test.

def ref_lpo_greater(rank: dict[str, int], s: Term, t: Term) -> bool:
    if isinstance(s, Var):
        return False
    if isinstance(t, Var):
        return s != t and _ref_occurs(t, s)
    case_subterm = any(a == t or ref_lpo_greater(rank, a, t) for a in s.args)
    case_greater_head = rank[s.name] > rank[t.name] and all(
        ref_lpo_greater(rank, s, b) for b in t.args
    )
    case_lex = False
    if s.name == t.name and len(s.args) == len(t.args) and s != t:
        pairs = list(zip(s.args, t.args))
        for i, (a, b) in enumerate(pairs):
            if a == b:
                continue
            case_lex = ref_lpo_greater(rank, a, b) and all(
                ref_lpo_greater(rank, s, b2) for _, b2 in pairs[i + 1 :]
            )
            break
    return case_subterm or case_greater_head or case_lex


def _ref_occurs(v: Var, t: Term) -> bool:
    if isinstance(t, Var):
        return t == v
    return any(_ref_occurs(v, a) for a in t.args)


def ref_atom_greater(rank: dict[str, int], a: Atom, b: Atom) -> bool:
    if a == b or not a.args:
        return False
    return all(any(ref_lpo_greater(rank, t, s) for t in a.args) for s in b.args)


def rank_of(ordering: Ordering) -> dict[str, int]:
    chain = ordering.symbols()
    return {name: len(chain) - i for i, name in enumerate(chain)}


# ---------------------------------------------------------------------------
# Truth-table satisfiability, the reference for the DPLL check.

def truth_table_satisfiable(clauses) -> bool:
    atoms = sorted({a for c in clauses for a in c.atom_set()}, key=str)
    assert len(atoms) <= 16, "truth table reference capped at 16 atoms"
    for bits in itertools.product([False, True], repeat=len(atoms)):
        model = dict(zip(atoms, bits))
        if all(_clause_true(c, model) for c in clauses):
            return True
    return False


def _clause_true(c: Clause, model: dict[Atom, bool]) -> bool:
    return any(not model[a] for a in c.antecedent) or any(
        model[b] for b in c.succedent
    )


# ---------------------------------------------------------------------------
# Random generators over a small fixed signature.

SIG_FUNCS = [("f", 1), ("h", 1), ("g", 2)]
SIG_CONSTS = ["a", "b", "c"]
SIG_PREDS = [("p", 1), ("q", 2), ("r", 1), ("s", 0)]
SIG_VARS = ["X", "Y", "Z"]


def sig_ordering(rng: random.Random | None = None) -> Ordering:
    names = [n for n, _ in SIG_FUNCS] + SIG_CONSTS
    if rng is not None:
        rng.shuffle(names)
    return Ordering(names)


def rand_term(rng: random.Random, depth: int, allow_vars: bool = True) -> Term:
    if depth <= 0 or rng.random() < 0.35:
        if allow_vars and rng.random() < 0.5:
            return Var(rng.choice(SIG_VARS))
        return Fn(rng.choice(SIG_CONSTS))
    name, arity = rng.choice(SIG_FUNCS)
    return Fn(name, tuple(rand_term(rng, depth - 1, allow_vars) for _ in range(arity)))


def rand_ground_term(rng: random.Random, depth: int) -> Term:
    return rand_term(rng, depth, allow_vars=False)


def rand_atom(rng: random.Random, depth: int = 2, allow_vars: bool = True) -> Atom:
    name, arity = rng.choice(SIG_PREDS)
    return Atom(name, tuple(rand_term(rng, depth, allow_vars) for _ in range(arity)))


def rand_ground_atom(rng: random.Random, depth: int = 2) -> Atom:
    return rand_atom(rng, depth, allow_vars=False)


def rand_clause(rng: random.Random, max_side: int = 2, depth: int = 2) -> Clause:
    n_ant = rng.randint(0, max_side)
    n_suc = rng.randint(0 if n_ant else 1, max_side)
    return Clause(
        [rand_atom(rng, depth) for _ in range(n_ant)],
        [rand_atom(rng, depth) for _ in range(n_suc)],
    )


def rand_ground_clause(rng: random.Random, max_side: int = 2, depth: int = 2) -> Clause:
    n_ant = rng.randint(0, max_side)
    n_suc = rng.randint(0 if n_ant else 1, max_side)
    return Clause(
        [rand_ground_atom(rng, depth) for _ in range(n_ant)],
        [rand_ground_atom(rng, depth) for _ in range(n_suc)],
    )


def rand_grounding(rng: random.Random, variables, depth: int = 1):
    return {v: rand_ground_term(rng, depth) for v in variables}


def ground_terms_up_to(depth: int, funcs=None, consts=None) -> list[Term]:
    """Every ground term of height <= depth over the given symbols."""
    funcs = SIG_FUNCS if funcs is None else funcs
    consts = SIG_CONSTS if consts is None else consts
    terms: set[Term] = {Fn(c) for c in consts}
    for _ in range(depth):
        layer = set(terms)
        for name, arity in funcs:
            for args in itertools.product(terms, repeat=arity):
                layer.add(Fn(name, args))
        terms = layer
    return sorted(terms, key=str)
