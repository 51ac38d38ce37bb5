"""First-order terms, atoms, clauses and substitutions.

Clauses are pairs of atom *sets* (antecedent -> succedent), stored in a
canonical deduplicated, sorted form so that structural equality is clause
equality.  Substitutions are plain dicts from Var to Term and are kept
idempotent (no bound variable occurs in any range term).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

FROZEN_PREFIX = "#"


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Fn:
    """Function application; constants are 0-ary functions."""

    name: str
    args: tuple["Term", ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.name
        return f"{self.name}({','.join(str(a) for a in self.args)})"


Term = Union[Var, Fn]


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple[Term, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.pred
        return f"{self.pred}({','.join(str(a) for a in self.args)})"


def term_key(t: Term):
    """Total syntactic order key; variables sort before applications."""
    if isinstance(t, Var):
        return (0, t.name)
    return (1, t.name, tuple(term_key(a) for a in t.args))


def atom_key(a: Atom):
    return (a.pred, tuple(term_key(t) for t in a.args))


@dataclass(frozen=True, init=False)
class Clause:
    """Canonical clause: each side deduplicated and sorted syntactically."""

    antecedent: tuple[Atom, ...]
    succedent: tuple[Atom, ...]

    def __init__(self, antecedent: Iterable[Atom] = (), succedent: Iterable[Atom] = ()):
        object.__setattr__(self, "antecedent", tuple(sorted(set(antecedent), key=atom_key)))
        object.__setattr__(self, "succedent", tuple(sorted(set(succedent), key=atom_key)))

    def atoms(self) -> tuple[Atom, ...]:
        """All atoms of the clause in canonical order, without duplicates."""
        return tuple(sorted(set(self.antecedent) | set(self.succedent), key=atom_key))

    def atom_set(self) -> frozenset[Atom]:
        return frozenset(self.antecedent) | frozenset(self.succedent)

    def is_ground(self) -> bool:
        return not vars_of(self)

    def is_empty(self) -> bool:
        return not self.antecedent and not self.succedent

    def is_tautology(self) -> bool:
        return bool(set(self.antecedent) & set(self.succedent))

    def __str__(self) -> str:
        ant = ", ".join(str(a) for a in self.antecedent)
        suc = ", ".join(str(a) for a in self.succedent)
        if ant and suc:
            return f"{ant} -> {suc}"
        if ant:
            return f"{ant} ->"
        if suc:
            return f"-> {suc}"
        return "->"


def clause_key(c: Clause):
    return (
        tuple(atom_key(a) for a in c.antecedent),
        tuple(atom_key(a) for a in c.succedent),
    )


Subst = dict[Var, Term]


def vars_of(e) -> set[Var]:
    """Variables occurring in a term, atom or clause."""
    out: set[Var] = set()
    _collect_vars(e, out)
    return out


def _collect_vars(e, out: set[Var]) -> None:
    if isinstance(e, Var):
        out.add(e)
    elif isinstance(e, Fn):
        for a in e.args:
            _collect_vars(a, out)
    elif isinstance(e, Atom):
        for a in e.args:
            _collect_vars(a, out)
    elif isinstance(e, Clause):
        for a in e.antecedent:
            _collect_vars(a, out)
        for a in e.succedent:
            _collect_vars(a, out)
    else:
        raise TypeError(f"cannot collect variables from {e!r}")


def sorted_vars(e) -> list[Var]:
    """Variables of e sorted by name (for deterministic enumeration)."""
    return sorted(vars_of(e), key=lambda v: v.name)


def subterms(t: Term) -> set[Term]:
    """The subterm set Sub(t), including t itself."""
    out: set[Term] = {t}
    if isinstance(t, Fn):
        for a in t.args:
            out |= subterms(a)
    return out


def is_ground(e) -> bool:
    return not vars_of(e)


def substitute(sigma: Subst, e):
    """Apply an idempotent substitution; one simultaneous pass, no chasing."""
    if isinstance(e, Var):
        return sigma.get(e, e)
    if isinstance(e, Fn):
        if not e.args:
            return e
        return Fn(e.name, tuple(substitute(sigma, a) for a in e.args))
    if isinstance(e, Atom):
        return Atom(e.pred, tuple(substitute(sigma, a) for a in e.args))
    if isinstance(e, Clause):
        return Clause(
            (substitute(sigma, a) for a in e.antecedent),
            (substitute(sigma, a) for a in e.succedent),
        )
    raise TypeError(f"cannot substitute into {e!r}")


def compose(s1: Subst, s2: Subst) -> Subst:
    """Substitution with substitute(compose(s1,s2), e) == substitute(s2, substitute(s1, e)).

    Identity bindings are dropped.  The result is idempotent whenever the
    sequential application admits an idempotent presentation (always the
    case for the unifier/matcher compositions used here).
    """
    out: Subst = {}
    for v, t in s1.items():
        t2 = substitute(s2, t)
        if t2 != v:
            out[v] = t2
    for v, t in s2.items():
        if v not in s1 and t != v:
            out[v] = t
    return out


def occurs_in(v: Var, t: Term) -> bool:
    return v in vars_of(t)


def _decompose(e1, e2) -> list[tuple[Term, Term]] | None:
    """Initial pair list for unification/matching; None on head clash."""
    if isinstance(e1, Atom) and isinstance(e2, Atom):
        if e1.pred != e2.pred or len(e1.args) != len(e2.args):
            return None
        return list(zip(e1.args, e2.args))
    if isinstance(e1, Atom) or isinstance(e2, Atom):
        raise TypeError("cannot unify an atom with a term")
    return [(e1, e2)]


def mgu(e1, e2) -> Subst | None:
    """Most general unifier of two terms or two atoms, or None.

    Deterministic: pairs are processed left to right, and a variable-variable
    pair binds the variable with the syntactically smaller name.
    """
    pairs = _decompose(e1, e2)
    if pairs is None:
        return None
    sigma: Subst = {}
    while pairs:
        s, t = pairs.pop(0)
        s = substitute(sigma, s)
        t = substitute(sigma, t)
        if s == t:
            continue
        if isinstance(s, Var) and isinstance(t, Var):
            v, u = (s, t) if s.name < t.name else (t, s)
            sigma = _bind(sigma, v, u)
        elif isinstance(s, Var):
            if occurs_in(s, t):
                return None
            sigma = _bind(sigma, s, t)
        elif isinstance(t, Var):
            if occurs_in(t, s):
                return None
            sigma = _bind(sigma, t, s)
        else:
            if s.name != t.name or len(s.args) != len(t.args):
                return None
            pairs[0:0] = list(zip(s.args, t.args))
    return sigma


def _bind(sigma: Subst, v: Var, t: Term) -> Subst:
    one = {v: t}
    out = {x: substitute(one, u) for x, u in sigma.items()}
    out[v] = t
    return out


def match_onto(pattern, target) -> Subst | None:
    """Substitution sigma with substitute(sigma, pattern) == target, or None.

    One-sided: only variables of the pattern are bound; the unique such
    substitution is returned when it exists.
    """
    pairs = _decompose(pattern, target)
    if pairs is None:
        return None
    sigma: Subst = {}
    while pairs:
        p, t = pairs.pop(0)
        if isinstance(p, Var):
            if p in sigma:
                if sigma[p] != t:
                    return None
            else:
                sigma[p] = t
        elif isinstance(t, Fn) and p.name == t.name and len(p.args) == len(t.args):
            pairs[0:0] = list(zip(p.args, t.args))
        else:
            return None
    return sigma


def fresh_names(used: set[str], count: int, prefix: str = "V") -> list[str]:
    """Deterministic fresh variable names prefix0, prefix1, ... skipping used."""
    out: list[str] = []
    i = 0
    while len(out) < count:
        name = f"{prefix}{i}"
        if name not in used:
            out.append(name)
        i += 1
    return out


def rename_apart(c: Clause, forbidden: Iterable[Var]) -> Clause:
    """Variant of c whose variables avoid the forbidden set; always systematic."""
    own = sorted(vars_of(c), key=lambda v: v.name)
    if not own:
        return c
    used = {v.name for v in forbidden} | {v.name for v in own}
    names = fresh_names(used, len(own))
    rho: Subst = {v: Var(n) for v, n in zip(own, names)}
    return substitute(rho, c)


FreezeMap = dict[Var, Fn]


def frozen_constant(index: int) -> Fn:
    return Fn(f"{FROZEN_PREFIX}{index}")


def is_frozen_symbol(name: str) -> bool:
    return name.startswith(FROZEN_PREFIX)


def freeze(c: Clause) -> tuple[Clause, FreezeMap]:
    """Replace each variable by a distinct fresh frozen constant.

    The result is ground; the returned map inverts the replacement.  Frozen
    constants are numbered by first occurrence in the canonical clause form.
    """
    mapping: FreezeMap = {}
    order: list[Var] = []
    for a in c.antecedent + c.succedent:
        for v in _vars_in_order(a):
            if v not in mapping:
                mapping[v] = frozen_constant(len(mapping) + 1)
                order.append(v)
    return substitute(mapping, c), mapping


def _vars_in_order(a: Atom) -> list[Var]:
    out: list[Var] = []

    def walk(t: Term) -> None:
        if isinstance(t, Var):
            if t not in out:
                out.append(t)
        else:
            for x in t.args:
                walk(x)

    for t in a.args:
        walk(t)
    return out


def unfreeze(mapping: FreezeMap, e):
    """Invert a freeze map, turning its frozen constants back into variables."""
    inverse = {fn: v for v, fn in mapping.items()}

    def back(t: Term) -> Term:
        if isinstance(t, Var):
            return t
        if t in inverse:
            return inverse[t]
        return Fn(t.name, tuple(back(a) for a in t.args))

    if isinstance(e, Atom):
        return Atom(e.pred, tuple(back(t) for t in e.args))
    if isinstance(e, Clause):
        return Clause(
            (unfreeze(mapping, a) for a in e.antecedent),
            (unfreeze(mapping, a) for a in e.succedent),
        )
    return back(e)


class ArityError(ValueError):
    pass


class Signature:
    """Function and predicate symbols with arities, consistency-checked."""

    def __init__(self) -> None:
        self.functions: dict[str, int] = {}
        self.predicates: dict[str, int] = {}

    def note_function(self, name: str, arity: int) -> None:
        if name in self.predicates:
            raise ArityError(f"symbol '{name}' used both as predicate and function")
        old = self.functions.setdefault(name, arity)
        if old != arity:
            raise ArityError(f"function '{name}' used with arities {old} and {arity}")

    def note_predicate(self, name: str, arity: int) -> None:
        if name in self.functions:
            raise ArityError(f"symbol '{name}' used both as predicate and function")
        old = self.predicates.setdefault(name, arity)
        if old != arity:
            raise ArityError(f"predicate '{name}' used with arities {old} and {arity}")

    def scan_term(self, t: Term) -> None:
        if isinstance(t, Fn):
            self.note_function(t.name, len(t.args))
            for a in t.args:
                self.scan_term(a)

    def scan_atom(self, a: Atom) -> None:
        self.note_predicate(a.pred, len(a.args))
        for t in a.args:
            self.scan_term(t)

    def scan_clause(self, c: Clause) -> None:
        for a in c.antecedent + c.succedent:
            self.scan_atom(a)

    @classmethod
    def scan(cls, clauses: Iterable[Clause]) -> "Signature":
        sig = cls()
        for c in clauses:
            sig.scan_clause(c)
        return sig

    def constants(self) -> list[str]:
        return sorted(n for n, k in self.functions.items() if k == 0)
