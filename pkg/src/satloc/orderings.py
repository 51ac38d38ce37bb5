"""Lexicographic path ordering and the induced atom and set orderings.

The atom ordering compares argument terms only: A is greater than B when
every argument of B sits strictly below some argument of A under the LPO.
Predicate symbols never participate, so many atom pairs are incomparable;
that is fine because nothing here requires totality on atoms.
"""

from __future__ import annotations

from typing import Iterable

from .terms import Atom, Term, Var, is_frozen_symbol, vars_of


class Ordering:
    """Total strict precedence on function symbols plus the derived orders.

    Symbols are ranked by position in the construction sequence, highest
    first.  Frozen constants rank below every listed symbol and among
    themselves by creation index.
    """

    def __init__(self, symbols: Iterable[str] = ()):
        self._chain: list[str] = []
        self._rank: dict[str, int] = {}
        for name in symbols:
            self._append(name)

    def _append(self, name: str) -> None:
        if is_frozen_symbol(name):
            raise ValueError(f"frozen constant '{name}' cannot be ranked explicitly")
        if name in self._rank:
            raise ValueError(f"duplicate symbol '{name}' in precedence")
        self._chain.append(name)
        self._rank[name] = -len(self._chain)

    def extended(self, names: Iterable[str]) -> "Ordering":
        """New ordering with unseen names appended below the existing chain."""
        out = Ordering(self._chain)
        for n in names:
            if n not in out._rank:
                out._append(n)
        return out

    def symbols(self) -> list[str]:
        """Ranked symbols, greatest first."""
        return list(self._chain)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ordering) and self._chain == other._chain

    def __repr__(self) -> str:
        return f"Ordering({' > '.join(self._chain)})"

    def sym_key(self, name: str):
        if is_frozen_symbol(name):
            return (0, int(name[1:]))
        try:
            return (1, self._rank[name])
        except KeyError:
            raise KeyError(f"symbol '{name}' is not in the precedence") from None

    def lpo_greater(self, s: Term, t: Term) -> bool:
        """Standard lexicographic path ordering on terms."""
        if s == t:
            return False
        if isinstance(s, Var):
            return False
        if isinstance(t, Var):
            return t in vars_of(s)
        # s = f(s1..sm), t = g(t1..tn)
        if any(a == t or self.lpo_greater(a, t) for a in s.args):
            return True
        ks = self.sym_key(s.name)
        kt = self.sym_key(t.name)
        if ks > kt:
            return all(self.lpo_greater(s, b) for b in t.args)
        if ks == kt:
            # same symbol: lexicographic on arguments, remainder below s
            for i, (a, b) in enumerate(zip(s.args, t.args)):
                if a == b:
                    continue
                if self.lpo_greater(a, b):
                    return all(self.lpo_greater(s, b2) for b2 in t.args[i + 1:])
                return False
        return False

    def atom_greater(self, a: Atom, b: Atom) -> bool:
        """True iff a is strictly above b in the argumentwise atom ordering.

        Holds when a != b, a has at least one argument, and every argument
        of b is strictly below some argument of a.  Distinct 0-ary atoms
        are incomparable.
        """
        if a == b:
            return False
        if not a.args:
            return False
        result = all(any(self.lpo_greater(t, s) for t in a.args) for s in b.args)
        # standing hypothesis: greater atoms carry at least the variables
        assert not result or vars_of(b) <= vars_of(a)
        return result

    def set_greater(self, eta1: Iterable[Atom], eta2: Iterable[Atom]) -> bool:
        """Set extension: drops of eta1 must dominate additions in eta2."""
        s1 = frozenset(eta1)
        s2 = frozenset(eta2)
        if s1 == s2:
            return False
        only1 = s1 - s2
        return all(any(self.atom_greater(e1, e) for e1 in only1) for e in s2 - s1)

    def is_maximal(self, a: Atom, others: Iterable[Atom]) -> bool:
        return not any(self.atom_greater(e, a) for e in others)

    def is_strictly_maximal(self, a: Atom, others: Iterable[Atom]) -> bool:
        return not any(e == a or self.atom_greater(e, a) for e in others)


def symbols_in_first_occurrence(terms: Iterable[Term]) -> list[str]:
    """Function symbols in depth-first, left-to-right first occurrence order."""
    out: list[str] = []
    seen: set[str] = set()

    def walk(t: Term) -> None:
        if isinstance(t, Var):
            return
        if t.name not in seen:
            seen.add(t.name)
            out.append(t.name)
        for a in t.args:
            walk(a)

    for t in terms:
        walk(t)
    return out
