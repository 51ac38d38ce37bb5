"""Ground entailment queries against saturated states."""

import pytest

from helpers import at, cl
from satloc import (
    Limits,
    NotSaturatedError,
    entails,
    parse_problem,
    saturate,
)

WORKED = "order: f > g > a\nclause: -> p(g(W,W))\nclause: p(g(X,Y)), q(f(Y),X) ->\n"


def worked_state():
    problem = parse_problem(WORKED)
    return saturate(problem.ordering, problem.clauses)


def test_worked_queries():
    state = worked_state()
    r1 = entails(state, cl("q(f(a),a) ->"))
    assert r1.verdict == "entailed"
    assert r1.certificate is not None and r1.certificate.validate()
    assert r1.certificate.atom_universe == frozenset({at("q(f(a),a)"), at("p(g(a,a))")})
    assert r1.universe_size == 2

    r2 = entails(state, cl("-> p(a)"))
    assert r2.verdict == "not-entailed"
    assert r2.certificate is None
    assert r2.universe_size == 1


def test_tautology_always_entailed():
    state = worked_state()
    r = entails(state, cl("r(b) -> r(b)"))
    assert r.verdict == "entailed"


def test_query_with_new_constants():
    # constants unseen at saturation time are fine: no ordering is consulted
    state = worked_state()
    r = entails(state, cl("q(f(zz),zz) ->"))
    assert r.verdict == "entailed"


def test_nonground_query_rejected():
    state = worked_state()
    with pytest.raises(ValueError):
        entails(state, cl("-> p(X)"))


def test_unsaturated_refused_and_escape_hatch():
    problem = parse_problem(WORKED)
    state = saturate(problem.ordering, problem.clauses, Limits(max_steps=0))
    assert state.status == "limit_reached"
    with pytest.raises(NotSaturatedError):
        entails(state, cl("-> p(a)"))
    r = entails(state, cl("-> p(a)"), allow_unsaturated=True)
    assert r.verdict == "locally-not-provable"
    r2 = entails(state, cl("p(a) -> p(a)"), allow_unsaturated=True)
    assert r2.verdict == "entailed"  # positive answers stay sound


def test_inconsistent_state_entails_everything():
    problem = parse_problem("clause: -> p(X)\nclause: p(X) ->")
    state = saturate(problem.ordering, problem.clauses)
    r = entails(state, cl("-> q(a,a)"))
    assert r.verdict == "entailed"


def test_monotone_robustness_under_redundant_additions():
    # appending a clause that is already redundant (and whose state still
    # verifies) never flips a query verdict
    import random

    from helpers import ground_terms_up_to
    from satloc import (
        Atom,
        Clause,
        clause_redundant,
        rules_of,
        substitute,
        vars_of,
        verify_saturated,
    )
    from satloc.saturation import SaturationState

    rng = random.Random(127)
    problem = parse_problem(
        "order: f > a > b\nclause: -> p(a)\nclause: p(X) -> q(X)\nclause: q(X) -> r(X)"
    )
    state = saturate(problem.ordering, problem.clauses)
    assert state.status == "saturated"
    pool = ground_terms_up_to(1, funcs=[("f", 1)], consts=["a", "b"])
    queries = [
        Clause((), (Atom(p, (t,)),)) for p in ("p", "q", "r") for t in pool
    ] + [Clause((Atom(p, (pool[0],)),), ()) for p in ("p", "q", "r")]
    baseline = {str(q): entails(state, q).verdict for q in queries}

    extended = 0
    for base in problem.clauses:
        theta = {v: rng.choice(pool) for v in vars_of(base)}
        extra = substitute(theta, base)
        assert clause_redundant(state.clauses, state.rules, extra)
        clauses2 = state.clauses + [extra]
        rules2 = state.rules | rules_of(state.ordering, [extra])
        if not verify_saturated(state.ordering, clauses2, rules2).ok:
            continue
        state2 = SaturationState(
            ordering=state.ordering, clauses=clauses2, rules=rules2, status="saturated"
        )
        extended += 1
        for q in queries:
            assert entails(state2, q).verdict == baseline[str(q)], str(q)
    assert extended >= 1
