"""Regenerate the test corpus under tests/corpus/.

Run from the repository root:  python tests/make_corpus.py

Curated, seeded generation: random problems from several families are kept
only when they saturate within generous limits, so the committed corpus is
deterministic and every problem terminates.
"""

from __future__ import annotations

import random
from pathlib import Path

from satloc import Limits, parse_problem, saturate

CORPUS = Path(__file__).parent / "corpus"
SEED = 20260809
CURATION_LIMITS = Limits(max_clauses=30, max_steps=1500)

HANDWRITTEN = {
    "h00_worked.p": """\
% two-clause system whose single inference only contributes a rewrite rule
order: f > g > a
clause: -> p(g(W,W))
clause: p(g(X,Y)), q(f(Y),X) ->
query: q(f(a),a) ->
query: -> p(a)
""",
    "h01_refutation.p": """\
% inconsistent pair: saturation discovers the empty clause
clause: -> p(X)
clause: p(X) ->
""",
    "h02_propositional.p": """\
% 0-ary atoms only
clause: -> wet, dry
clause: wet -> slippery
clause: dry -> dusty
clause: slippery, dusty ->
""",
    "h03_guarded_growth.p": """\
% the generative rule never resolves (its positive atom is not maximal),
% queries are answered through the harvested rewrite rules instead
order: f > a
clause: -> p(a)
clause: p(X) -> p(f(X))
""",
    "h04_disjunctive.p": """\
% non-Horn start, both branches close to the same place
order: a
clause: -> p(a), q(a)
clause: p(X) -> r(X)
clause: q(X) -> r(X)
""",
    "h05_tautology.p": """\
% contains a tautology; it may only ever harvest rules
order: f > a > b
clause: p(f(X)), q(a) -> p(f(X))
clause: p(f(a)) ->
clause: -> q(a)
""",
    "h06_dup_variants.p": """\
% renamed duplicates collapse at initialization
clause: p(X) -> q(X,X)
clause: p(Y) -> q(Y,Y)
clause: -> p(a)
""",
    "h07_chain.p": """\
% Horn chain over a unary signature
order: f > a
clause: -> p(f(a))
clause: p(X) -> q(X)
clause: q(X) -> r(X)
""",
    "h08_symmetric.p": """\
% symmetry rule: its self-resolvent is a tautology, hence redundant
order: a > b
clause: p(X,Y) -> p(Y,X)
clause: -> p(a,b)
""",
    "h09_deepening.p": """\
% rules whose right-hand sides deepen terms but still descend in the order
order: g2 > f > a
clause: -> p(g2(a))
clause: p(g2(X)) -> q(f(f(X)))
clause: q(X) -> r(X)
""",
}


def emit(path: Path, text: str) -> bool:
    problem = parse_problem(text)
    state = saturate(problem.ordering, problem.clauses, CURATION_LIMITS)
    if state.status != "saturated":
        return False
    path.write_text(text, encoding="utf-8")
    return True


def gen_ground(rng: random.Random) -> str:
    consts = ["a", "b"]
    preds = [("p", 1), ("q", 2), ("r", 1), ("s0", 0)]
    use_f = rng.random() < 0.5
    terms = list(consts) + (["f(a)", "f(b)"] if use_f else [])

    def atom() -> str:
        name, arity = rng.choice(preds)
        if arity == 0:
            return name
        return f"{name}({','.join(rng.choice(terms) for _ in range(arity))})"

    lines = []
    symbols = (["f"] if use_f else []) + consts
    rng.shuffle(symbols)
    lines.append("order: " + " > ".join(symbols))
    for _ in range(rng.randint(3, 6)):
        n_ant = rng.randint(0, 2)
        n_suc = rng.randint(0 if n_ant else 1, 2)
        ant = ", ".join(atom() for _ in range(n_ant))
        suc = ", ".join(atom() for _ in range(n_suc))
        lines.append(f"clause: {ant} -> {suc}".replace("  ", " "))
    return "\n".join(lines) + "\n"


def gen_horn(rng: random.Random) -> str:
    preds = ["p", "q", "r", "t"]
    consts = ["a", "b"]
    lines = ["order: f > " + " > ".join(rng.sample(consts, len(consts)))]
    fact_terms = ["a", "b", "f(a)", "f(b)"]
    for _ in range(rng.randint(1, 3)):
        lines.append(f"clause: -> {rng.choice(preds)}({rng.choice(fact_terms)})")
    for _ in range(rng.randint(2, 4)):
        body = sorted(rng.sample(preds, rng.randint(1, 2)))
        head = rng.choice(preds)
        ant = ", ".join(f"{b}(X)" for b in body)
        lines.append(f"clause: {ant} -> {head}(X)")
    return "\n".join(lines) + "\n"


def gen_growth(rng: random.Random) -> str:
    preds = ["p", "q", "r"]
    lines = ["order: f > a > b"]
    for _ in range(rng.randint(1, 2)):
        lines.append(f"clause: -> {rng.choice(preds)}({rng.choice(['a', 'b'])})")
    for _ in range(rng.randint(1, 3)):
        src, dst = rng.choice(preds), rng.choice(preds)
        lines.append(f"clause: {src}(X) -> {dst}(f(X))")
    for _ in range(rng.randint(0, 2)):
        src, dst = rng.choice(preds), rng.choice(preds)
        lines.append(f"clause: {src}(f(X)) -> {dst}(X)")
    return "\n".join(lines) + "\n"


def gen_disjunctive(rng: random.Random) -> str:
    preds = ["p", "q", "r"]
    lines = ["order: a > b"]
    c1, c2 = rng.sample(preds, 2)
    const = rng.choice(["a", "b"])
    lines.append(f"clause: -> {c1}({const}), {c2}({const})")
    for src in (c1, c2):
        lines.append(f"clause: {src}(X) -> {rng.choice(preds)}(X)")
    if rng.random() < 0.5:
        lines.append(f"clause: {rng.choice(preds)}({const}) ->")
    return "\n".join(lines) + "\n"


def gen_mixed(rng: random.Random) -> str:
    preds = [("p", 1), ("q", 2), ("r", 1)]
    terms = ["a", "b", "X", "Y", "f(X)", "f(a)"]

    def atom() -> str:
        name, arity = rng.choice(preds)
        return f"{name}({','.join(rng.choice(terms) for _ in range(arity))})"

    symbols = ["f", "a", "b"]
    rng.shuffle(symbols)
    lines = ["order: " + " > ".join(symbols)]
    for _ in range(rng.randint(2, 5)):
        n_ant = rng.randint(0, 2)
        n_suc = rng.randint(0 if n_ant else 1, 2)
        ant = ", ".join(atom() for _ in range(n_ant))
        suc = ", ".join(atom() for _ in range(n_suc))
        lines.append(f"clause: {ant} -> {suc}".replace("  ", " "))
    return "\n".join(lines) + "\n"


FAMILIES = [
    ("ground", gen_ground, 12),
    ("horn", gen_horn, 12),
    ("growth", gen_growth, 8),
    ("disj", gen_disjunctive, 6),
    ("mixed", gen_mixed, 9),
]


def main() -> None:
    CORPUS.mkdir(exist_ok=True)
    for old in CORPUS.glob("*.p"):
        old.unlink()
    for name, text in HANDWRITTEN.items():
        if not emit(CORPUS / name, text):
            raise SystemExit(f"handwritten problem {name} does not saturate")
    rng = random.Random(SEED)
    total = len(HANDWRITTEN)
    for family, gen, want in FAMILIES:
        kept = 0
        attempts = 0
        while kept < want:
            attempts += 1
            if attempts > 400:
                raise SystemExit(f"family {family}: too many rejections")
            text = f"% family: {family}\n" + gen(rng)
            if emit(CORPUS / f"g_{family}_{kept:02d}.p", text):
                kept += 1
                total += 1
    print(f"wrote {total} corpus problems to {CORPUS}")


if __name__ == "__main__":
    main()
