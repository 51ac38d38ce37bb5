"""Command line front end: saturate, query, verify, oracle.

Exit codes: 0 success / saturated / verified, 2 limit reached or refused
unsaturated query, 3 input errors (parse, arity, non-ground query),
4 verification violations.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .oracle import HerbrandBound, DEFAULT_BUDGET, oracle_entails
from .parsing import (
    ParseError,
    parse_clause_text,
    parse_problem,
    parse_state,
    serialize_certificate,
    serialize_state,
)
from .query import NotSaturatedError, entails
from .saturation import SATURATED, Limits, saturate, verify_saturated
from .terms import ArityError, Signature


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satloc",
        description="Saturate first-order clause sets and decide ground entailment locally.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sat = sub.add_parser("saturate", help="saturate a problem file")
    p_sat.add_argument("file", help="problem file")
    p_sat.add_argument("--max-clauses", type=int, default=None)
    p_sat.add_argument("--max-steps", type=int, default=None)
    p_sat.add_argument("--out", default=None, help="write the state here instead of stdout")

    p_query = sub.add_parser("query", help="decide ground entailment against a state")
    p_query.add_argument("state", help="saturated-state file")
    p_query.add_argument("clauses", nargs="*", help='ground clauses such as "q(f(a),a) ->"')
    p_query.add_argument("--from", dest="from_file", default=None, help="read query: lines from a file")
    p_query.add_argument("--certificate", action="store_true", help="print the local certificate")
    p_query.add_argument(
        "--unsound-ok",
        action="store_true",
        help="run the local check against an unsaturated state anyway",
    )

    p_verify = sub.add_parser("verify", help="re-check saturatedness of a state")
    p_verify.add_argument("state", help="saturated-state file")

    p_oracle = sub.add_parser("oracle", help="bounded brute-force entailment check")
    p_oracle.add_argument("file", help="problem file")
    p_oracle.add_argument("clause", help="ground clause to test")
    p_oracle.add_argument("--depth", type=int, required=True, help="max term height")
    p_oracle.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return parser


def _cmd_saturate(args) -> int:
    problem = parse_problem(Path(args.file).read_text(encoding="utf-8"))
    limits = Limits(max_clauses=args.max_clauses, max_steps=args.max_steps)
    state = saturate(problem.ordering, problem.clauses, limits)
    text = serialize_state(state)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    print(
        f"{state.status}: {len(state.clauses)} clauses, {len(state.rules)} rules, "
        f"{state.stats.summary()}",
        file=sys.stderr,
    )
    return 0 if state.status == SATURATED else 2


def _cmd_query(args) -> int:
    state = parse_state(Path(args.state).read_text(encoding="utf-8"))
    sig = state_signature(state)
    goals = []
    for text in args.clauses:
        goals.append(parse_clause_text(text, sig))
    if args.from_file:
        problem = parse_problem(Path(args.from_file).read_text(encoding="utf-8"))
        goals.extend(problem.queries)
    for goal in goals:
        result = entails(state, goal, allow_unsaturated=args.unsound_ok)
        print(result.verdict)
        if args.certificate and result.certificate is not None:
            sys.stdout.write(serialize_certificate(result.certificate))
    return 0


def state_signature(state) -> Signature:
    sig = Signature.scan(state.clauses)
    for rule in state.rules.sorted_rules():
        sig.scan_atom(rule.lhs)
        sig.scan_atom(rule.rhs)
    return sig


def _cmd_verify(args) -> int:
    state = parse_state(Path(args.state).read_text(encoding="utf-8"))
    report = verify_saturated(state.ordering, state.clauses, state.rules)
    if report.ok:
        print("ok")
        return 0
    for violation in report.violations:
        print(violation)
    return 4


def _cmd_oracle(args) -> int:
    problem = parse_problem(Path(args.file).read_text(encoding="utf-8"))
    goal = parse_clause_text(args.clause, problem.signature)
    result = oracle_entails(
        problem.clauses, goal, HerbrandBound(args.depth), budget=args.budget
    )
    print(result.verdict if result.reason is None else f"{result.verdict} ({result.reason})")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "saturate": _cmd_saturate,
        "query": _cmd_query,
        "verify": _cmd_verify,
        "oracle": _cmd_oracle,
    }
    try:
        return handlers[args.command](args)
    except (ParseError, ArityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotSaturatedError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
