"""Command line entry points.

``rexconf check``    — differential validation of a problem (or random fuzzing)
``rexconf repl``     — interactive terminal configurator
``rexconf inspect``  — per-variable automaton and reachable-value dumps
``rexconf serve``    — run the HTTP service
"""

from __future__ import annotations

import argparse
import json
import random
import socket
import sys

from .engine import build
from .errors import (
    CompletionDisabled,
    InfeasibleProblem,
    InvalidAppend,
    NothingToUndo,
    RexconfError,
    UnknownVariable,
    VariableCompleted,
)
from .mdfa import construct_mdfa, mdfa_dump, minimize_mdfa
from .oracle import (
    build_big_dfa,
    check_equivalence,
    random_trace,
    run_random_checks,
)
from .problem import Problem, load_problem
from .reach import compute_reachable_acceptance_values


def _fail(message: str) -> int:
    print(message, file=sys.stderr)
    return 2


def _load(path: str) -> Problem:
    return load_problem(path)


# -- check ------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    if args.random is not None:
        divergences = run_random_checks(args.random, seed=args.seed)
        for item in divergences:
            print(json.dumps(item, sort_keys=True))
        print(f"checked {args.random} random problems: {len(divergences)} divergences")
        return 0 if not divergences else 1

    try:
        problem = _load(args.problem)
    except (OSError, ValueError) as e:
        return _fail(f"cannot load problem: {e}")

    try:
        session = build(problem)
    except InfeasibleProblem:
        big = build_big_dfa(problem)
        if big.source not in big.useful:
            print("infeasible problem; product automaton agrees (no reachable accepting state)")
            return 0
        print(
            json.dumps(
                {
                    "problem_hash": problem.stable_hash(),
                    "kind": "feasibility",
                    "expected": True,
                    "actual": False,
                }
            )
        )
        return 1

    big = build_big_dfa(problem)
    print("state counts")
    engine_total = 0
    for i, name in enumerate(problem.variables):
        n = session.mdfas[i].n_states
        engine_total += n
        print(f"  {name:<16} mdfa states {n}")
    print(f"  engine total     {engine_total}")
    print(f"  oracle product   {big.n_states} reachable ({big.live_count} live)")

    rng = random.Random(args.seed)
    divergences = list(check_equivalence(problem, []))
    for _ in range(args.traces):
        divergences.extend(check_equivalence(problem, random_trace(rng, problem)))
    for item in divergences:
        print(json.dumps(item, sort_keys=True))
    print(f"ran {args.traces} traces: {len(divergences)} divergences")
    return 0 if not divergences else 1


# -- repl -------------------------------------------------------------------


def _print_domains(session) -> None:
    for name in session.problem.variables:
        print(f"{name}: {session.valid_domain_regex(name)}")


def cmd_repl(args: argparse.Namespace) -> int:
    try:
        problem = _load(args.problem)
        session = build(problem)
    except (OSError, ValueError, InfeasibleProblem) as e:
        return _fail(str(e))

    prompt = "> " if sys.stdin.isatty() else ""
    while True:
        if prompt:
            print(prompt, end="", flush=True)
        line = sys.stdin.readline()
        if not line:
            return 0
        stripped = line.strip()
        if not stripped:
            continue
        words = stripped.split()
        cmd, rest = words[0], words[1:]
        try:
            if cmd == "quit":
                return 0
            elif cmd == "append" and len(rest) >= 2:
                # The text is everything after the variable name, so letters
                # like a declared space survive.
                _, _, text = stripped.split(maxsplit=2)
                session.append(words[1], text)
                _print_domains(session)
            elif cmd == "complete" and len(rest) == 1:
                session.complete(rest[0])
                _print_domains(session)
            elif cmd == "undo" and not rest:
                session.undo()
                _print_domains(session)
            elif cmd == "domain" and len(rest) == 1:
                print(session.valid_domain_regex(rest[0]))
            elif cmd == "suggest" and len(rest) in (2, 3):
                k = int(rest[1])
                cap = int(rest[2]) if len(rest) == 3 else 64
                for word in session.suggestions(rest[0], k, cap):
                    print(json.dumps(word))
            elif cmd == "state" and not rest:
                for name in problem.variables:
                    i = problem.var_index(name)
                    status = "completed" if session.completed[i] else "open"
                    print(f"{name}\t{json.dumps(session.values[i])}\t{status}")
            else:
                print(f"unknown command: {line.strip()}")
        except (RexconfError, ValueError) as e:
            message = e.args[0] if isinstance(e, UnknownVariable) else str(e)
            print(message)


# -- inspect ----------------------------------------------------------------


def cmd_inspect(args: argparse.Namespace) -> int:
    try:
        problem = _load(args.problem)
    except (OSError, ValueError) as e:
        return _fail(f"cannot load problem: {e}")

    if args.var is not None and args.var not in problem.variables:
        return _fail(f"unknown variable {args.var!r}")

    names = [args.var] if args.var is not None else list(problem.variables)
    for name in names:
        i = problem.var_index(name)
        print(f"variable {name}")
        patterns = problem.atoms[i]
        print(f"  atoms: {', '.join(json.dumps(p) for p in patterns) if patterns else '(none)'}")
        dfas = problem.compile_atoms(i)
        if dfas:
            m = minimize_mdfa(construct_mdfa(dfas))
        else:
            from .mdfa import AcceptanceValue, Mdfa

            m = Mdfa(
                problem.alphabet,
                1,
                tuple([0] * problem.alphabet.n_effective),
                0,
                (AcceptanceValue(()),),
            )
        reach = compute_reachable_acceptance_values(m)
        print("  state\tvalue\ttransitions")
        for line in mdfa_dump(m).splitlines():
            print(f"  {line}")
        print("  reachable acceptance values")
        for q in range(m.n_states):
            values = ",".join(str(v) for v in reach.sorted_vectors(q))
            print(f"  R({q}) = {{{values}}}")
    return 0


# -- serve ------------------------------------------------------------------


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import SessionStore, create_app

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((args.addr, args.port))
    except OSError as e:
        probe.close()
        return _fail(f"cannot bind {args.addr}:{args.port}: {e}")
    probe.close()

    store = SessionStore()
    if args.snapshot_dir:
        restored = store.load_snapshots(args.snapshot_dir)
        if restored:
            print(f"restored {restored} session(s) from {args.snapshot_dir}")
    app = create_app(store, static_dir=args.ui_dir)
    try:
        uvicorn.run(app, host=args.addr, port=args.port, log_level="warning")
    finally:
        if args.snapshot_dir:
            saved = store.save_snapshots(args.snapshot_dir)
            print(f"saved {saved} session snapshot(s) to {args.snapshot_dir}")
    return 0


# -- entry ------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rexconf",
        description="Interactive configuration over regular string constraints.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_check = sub.add_parser("check", help="differential validation against the product-automaton reference")
    p_check.add_argument("problem", nargs="?", help="problem JSON file")
    p_check.add_argument("--random", type=int, default=None, metavar="N", help="check N random problems instead of a file")
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--traces", type=int, default=20, help="random traces per problem in file mode")
    p_check.set_defaults(fn=cmd_check)

    p_repl = sub.add_parser("repl", help="interactive terminal configurator")
    p_repl.add_argument("problem")
    p_repl.set_defaults(fn=cmd_repl)

    p_inspect = sub.add_parser("inspect", help="dump automata and reachable acceptance values")
    p_inspect.add_argument("problem")
    p_inspect.add_argument("--var", default=None)
    p_inspect.set_defaults(fn=cmd_inspect)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--addr", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--snapshot-dir", default=None)
    p_serve.add_argument("--ui-dir", default=None, help="static directory served at /")
    p_serve.set_defaults(fn=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    if args.cmd == "check" and args.problem is None and args.random is None:
        return _fail("check needs a problem file or --random N")
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
