"""The product-automaton reference construction and differential checking."""

import random
from itertools import product as iter_product
from pathlib import Path

import pytest

from rexconf.alphabet import Alphabet
from rexconf.dfa import compile_dfa, dfa_language_equivalent
from rexconf.errors import BudgetExceeded, StateBudgetExceeded
from rexconf.formulas import eval_formula
from rexconf.oracle import (
    OracleSession,
    build_big_dfa,
    check_equivalence,
    enumerate_solutions,
    random_problem,
    random_trace,
    run_random_checks,
)
from rexconf.problem import load_problem, make_problem
from rexconf.rx import parse_regex

from oracles import words_up_to

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def big_example():
    return load_problem(str(FIXTURES / "big_dfa_example.json"))


def test_product_automaton_shape_on_the_two_variable_example():
    problem = big_example()
    big = build_big_dfa(problem)
    # One coordinate for x1's "ab", two for x2's "abc" and "abd*".
    assert big.coord_var == (0, 1, 1)
    assert [len(d.live_states()) for d in big.coord_dfas] == [3, 4, 3]
    assert big.n_states == 24
    assert big.live_count == 9
    assert len(big.accepting & big.live) == 1
    assert big.source == 0
    assert big.accepting <= big.useful
    assert big.source in big.useful


def test_product_domains_follow_the_appends():
    problem = big_example()
    big = build_big_dfa(problem)
    session = OracleSession(big)
    assert session.try_append(0, "a")
    assert session.try_append(1, "ab")
    alphabet = problem.alphabet
    want_x2 = compile_dfa(parse_regex("d*", alphabet), alphabet)
    assert dfa_language_equivalent(session.valid_domain(1), want_x2)[0]
    want_x1 = compile_dfa(parse_regex("b", alphabet), alphabet)
    assert dfa_language_equivalent(session.valid_domain(0), want_x1)[0]


def test_oracle_session_rejects_and_rolls_back():
    problem = big_example()
    big = build_big_dfa(problem)
    session = OracleSession(big)
    assert not session.try_append(1, "c")
    assert session.values == ["", ""]
    assert session.try_append(1, "abd")
    session.undo()
    assert session.values == ["", ""]
    assert session.state == big.source


def test_single_solution_problems_have_a_word_length_product_shape():
    # One solution x = "ab" per variable: every coordinate automaton
    # contributes word-length + 1 live states.
    alphabet = Alphabet(("a", "b"))
    for n_vars in (1, 2):
        variables = [f"x{i + 1}" for i in range(n_vars)]
        constraints = [f'match({v}, "ab")' for v in variables]
        big = build_big_dfa(make_problem(variables, alphabet, constraints))
        assert big.live_count == 3 ** n_vars


def test_enumeration_matches_direct_formula_evaluation():
    rng = random.Random(91)
    checked = 0
    while checked < 12:
        problem = random_problem(rng)
        if problem.n_vars > 2:
            continue
        checked += 1
        got = set(enumerate_solutions(problem, max_len=2))
        compiled = {
            (problem.variables[i], pattern): compile_dfa(ast, problem.alphabet)
            for i, patterns in enumerate(problem.atoms)
            for pattern, ast in zip(patterns, problem.atom_asts[i])
        }
        words = words_up_to(problem.alphabet.effective, 2)
        expected = set()
        for assignment in iter_product(words, repeat=problem.n_vars):
            truth = {
                key: dfa.accepts(assignment[problem.var_index(key[0])])
                for key, dfa in compiled.items()
            }
            if all(eval_formula(f, truth) for f in problem.formulas):
                expected.add(assignment)
        assert got == expected, problem.constraints


def test_budgets_bite():
    problem = big_example()
    with pytest.raises(StateBudgetExceeded):
        build_big_dfa(problem, budget=3)
    with pytest.raises(BudgetExceeded):
        enumerate_solutions(problem, max_len=4, budget=10)


def test_constraint_order_does_not_change_the_state_counts():
    base = big_example()
    flipped = make_problem(
        base.variables, base.alphabet, tuple(reversed(base.constraints))
    )
    a = build_big_dfa(base)
    b = build_big_dfa(flipped)
    assert a.n_states == b.n_states
    assert a.live_count == b.live_count
    assert len(a.accepting) == len(b.accepting)


def test_check_equivalence_passes_on_the_fixtures():
    for name in ("worked_example.json", "big_dfa_example.json"):
        problem = load_problem(str(FIXTURES / name))
        assert check_equivalence(problem, []) == []


def test_check_equivalence_follows_a_scripted_trace():
    problem = big_example()
    trace = [
        ("append", "x2", "ab"),
        ("append", "x1", "a"),
        ("append", "x2", "c"),  # invalid on both sides
        ("append", "x2", "dd"),
        ("undo",),
        ("append", "x1", "b"),
    ]
    assert check_equivalence(problem, trace) == []


def test_random_traces_stay_interface_legal():
    # A generated trace must replay on a fresh session without tripping any
    # interface error: undos always have something to undo, completes are
    # only emitted when they will succeed, appends use declared letters.
    from rexconf.engine import build
    from rexconf.errors import InfeasibleProblem, InvalidAppend

    rng = random.Random(92)
    for _ in range(20):
        problem = random_problem(rng)
        try:
            session = build(problem)
        except InfeasibleProblem:
            continue
        trace = random_trace(rng, problem)
        for action in trace:
            if action[0] == "undo":
                session.undo()
            elif action[0] == "complete":
                session.complete(action[1])
            else:
                assert action[2]
                assert all(ch in problem.alphabet.letters for ch in action[2])
                try:
                    session.append(action[1], action[2])
                except InvalidAppend:
                    pass


def test_differential_fuzzing_finds_no_divergences():
    assert run_random_checks(15, seed=7) == []
