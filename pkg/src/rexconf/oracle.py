"""A slow, direct reference construction used to cross-check the engine.

Instead of one automaton per variable plus a decision diagram, this builds
a single product automaton over *every* match automaton of *every*
variable at once.  Its letters are (variable, letter) pairs; a letter
advances all coordinates of its variable and leaves the rest untouched.
A product state is accepting when the per-atom truth values it induces
satisfy every constraint formula.

Everything here favours obviousness over speed — it exists so that the
engine's answers (append validity, valid domains, completability) can be
checked against an independently derived source of truth on small
problems.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from .alphabet import EOL, Alphabet
from .dfa import Dfa, dfa_language_equivalent, minimize_dfa
from .engine import build
from .errors import BudgetExceeded, InfeasibleProblem, InvalidAppend, StateBudgetExceeded
from .formulas import eval_formula
from .problem import Problem, make_problem

STATE_BUDGET = 10**6


@dataclass
class BigDfa:
    """Product over all match automata of all variables."""

    problem: Problem
    coord_var: tuple[int, ...]  # owning variable of each coordinate
    coord_dfas: tuple[Dfa, ...]
    states: list[tuple[int, ...]]
    index: dict[tuple[int, ...], int]
    delta: list[list[int]]  # row per state; column var*n_letters+letter
    accepting: frozenset[int]
    live: frozenset[int]
    useful: frozenset[int] = field(default_factory=frozenset)

    @property
    def n_states(self) -> int:
        return len(self.states)

    @property
    def live_count(self) -> int:
        return len(self.live)

    @property
    def source(self) -> int:
        return 0

    def step(self, state: int, var_index: int, letter_index: int) -> int:
        n_letters = self.problem.alphabet.n_effective
        return self.delta[state][var_index * n_letters + letter_index]

    def run(self, state: int, var_index: int, word: str) -> int:
        for ch in word:
            state = self.step(state, var_index, self.problem.alphabet.index(ch))
        return state


def build_big_dfa(problem: Problem, budget: int = STATE_BUDGET) -> BigDfa:
    alphabet = problem.alphabet
    n_letters = alphabet.n_effective

    coord_var: list[int] = []
    coord_dfas: list[Dfa] = []
    for i in range(problem.n_vars):
        for d in problem.compile_atoms(i):
            coord_var.append(i)
            coord_dfas.append(d)
    n_coords = len(coord_dfas)
    dead_of = [d.dead_state() for d in coord_dfas]

    atom_keys: list[tuple[str, str]] = []
    for i, name in enumerate(problem.variables):
        for pattern in problem.atoms[i]:
            atom_keys.append((name, pattern))

    def is_accepting(state: tuple[int, ...]) -> bool:
        truth = {
            atom_keys[j]: state[j] in coord_dfas[j].accepting for j in range(n_coords)
        }
        return all(eval_formula(f, truth) for f in problem.formulas)

    def is_live(state: tuple[int, ...]) -> bool:
        return all(state[j] != dead_of[j] for j in range(n_coords))

    source = tuple(d.source for d in coord_dfas)
    states: list[tuple[int, ...]] = [source]
    index: dict[tuple[int, ...], int] = {source: 0}
    delta: list[list[int]] = []
    queue: deque[int] = deque([0])
    while queue:
        q = queue.popleft()
        state = states[q]
        row: list[int] = []
        for i in range(problem.n_vars):
            for c in range(n_letters):
                nxt = tuple(
                    coord_dfas[j].step(state[j], c) if coord_var[j] == i else state[j]
                    for j in range(n_coords)
                )
                t = index.get(nxt)
                if t is None:
                    if len(states) >= budget:
                        raise StateBudgetExceeded(
                            f"product automaton exceeds {budget} states"
                        )
                    t = len(states)
                    index[nxt] = t
                    states.append(nxt)
                    queue.append(t)
                row.append(t)
        delta.append(row)

    accepting = frozenset(q for q in range(len(states)) if is_accepting(states[q]))
    live = frozenset(q for q in range(len(states)) if is_live(states[q]))
    big = BigDfa(
        problem=problem,
        coord_var=tuple(coord_var),
        coord_dfas=tuple(coord_dfas),
        states=states,
        index=index,
        delta=delta,
        accepting=accepting,
        live=live,
    )
    big.useful = _coreachable_over(big, set(range(problem.n_vars)))
    return big


def _coreachable_over(big: BigDfa, variables: set[int]) -> frozenset[int]:
    """States from which acceptance is reachable using only letters of the
    given variables (the empty word counts, so accepting states qualify)."""
    n_letters = big.problem.alphabet.n_effective
    columns = [i * n_letters + c for i in variables for c in range(n_letters)]
    preds: list[list[int]] = [[] for _ in range(big.n_states)]
    for q in range(big.n_states):
        row = big.delta[q]
        for col in columns:
            preds[row[col]].append(q)
    seen = set(big.accepting)
    frontier = list(big.accepting)
    while frontier:
        q = frontier.pop()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                frontier.append(p)
    return frozenset(seen)


def big_dfa_valid_domain(big: BigDfa, state: int, var_index: int) -> Dfa:
    """Valid domain of one variable from a product state: words w such
    that, with w appended to the variable and nothing more, the other
    variables can still be extended to reach acceptance."""
    others = set(range(big.problem.n_vars)) - {var_index}
    target = _coreachable_over(big, others)

    n_letters = big.problem.alphabet.n_effective
    local_of: dict[int, int] = {state: 0}
    order: list[int] = [state]
    queue: deque[int] = deque([state])
    while queue:
        q = queue.popleft()
        for c in range(n_letters):
            t = big.delta[q][var_index * n_letters + c]
            if t not in local_of:
                local_of[t] = len(order)
                order.append(t)
                queue.append(t)
    delta: list[int] = []
    for q in order:
        for c in range(n_letters):
            delta.append(local_of[big.delta[q][var_index * n_letters + c]])
    accepting = frozenset(local_of[q] for q in order if q in target)
    return minimize_dfa(
        Dfa(big.problem.alphabet, len(order), tuple(delta), 0, accepting)
    )


def enumerate_solutions(
    problem: Problem, max_len: int, budget: int = 200_000
) -> list[tuple[str, ...]]:
    """All solutions whose values are at most max_len letters, by brute
    force over the effective alphabet."""
    big = build_big_dfa(problem)
    letters = problem.alphabet.effective

    def words() -> list[str]:
        out = [""]
        layer = [""]
        for _ in range(max_len):
            layer = [w + ch for w in layer for ch in letters]
            out.extend(layer)
        return out

    per_var = words()
    total = len(per_var) ** problem.n_vars
    if total > budget:
        raise BudgetExceeded(
            f"{total} candidate assignments exceed the budget of {budget}"
        )

    solutions: list[tuple[str, ...]] = []

    def rec(i: int, state: int, prefix: tuple[str, ...]) -> None:
        if i == problem.n_vars:
            if state in big.accepting:
                solutions.append(prefix)
            return
        for w in per_var:
            rec(i + 1, big.run(state, i, w), prefix + (w,))

    rec(0, big.source, ())
    return solutions


# -- differential checking ------------------------------------------------

Action = tuple  # ("append", var, text) | ("complete", var) | ("undo",)


class OracleSession:
    """Replays the same interaction trace against the product automaton."""

    def __init__(self, big: BigDfa):
        self.big = big
        self.state = big.source
        self.values = [""] * big.problem.n_vars
        self.completed = [False] * big.problem.n_vars
        self._undo: list[tuple[int, tuple[str, ...], tuple[bool, ...]]] = []

    def _push(self) -> None:
        self._undo.append((self.state, tuple(self.values), tuple(self.completed)))

    def try_append(self, var_index: int, text: str) -> bool:
        target = self.big.run(self.state, var_index, text)
        if target not in self.big.useful:
            return False
        self._push()
        self.state = target
        self.values[var_index] += text
        return True

    def try_complete(self, var_index: int) -> bool:
        target = self.big.run(self.state, var_index, EOL)
        if target not in self.big.useful:
            return False
        self._push()
        self.state = target
        self.values[var_index] += EOL
        self.completed[var_index] = True
        return True

    def undo(self) -> None:
        self.state, values, completed = self._undo.pop()
        self.values = list(values)
        self.completed = list(completed)

    def can_complete(self, var_index: int) -> bool:
        if not self.big.problem.alphabet.eol or self.completed[var_index]:
            return False
        target = self.big.run(self.state, var_index, EOL)
        return target in self.big.useful

    def next_letters(self, var_index: int) -> list[str]:
        if self.completed[var_index]:
            return []
        out = []
        for c, ch in enumerate(self.big.problem.alphabet.letters):
            n_letters = self.big.problem.alphabet.n_effective
            target = self.big.delta[self.state][var_index * n_letters + c]
            if target in self.big.useful:
                out.append(ch)
        return out

    def valid_domain(self, var_index: int) -> Dfa:
        return big_dfa_valid_domain(self.big, self.state, var_index)


def check_equivalence(
    problem: Problem, actions: list[Action]
) -> list[dict]:
    """Runs one trace through both constructions and reports every
    disagreement as a JSON-ready record."""
    divergences: list[dict] = []
    engine = build(problem)
    big = build_big_dfa(problem)
    oracle = OracleSession(big)
    names = problem.variables

    def record(action_index: int, kind: str, variable: str | None, expected, actual):
        divergences.append(
            {
                "problem_hash": problem.stable_hash(),
                "action_index": action_index,
                "kind": kind,
                "variable": variable,
                "expected": expected,
                "actual": actual,
            }
        )

    def compare_views(action_index: int) -> None:
        for i, name in enumerate(names):
            expected = oracle.valid_domain(i)
            actual = engine.valid_domain(name)
            same, witness = dfa_language_equivalent(expected, actual)
            if not same:
                record(
                    action_index,
                    "valid_domain",
                    name,
                    {"witness": witness, "in_domain": expected.accepts(witness)},
                    {"witness": witness, "in_domain": actual.accepts(witness)},
                )
            exp_cc = oracle.can_complete(i)
            act_cc = engine.can_complete(name)
            if exp_cc != act_cc:
                record(action_index, "can_complete", name, exp_cc, act_cc)
            exp_nl = oracle.next_letters(i)
            act_nl = engine.next_letters(name)
            if exp_nl != act_nl:
                record(action_index, "next_letters", name, exp_nl, act_nl)

    compare_views(-1)
    for idx, action in enumerate(actions):
        op = action[0]
        if op == "append":
            _, name, text = action
            i = problem.var_index(name)
            expected_ok = oracle.try_append(i, text)
            try:
                engine.append(name, text)
                actual_ok = True
            except InvalidAppend:
                actual_ok = False
            if expected_ok != actual_ok:
                record(idx, "append_validity", name, expected_ok, actual_ok)
                if expected_ok:
                    oracle.undo()
        elif op == "complete":
            _, name = action
            i = problem.var_index(name)
            expected_ok = oracle.try_complete(i)
            try:
                engine.complete(name)
                actual_ok = True
            except InvalidAppend:
                actual_ok = False
            if expected_ok != actual_ok:
                record(idx, "complete_validity", name, expected_ok, actual_ok)
                if expected_ok:
                    oracle.undo()
        elif op == "undo":
            engine.undo()
            oracle.undo()
        else:
            raise ValueError(f"unknown action {op!r}")
        compare_views(idx)
    return divergences


# -- random problem and trace generation ----------------------------------


def random_regex(rng: random.Random, letters: tuple[str, ...], depth: int = 3) -> str:
    """A small random pattern in the package's regex syntax."""

    def atom() -> str:
        roll = rng.random()
        if roll < 0.55:
            return rng.choice(letters)
        if roll < 0.7:
            return "."
        if roll < 0.85 and len(letters) >= 2:
            sample = rng.sample(letters, rng.randint(2, min(3, len(letters))))
            return "[" + "".join(sample) + "]"
        return "()"

    def node(d: int) -> str:
        if d <= 0:
            return atom()
        roll = rng.random()
        if roll < 0.35:
            return node(d - 1) + node(d - 1)
        if roll < 0.6:
            return "(" + node(d - 1) + "|" + node(d - 1) + ")"
        if roll < 0.75:
            return "(" + node(d - 1) + ")*"
        return atom()

    return node(depth)


def random_problem(rng: random.Random) -> Problem:
    n_letters = rng.randint(2, 3)
    letters = tuple("abcd"[:n_letters])
    eol = rng.random() < 0.4
    n_vars = rng.randint(1, 3)
    variables = [f"x{i + 1}" for i in range(n_vars)]

    def random_atom() -> str:
        var = rng.choice(variables)
        pattern = random_regex(rng, letters, depth=rng.randint(1, 3))
        if eol and rng.random() < 0.5:
            pattern = f"{pattern}(()|$)"
        return f'match({var}, "{pattern}")'

    def random_formula(d: int) -> str:
        if d <= 0:
            return random_atom()
        roll = rng.random()
        if roll < 0.2:
            return f"!({random_formula(d - 1)})"
        op = rng.choice(["&&", "||", "->", "<->"])
        return f"({random_formula(d - 1)}) {op} ({random_formula(d - 1)})"

    constraints = [random_formula(rng.randint(0, 2)) for _ in range(rng.randint(1, 3))]
    return make_problem(variables, Alphabet(letters, eol=eol), constraints)


def random_trace(rng: random.Random, problem: Problem, length: int = 8) -> list[Action]:
    """A random interface-legal action sequence (appends may be invalid;
    completes and undos are only emitted when the interface allows them)."""
    actions: list[Action] = []
    completed = [False] * problem.n_vars
    depth = 0
    sim = build(problem)
    for _ in range(length):
        open_vars = [i for i in range(problem.n_vars) if not completed[i]]
        roll = rng.random()
        if roll < 0.12 and depth > 0:
            actions.append(("undo",))
            sim.undo()
            completed = list(sim.completed)
            depth -= 1
            continue
        if not open_vars:
            break
        i = rng.choice(open_vars)
        name = problem.variables[i]
        if problem.alphabet.eol and roll > 0.82:
            if sim.can_complete(name):
                actions.append(("complete", name))
                sim.complete(name)
                completed[i] = True
                depth += 1
            continue
        text = "".join(
            rng.choice(problem.alphabet.letters)
            for _ in range(rng.randint(1, 2))
        )
        actions.append(("append", name, text))
        try:
            sim.append(name, text)
            depth += 1
        except InvalidAppend:
            pass
    return actions


def run_random_checks(n_problems: int, seed: int) -> list[dict]:
    """Differential fuzzing entry point used by the command line."""
    rng = random.Random(seed)
    divergences: list[dict] = []
    for _ in range(n_problems):
        problem = random_problem(rng)
        try:
            build(problem)
        except InfeasibleProblem:
            # Nothing to interact with; feasibility itself is cross-checked
            # against brute-force enumeration in the test suite.
            continue
        trace = random_trace(rng, problem)
        divergences.extend(check_equivalence(problem, trace))
    return divergences
