"""Interactive configuration sessions.

``build`` turns a problem into a session: one pruned, minimized
multi-acceptance automaton per variable plus one decision diagram ``g``
holding everything known about the requirement bits.  Each automaton keeps
a cursor at the state its variable's current value leads to.

Appending letters w to variable i moves the cursor to t and conjoins
"variable i's bit vector is one of the acceptance values reachable from t"
onto ``g``; if that is unsatisfiable the append is rejected and nothing
changes.  The valid domain of a variable — every word w such that the
configuration extended with w still completes to a solution — falls out as
the automaton re-sourced at the cursor, accepting exactly the states whose
value occurs in some solution of ``g``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import bdd
from .alphabet import EOL
from .bdd import DdStore, dd_is_unsat, dd_project_block, encode_block_membership, encode_formula
from .dfa import Dfa
from .dfa_regex import dfa_to_regex
from .errors import (
    CompletionDisabled,
    InfeasibleProblem,
    InvalidAppend,
    LetterOutsideAlphabet,
    NothingToUndo,
    VariableCompleted,
)
from .mdfa import AcceptanceValue, Mdfa, construct_mdfa, minimize_mdfa_mapped
from .problem import Problem
from .reach import compute_reachable_acceptance_values

BitVector = tuple[bool, ...]


@dataclass(frozen=True)
class Snapshot:
    values: tuple[str, ...]
    completed: tuple[bool, ...]
    cursors: tuple[int, ...]
    g: int


class Session:
    def __init__(
        self,
        problem: Problem,
        mdfas: list[Mdfa],
        reach_bits: list[list[frozenset[BitVector]]],
        store: DdStore,
        g: int,
        v_empty: list[frozenset[BitVector] | None],
    ):
        self.problem = problem
        self.mdfas = mdfas
        self.reach_bits = reach_bits
        self.store = store
        self._g = g
        self._v_empty = v_empty
        self.values = [""] * problem.n_vars
        self.completed = [False] * problem.n_vars
        self.cursors = [m.source for m in mdfas]
        self._undo: list[Snapshot] = []

    # -- satisfiability bookkeeping ------------------------------------

    @property
    def g(self) -> int:
        return self._g

    def v_empty(self, i: int) -> frozenset[BitVector]:
        """Bit vectors variable i's block takes across all solutions of g."""
        cached = self._v_empty[i]
        if cached is None:
            cached = dd_project_block(
                self.store, self._g, i, self.problem.base_ordinal(i), self.problem.k(i)
            ).vectors
            self._v_empty[i] = cached
        return cached

    def _set_g(self, g: int) -> None:
        if g != self._g:
            self._g = g
            self._v_empty = [None] * self.problem.n_vars

    # -- mutations ------------------------------------------------------

    def append(self, name: str, text: str) -> None:
        """Atomically append ``text`` (one or more letters) to a variable."""
        i = self.problem.var_index(name)
        if self.completed[i]:
            raise VariableCompleted(f"variable {name!r} is completed")
        if not text:
            raise ValueError("append text must be non-empty")
        for ch in text:
            # The end-of-line sentinel travels through complete() only.
            if ch not in self.problem.alphabet.letters:
                raise LetterOutsideAlphabet(ch, f"append to {name!r}")
        self._apply_word(i, text)

    def complete(self, name: str) -> None:
        """Append the end-of-line sentinel and freeze the variable."""
        if not self.problem.alphabet.eol:
            raise CompletionDisabled("the problem has no end-of-line letter")
        i = self.problem.var_index(name)
        if self.completed[i]:
            raise VariableCompleted(f"variable {name!r} is completed")
        self._apply_word(i, EOL)
        self.completed[i] = True

    def _apply_word(self, i: int, word: str) -> None:
        m = self.mdfas[i]
        target = m.run(self.cursors[i], word)
        allowed = self.reach_bits[i][target]
        g2 = self.store.apply_and(
            self._g,
            encode_block_membership(self.store, self.problem.base_ordinal(i), allowed),
        )
        if dd_is_unsat(g2):
            raise InvalidAppend()
        self._undo.append(
            Snapshot(tuple(self.values), tuple(self.completed), tuple(self.cursors), self._g)
        )
        self.values[i] += word
        self.cursors[i] = target
        self._set_g(g2)

    def undo(self) -> None:
        """Roll back the latest successful append or complete."""
        if not self._undo:
            raise NothingToUndo("nothing to undo")
        snap = self._undo.pop()
        self.values = list(snap.values)
        self.completed = list(snap.completed)
        self.cursors = list(snap.cursors)
        self._set_g(snap.g)

    # -- valid domains ----------------------------------------------------

    def valid_domain(self, name: str) -> Dfa:
        """DFA of the words that may still be appended to ``name``."""
        i = self.problem.var_index(name)
        m = self.mdfas[i]
        ve = self.v_empty(i)
        accepting = frozenset(
            q
            for q in range(m.n_states)
            if not m.accept[q].dead and m.accept[q].bits in ve
        )
        return Dfa(m.alphabet, m.n_states, m.delta, self.cursors[i], accepting)

    def valid_domain_regex(self, name: str) -> str:
        return dfa_to_regex(self.valid_domain(name))

    def can_complete(self, name: str) -> bool:
        """Would complete() succeed right now?"""
        if not self.problem.alphabet.eol:
            return False
        i = self.problem.var_index(name)
        if self.completed[i]:
            return False
        m = self.mdfas[i]
        target = m.step(self.cursors[i], self.problem.alphabet.index(EOL))
        allowed = self.reach_bits[i][target]
        if not allowed:
            return False
        g2 = self.store.apply_and(
            self._g,
            encode_block_membership(self.store, self.problem.base_ordinal(i), allowed),
        )
        return not dd_is_unsat(g2)

    def next_letters(self, name: str) -> list[str]:
        """Declared letters whose one-letter append would be accepted."""
        d = self.valid_domain(name)
        i = self.problem.var_index(name)
        if self.completed[i]:
            return []
        alive = _coreachable(d)
        return [
            ch
            for ci, ch in enumerate(self.problem.alphabet.letters)
            if d.step(d.source, ci) in alive
        ]

    def suggestions(self, name: str, k: int, max_len: int) -> list[str]:
        """The k shortest words of the valid domain, no longer than max_len,
        ordered by length and then lexicographically in alphabet order."""
        if k < 1:
            raise ValueError("k must be at least 1")
        if max_len < 0:
            raise ValueError("max_len must be non-negative")
        d = self.valid_domain(name)
        dist = _distance_to_accepting(d)
        out: list[str] = []
        if dist[d.source] is None or dist[d.source] > max_len:
            return out
        letters = d.alphabet.effective
        queue: deque[tuple[int, str]] = deque([(d.source, "")])
        while queue:
            q, word = queue.popleft()
            if q in d.accepting:
                out.append(word)
                if len(out) == k:
                    break
            if len(word) < max_len:
                for ci, ch in enumerate(letters):
                    t = d.step(q, ci)
                    remaining = dist[t]
                    if remaining is not None and len(word) + 1 + remaining <= max_len:
                        queue.append((t, word + ch))
        return out

    # -- presentation -----------------------------------------------------

    def variable_state(self, name: str) -> dict:
        return {
            "value": self.values[self.problem.var_index(name)],
            "completed": self.completed[self.problem.var_index(name)],
            "can_complete": self.can_complete(name),
            "domain_regex": self.valid_domain_regex(name),
        }

    def state(self) -> dict:
        return {name: self.variable_state(name) for name in self.problem.variables}


def _coreachable(d: Dfa) -> set[int]:
    """States from which some accepting state is reachable."""
    n_letters = d.alphabet.n_effective
    preds: dict[int, list[int]] = {q: [] for q in range(d.n_states)}
    for q in range(d.n_states):
        for c in range(n_letters):
            preds[d.delta[q * n_letters + c]].append(q)
    seen = set(d.accepting)
    frontier = list(d.accepting)
    while frontier:
        q = frontier.pop()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                frontier.append(p)
    return seen


def _distance_to_accepting(d: Dfa) -> list[int | None]:
    """Shortest suffix length from each state to acceptance (None if never)."""
    n_letters = d.alphabet.n_effective
    preds: dict[int, list[int]] = {q: [] for q in range(d.n_states)}
    for q in range(d.n_states):
        for c in range(n_letters):
            preds[d.delta[q * n_letters + c]].append(q)
    dist: list[int | None] = [None] * d.n_states
    queue: deque[int] = deque()
    for q in d.accepting:
        dist[q] = 0
        queue.append(q)
    while queue:
        q = queue.popleft()
        for p in preds[q]:
            if dist[p] is None:
                dist[p] = dist[q] + 1
                queue.append(p)
    return dist


def build(problem: Problem) -> Session:
    """Compile, check feasibility, prune and minimize; raises
    InfeasibleProblem when the constraints admit no solution at all."""
    alphabet = problem.alphabet
    n_letters = alphabet.n_effective

    mdfas: list[Mdfa] = []
    for i in range(problem.n_vars):
        dfas = problem.compile_atoms(i)
        if dfas:
            mdfas.append(construct_mdfa(dfas))
        else:
            # Unconstrained variable: a single all-accepting state with an
            # empty bit vector.
            mdfas.append(Mdfa(alphabet, 1, tuple([0] * n_letters), 0, (AcceptanceValue(()),)))
    reaches = [compute_reachable_acceptance_values(m) for m in mdfas]

    store = DdStore(max(problem.n_bool_vars, 1))
    ordinals = problem.atom_ordinals()
    g = bdd.TRUE
    for f in problem.formulas:
        g = store.apply_and(g, encode_formula(store, f, ordinals))
    for i, m in enumerate(mdfas):
        vectors = {v.bits for v in reaches[i][m.source]}
        g = store.apply_and(
            g, encode_block_membership(store, problem.base_ordinal(i), vectors)
        )
    if dd_is_unsat(g):
        raise InfeasibleProblem()

    final_mdfas: list[Mdfa] = []
    final_reach: list[list[frozenset[BitVector]]] = []
    v_empty_cache: list[frozenset[BitVector] | None] = []
    for i, m in enumerate(mdfas):
        ve = dd_project_block(store, g, i, problem.base_ordinal(i), problem.k(i)).vectors
        marker = AcceptanceValue.dead_marker(problem.k(i))
        accept = tuple(
            val if val.bits in ve else marker
            for val in m.accept
        )
        pruned = Mdfa(m.alphabet, m.n_states, m.delta, m.source, accept)
        bits_per_state = [
            frozenset(v.bits for v in reaches[i][q] if v.bits in ve)
            for q in range(m.n_states)
        ]
        small, new_of_old = minimize_mdfa_mapped(pruned)
        remapped: list[frozenset[BitVector] | None] = [None] * small.n_states
        for old, new in enumerate(new_of_old):
            if new < 0:
                continue
            if remapped[new] is None:
                remapped[new] = bits_per_state[old]
            else:
                # Equivalent states always agree on their reachable values.
                assert remapped[new] == bits_per_state[old]
        final_mdfas.append(small)
        final_reach.append([s if s is not None else frozenset() for s in remapped])
        v_empty_cache.append(ve)

    return Session(problem, final_mdfas, final_reach, store, g, v_empty_cache)
