"""Deterministic finite automata over package alphabets.

A ``Dfa`` is total: every state has a transition for every effective letter.
Totalization introduces at most one explicit dead state (non-accepting, all
self-loops); keeping it explicit makes product constructions and state
counting straightforward, and live/dead is decidable per state by shape.

``compile_dfa`` is the Thompson -> subset -> minimize pipeline; minimized
automata get a canonical numbering (breadth-first discovery order from the
source, letters in alphabet order), so structurally equal inputs produce
identical automata.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .alphabet import Alphabet
from .errors import AlphabetMismatch
from .rx import Alt, Class, Concat, Dot, Epsilon, Letter, RegexAst, Star


@dataclass(frozen=True)
class Dfa:
    alphabet: Alphabet
    n_states: int
    delta: tuple[int, ...]  # row-major, n_states * alphabet.n_effective
    source: int
    accepting: frozenset[int]

    def step(self, state: int, letter_index: int) -> int:
        return self.delta[state * self.alphabet.n_effective + letter_index]

    def run(self, state: int, word: str) -> int:
        return _kernels.run_word(
            self.alphabet.n_effective, self.delta, state, self.alphabet.word_indices(word)
        )

    def accepts(self, word: str) -> bool:
        return self.run(self.source, word) in self.accepting

    def dead_state(self) -> int | None:
        """The all-self-loop non-accepting sink, when one exists."""
        n_letters = self.alphabet.n_effective
        for q in range(self.n_states):
            if q in self.accepting:
                continue
            base = q * n_letters
            if all(self.delta[base + c] == q for c in range(n_letters)):
                return q
        return None

    def live_states(self) -> list[int]:
        dead = self.dead_state()
        return [q for q in range(self.n_states) if q != dead]


def dfa_accepts(d: Dfa, word: str) -> bool:
    return d.accepts(word)


class Nfa:
    """Non-deterministic automaton with epsilon moves, used as a construction
    intermediate (Thompson fragments, alphabet projections)."""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.eps: list[set[int]] = []
        self.edges: list[dict[int, set[int]]] = []

    def add_state(self) -> int:
        self.eps.append(set())
        self.edges.append({})
        return len(self.eps) - 1

    def add_eps(self, a: int, b: int) -> None:
        self.eps[a].add(b)

    def add_edge(self, a: int, letter_index: int, b: int) -> None:
        self.edges[a].setdefault(letter_index, set()).add(b)

    def closure(self, states) -> frozenset[int]:
        stack = list(states)
        seen = set(states)
        while stack:
            q = stack.pop()
            for t in self.eps[q]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)


def nfa_to_dfa(nfa: Nfa, starts, accepts) -> Dfa:
    """Subset construction producing a total DFA.

    The empty subset is the dead state; it appears exactly when some state
    misses a transition for some letter, which keeps the result total with
    a single explicit sink.
    """
    n_letters = nfa.alphabet.n_effective
    accepts = set(accepts)
    start = nfa.closure(starts)
    ids: dict[frozenset[int], int] = {start: 0}
    order = [start]
    delta: list[int] = []
    head = 0
    while head < len(order):
        subset = order[head]
        head += 1
        for c in range(n_letters):
            move = set()
            for q in subset:
                move.update(nfa.edges[q].get(c, ()))
            target = nfa.closure(move)
            t = ids.get(target)
            if t is None:
                t = len(order)
                ids[target] = t
                order.append(target)
            delta.append(t)
    accepting = frozenset(i for i, subset in enumerate(order) if subset & accepts)
    return Dfa(nfa.alphabet, len(order), tuple(delta), 0, accepting)


def _thompson(node: RegexAst, nfa: Nfa) -> tuple[int, int]:
    """Build a fragment for ``node``; returns (start, accept) state ids."""
    alphabet = nfa.alphabet
    if isinstance(node, Epsilon):
        s = nfa.add_state()
        t = nfa.add_state()
        nfa.add_eps(s, t)
        return s, t
    if isinstance(node, Letter):
        s = nfa.add_state()
        t = nfa.add_state()
        nfa.add_edge(s, alphabet.index(node.ch), t)
        return s, t
    if isinstance(node, Dot):
        s = nfa.add_state()
        t = nfa.add_state()
        for ch in alphabet.letters:  # the end-of-line sentinel never matches '.'
            nfa.add_edge(s, alphabet.index(ch), t)
        return s, t
    if isinstance(node, Class):
        s = nfa.add_state()
        t = nfa.add_state()
        for ch in node.letters:
            nfa.add_edge(s, alphabet.index(ch), t)
        return s, t
    if isinstance(node, Concat):
        s1, t1 = _thompson(node.left, nfa)
        s2, t2 = _thompson(node.right, nfa)
        nfa.add_eps(t1, s2)
        return s1, t2
    if isinstance(node, Alt):
        s = nfa.add_state()
        t = nfa.add_state()
        s1, t1 = _thompson(node.left, nfa)
        s2, t2 = _thompson(node.right, nfa)
        nfa.add_eps(s, s1)
        nfa.add_eps(s, s2)
        nfa.add_eps(t1, t)
        nfa.add_eps(t2, t)
        return s, t
    if isinstance(node, Star):
        s = nfa.add_state()
        t = nfa.add_state()
        s1, t1 = _thompson(node.inner, nfa)
        nfa.add_eps(s, s1)
        nfa.add_eps(s, t)
        nfa.add_eps(t1, s1)
        nfa.add_eps(t1, t)
        return s, t
    raise TypeError(f"not a regex node: {node!r}")


def quotient_renumber(
    n_states: int, n_letters: int, delta, source: int, blocks
) -> tuple[int, tuple[int, ...], int, list[int], list[int]]:
    """Collapse states by ``blocks`` and renumber breadth-first from the source.

    Returns (n_new, delta_new, source_new, representative_old_state_per_new,
    new_id_per_old_state).  Only blocks reachable from the source survive.
    """
    # Transitions of the quotient, one representative row per block.
    reps: dict[int, int] = {}
    for q in range(n_states):
        reps.setdefault(blocks[q], q)
    block_ids = sorted(reps)
    remap = {b: i for i, b in enumerate(block_ids)}
    nq = len(block_ids)
    qdelta = [0] * (nq * n_letters)
    for b in block_ids:
        rep = reps[b]
        for c in range(n_letters):
            qdelta[remap[b] * n_letters + c] = remap[blocks[delta[rep * n_letters + c]]]
    qsource = remap[blocks[source]]

    order = _kernels.bfs_order(nq, n_letters, qdelta, qsource)
    new_of_q = {old: new for new, old in enumerate(order)}
    n_new = len(order)
    delta_new = [0] * (n_new * n_letters)
    for new, old in enumerate(order):
        for c in range(n_letters):
            delta_new[new * n_letters + c] = new_of_q[qdelta[old * n_letters + c]]
    rep_of_new = [reps[block_ids[old]] for old in order]
    new_of_old = [-1] * n_states
    for q in range(n_states):
        mapped = new_of_q.get(remap[blocks[q]])
        new_of_old[q] = -1 if mapped is None else mapped
    return n_new, tuple(delta_new), new_of_q[qsource], rep_of_new, new_of_old


def minimize_dfa(d: Dfa) -> Dfa:
    """Language-preserving minimization with canonical numbering."""
    n_letters = d.alphabet.n_effective
    reachable = _kernels.bfs_order(d.n_states, n_letters, d.delta, d.source)
    sub_id = {old: i for i, old in enumerate(reachable)}
    n = len(reachable)
    delta = [0] * (n * n_letters)
    for i, old in enumerate(reachable):
        for c in range(n_letters):
            delta[i * n_letters + c] = sub_id[d.delta[old * n_letters + c]]
    classes = [1 if old in d.accepting else 0 for old in reachable]
    blocks = _kernels.minimize_blocks(n, n_letters, delta, classes)
    n_new, delta_new, source_new, rep_of_new, _ = quotient_renumber(
        n, n_letters, delta, sub_id[d.source], blocks
    )
    accepting = frozenset(i for i, rep in enumerate(rep_of_new) if classes[rep] == 1)
    return Dfa(d.alphabet, n_new, delta_new, source_new, accepting)


def compile_dfa(node: RegexAst, alphabet: Alphabet) -> Dfa:
    """Compile a parsed regular expression to a minimized total DFA."""
    nfa = Nfa(alphabet)
    start, accept = _thompson(node, nfa)
    return minimize_dfa(nfa_to_dfa(nfa, [start], [accept]))


def dfa_language_equivalent(a: Dfa, b: Dfa) -> tuple[bool, str | None]:
    """Decide language equality; on failure also return a shortest witness word."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(
            f"cannot compare automata over different alphabets: "
            f"{a.alphabet.letters!r}/{a.alphabet.eol} vs {b.alphabet.letters!r}/{b.alphabet.eol}"
        )
    witness = _kernels.find_distinguisher(
        a.alphabet.n_effective,
        a.delta,
        [1 if q in a.accepting else 0 for q in range(a.n_states)],
        a.source,
        b.delta,
        [1 if q in b.accepting else 0 for q in range(b.n_states)],
        b.source,
    )
    if witness is None:
        return True, None
    letters = a.alphabet.effective
    return False, "".join(letters[c] for c in witness)
