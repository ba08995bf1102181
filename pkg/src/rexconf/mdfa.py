"""Multi-acceptance DFAs.

An Mdfa tracks k requirement automata over one shared input in a single
deterministic transition structure: every state carries an acceptance value,
the k-bit vector saying which of the requirements accept there.  With k = 1
it degenerates to an ordinary DFA.

Acceptance values can additionally be flagged ``dead`` by constraint
pruning: a dead state can never again reach a value that any solution
allows.  The dead flag forms its own equivalence class during minimization,
distinct from every live bit pattern (including all-false).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .alphabet import Alphabet
from .dfa import Dfa, quotient_renumber
from .errors import AlphabetMismatch


@dataclass(frozen=True)
class AcceptanceValue:
    bits: tuple[bool, ...]
    dead: bool = False

    def __post_init__(self):
        # All dead values are one and the same equivalence class; keeping
        # their bits normalized lets plain equality implement that.
        if self.dead and any(self.bits):
            raise ValueError("dead acceptance values carry no live bits")

    @classmethod
    def dead_marker(cls, k: int) -> "AcceptanceValue":
        return cls((False,) * k, True)

    def __str__(self) -> str:
        if self.dead:
            return "DEAD"
        return "".join("1" if b else "0" for b in self.bits)


@dataclass(frozen=True)
class Mdfa:
    alphabet: Alphabet
    n_states: int
    delta: tuple[int, ...]  # row-major, n_states * alphabet.n_effective
    source: int
    accept: tuple[AcceptanceValue, ...]

    @property
    def k(self) -> int:
        return len(self.accept[0].bits)

    def step(self, state: int, letter_index: int) -> int:
        return self.delta[state * self.alphabet.n_effective + letter_index]

    def run(self, state: int, word: str) -> int:
        return _kernels.run_word(
            self.alphabet.n_effective, self.delta, state, self.alphabet.word_indices(word)
        )

    def is_sink(self, q: int) -> bool:
        """True for the totalization sink: all self-loops, no bit set."""
        value = self.accept[q]
        if any(value.bits):
            return False
        n_letters = self.alphabet.n_effective
        base = q * n_letters
        return all(self.delta[base + c] == q for c in range(n_letters))

    def live_states(self) -> list[int]:
        return [q for q in range(self.n_states) if not self.is_sink(q)]

    def as_dfa(self, accepting_values) -> Dfa:
        """View with a plain accepting set: the states whose value is allowed."""
        allowed = set(accepting_values)
        accepting = frozenset(
            q
            for q in range(self.n_states)
            if not self.accept[q].dead and self.accept[q].bits in allowed
        )
        return Dfa(self.alphabet, self.n_states, self.delta, self.source, accepting)


def construct_mdfa(dfas) -> Mdfa:
    """Product of the requirement DFAs, restricted to reachable tuples.

    State ids are assigned in breadth-first discovery order from the tuple
    of sources, letters in alphabet order, so the numbering is canonical.
    """
    dfas = list(dfas)
    if not dfas:
        raise ValueError("construct_mdfa needs at least one requirement")
    alphabet = dfas[0].alphabet
    for d in dfas[1:]:
        if d.alphabet != alphabet:
            raise AlphabetMismatch("requirement automata must share one alphabet")
    n_letters = alphabet.n_effective

    start = tuple(d.source for d in dfas)
    ids: dict[tuple[int, ...], int] = {start: 0}
    order = [start]
    delta: list[int] = []
    head = 0
    while head < len(order):
        state = order[head]
        head += 1
        for c in range(n_letters):
            target = tuple(d.delta[q * n_letters + c] for d, q in zip(dfas, state))
            t = ids.get(target)
            if t is None:
                t = len(order)
                ids[target] = t
                order.append(target)
            delta.append(t)
    accept = tuple(
        AcceptanceValue(tuple(q in d.accepting for d, q in zip(dfas, state)))
        for state in order
    )
    return Mdfa(alphabet, len(order), tuple(delta), 0, accept)


def minimize_mdfa_mapped(m: Mdfa) -> tuple[Mdfa, list[int]]:
    """Minimized automaton plus the old-state -> new-state mapping.

    Two states are equivalent iff every word leads them to equal acceptance
    values, where every dead-flagged value counts as one shared class.
    """
    n_letters = m.alphabet.n_effective
    reachable = _kernels.bfs_order(m.n_states, n_letters, m.delta, m.source)
    sub_id = {old: i for i, old in enumerate(reachable)}
    n = len(reachable)
    delta = [0] * (n * n_letters)
    for i, old in enumerate(reachable):
        for c in range(n_letters):
            delta[i * n_letters + c] = sub_id[m.delta[old * n_letters + c]]
    classes = [m.accept[old] for old in reachable]
    blocks = _kernels.minimize_blocks(n, n_letters, delta, classes)
    n_new, delta_new, source_new, rep_of_new, new_of_sub = quotient_renumber(
        n, n_letters, delta, sub_id[m.source], blocks
    )
    accept = tuple(classes[rep] for rep in rep_of_new)
    new_of_old = [-1] * m.n_states
    for old, sub in sub_id.items():
        new_of_old[old] = new_of_sub[sub]
    return Mdfa(m.alphabet, n_new, delta_new, source_new, accept), new_of_old


def minimize_mdfa(m: Mdfa) -> Mdfa:
    return minimize_mdfa_mapped(m)[0]


def mdfa_step(m: Mdfa, state: int, word: str) -> int:
    """The state reached from ``state`` by reading ``word``."""
    return m.run(state, word)


def mdfa_dump(m: Mdfa) -> str:
    """Line-oriented diagnostic dump: id, acceptance value, transitions."""
    letters = m.alphabet.effective
    n_letters = m.alphabet.n_effective
    lines = []
    for q in range(m.n_states):
        base = q * n_letters
        moves = " ".join(f"{letters[c]}→{m.delta[base + c]}" for c in range(n_letters))
        lines.append(f"{q}\t{m.accept[q]}\t{moves}")
    return "\n".join(lines)
