"""Reachable acceptance values.

For every state p of an Mdfa, R(p) is the set of acceptance values of the
states reachable from p.  Two facts make this cheap to compute: R(p) is the
union of {a(p)} with the R sets of p's successors, and all states of a
strongly connected component share one R set.  So we contract the automaton
to its component DAG and accumulate unions in reverse topological order —
which is exactly the emission order of Tarjan's algorithm.

The depth-first search is run with an explicit stack; automata can be far
deeper than the interpreter's recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .mdfa import AcceptanceValue, Mdfa


@dataclass(frozen=True)
class SccResult:
    comp_of: tuple[int, ...]  # state -> component index
    components: tuple[tuple[int, ...], ...]  # reverse topological order
    successors: tuple[frozenset[int], ...]  # component DAG edges


def scc(m: Mdfa) -> SccResult:
    """Strongly connected components, emitted in reverse topological order.

    A single state forms a component on its own unless it carries a
    self-loop — either way it is emitted as a singleton; the distinction
    never matters here because R is reflexive.
    """
    n = m.n_states
    n_letters = m.alphabet.n_effective
    delta = m.delta
    index = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    stack: list[int] = []
    comp_of = [-1] * n
    components: list[tuple[int, ...]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            q, ci = work[-1]
            if ci == 0:
                index[q] = low[q] = counter
                counter += 1
                stack.append(q)
                on_stack[q] = 1
            if ci < n_letters:
                work[-1] = (q, ci + 1)
                t = delta[q * n_letters + ci]
                if index[t] == -1:
                    work.append((t, 0))
                elif on_stack[t]:
                    if index[t] < low[q]:
                        low[q] = index[t]
            else:
                work.pop()
                if work:
                    p = work[-1][0]
                    if low[q] < low[p]:
                        low[p] = low[q]
                if low[q] == index[q]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = 0
                        comp_of[w] = len(components)
                        comp.append(w)
                        if w == q:
                            break
                    components.append(tuple(sorted(comp)))

    successors = []
    for ci, comp in enumerate(components):
        succ = set()
        for q in comp:
            for c in range(n_letters):
                target = comp_of[delta[q * n_letters + c]]
                if target != ci:
                    succ.add(target)
        successors.append(frozenset(succ))
    return SccResult(tuple(comp_of), tuple(components), tuple(successors))


@dataclass(frozen=True)
class ReachSets:
    sets: tuple[frozenset[AcceptanceValue], ...]  # per state

    def __getitem__(self, state: int) -> frozenset[AcceptanceValue]:
        return self.sets[state]

    def sorted_vectors(self, state: int) -> list[AcceptanceValue]:
        return sorted(self.sets[state], key=lambda v: (v.dead, v.bits))


def compute_reachable_acceptance_values(m: Mdfa) -> ReachSets:
    """R(p) for every state, via the component DAG."""
    result = scc(m)
    comp_r: list[frozenset[AcceptanceValue]] = []
    for ci, comp in enumerate(result.components):
        values = {m.accept[q] for q in comp}
        for child in result.successors[ci]:
            # Successor components are always emitted before this one.
            values |= comp_r[child]
        comp_r.append(frozenset(values))
    return ReachSets(tuple(comp_r[result.comp_of[q]] for q in range(m.n_states)))
