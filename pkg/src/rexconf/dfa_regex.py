"""Regular expression extraction from a DFA by state elimination.

The automaton is wrapped in a generalized NFA with a fresh source and sink;
original states are eliminated one by one, ordered by the product of current
in- and out-degree (ties by state id), which tends to keep the intermediate
expressions small.  The empty language has no expression in the grammar and
is reported as the distinguished marker ``∅``.
"""

from __future__ import annotations

from .dfa import Dfa
from .rx import Alt, Concat, Epsilon, RegexAst, Star, Letter, render_regex

EMPTY_LANGUAGE = "∅"


def _union(a: RegexAst | None, b: RegexAst | None) -> RegexAst | None:
    if a is None:
        return b
    if b is None:
        return a
    if a == b:
        return a
    return Alt(a, b)


def _cat(a: RegexAst | None, b: RegexAst | None) -> RegexAst | None:
    if a is None or b is None:
        return None
    if isinstance(a, Epsilon):
        return b
    if isinstance(b, Epsilon):
        return a
    return Concat(a, b)


def _star(a: RegexAst | None) -> RegexAst:
    if a is None or isinstance(a, Epsilon):
        return Epsilon()
    if isinstance(a, Star):
        return a
    return Star(a)


def _trim(d: Dfa) -> set[int] | None:
    """States both reachable from the source and able to reach acceptance."""
    n_letters = d.alphabet.n_effective
    if not d.accepting:
        return None
    reach = {d.source}
    frontier = [d.source]
    while frontier:
        q = frontier.pop()
        for c in range(n_letters):
            t = d.delta[q * n_letters + c]
            if t not in reach:
                reach.add(t)
                frontier.append(t)
    preds: dict[int, set[int]] = {q: set() for q in range(d.n_states)}
    for q in range(d.n_states):
        for c in range(n_letters):
            preds[d.delta[q * n_letters + c]].add(q)
    co = set(d.accepting)
    frontier = list(d.accepting)
    while frontier:
        q = frontier.pop()
        for p in preds[q]:
            if p not in co:
                co.add(p)
                frontier.append(p)
    kept = reach & co
    return kept if d.source in kept else None


def dfa_to_regex(d: Dfa) -> str:
    """A regular expression for the language of ``d`` (``∅`` when empty)."""
    kept = _trim(d)
    if kept is None:
        return EMPTY_LANGUAGE

    n_letters = d.alphabet.n_effective
    letters = d.alphabet.effective
    src_node = d.n_states
    sink_node = d.n_states + 1
    edges: dict[tuple[int, int], RegexAst | None] = {}

    def add(p: int, r: int, expr: RegexAst | None) -> None:
        if expr is None:
            return
        edges[(p, r)] = _union(edges.get((p, r)), expr)

    for p in kept:
        for c in range(n_letters):
            t = d.delta[p * n_letters + c]
            if t in kept:
                add(p, t, Letter(letters[c]))
    add(src_node, d.source, Epsilon())
    for q in d.accepting & kept:
        add(q, sink_node, Epsilon())

    remaining = set(kept)
    while remaining:
        best = None
        for q in remaining:
            indeg = sum(1 for (p, r) in edges if r == q and p != q)
            outdeg = sum(1 for (p, r) in edges if p == q and r != q)
            key = (indeg * outdeg, q)
            if best is None or key < best[0]:
                best = (key, q)
        q = best[1]
        remaining.discard(q)
        loop = _star(edges.pop((q, q), None))
        incoming = [(p, e) for (p, r), e in edges.items() if r == q]
        outgoing = [(r, e) for (p, r), e in edges.items() if p == q]
        for p, _ in incoming:
            edges.pop((p, q))
        for r, _ in outgoing:
            edges.pop((q, r))
        for p, ein in incoming:
            for r, eout in outgoing:
                add(p, r, _cat(ein, _cat(loop, eout)))

    expr = edges.get((src_node, sink_node))
    if expr is None:
        return EMPTY_LANGUAGE
    return render_regex(expr)
