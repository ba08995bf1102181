"""Pure-Python automata kernels.

These four functions are the hot inner loops shared by the DFA and the
multi-acceptance automaton code: breadth-first numbering, Hopcroft partition
refinement, word stepping and the product-search for a distinguishing word.
``c_backend`` implements the same contract compiled; this module is the
fallback and the reference.

All automata arrive flattened: ``delta`` is a row-major transition table of
``n_states * n_letters`` ints and ``classes`` assigns every state an int
label (acceptance class).  State and letter ids are dense and 0-based.
"""

from __future__ import annotations

from collections import deque

NAME = "python"


def bfs_order(n_states: int, n_letters: int, delta, source: int) -> list[int]:
    """Reachable states in breadth-first discovery order, letters in index order."""
    order = [source]
    seen = bytearray(n_states)
    seen[source] = 1
    head = 0
    while head < len(order):
        base = order[head] * n_letters
        head += 1
        for c in range(n_letters):
            t = delta[base + c]
            if not seen[t]:
                seen[t] = 1
                order.append(t)
    return order


def run_word(n_letters: int, delta, state: int, letters) -> int:
    for c in letters:
        state = delta[state * n_letters + c]
    return state


def minimize_blocks(n_states: int, n_letters: int, delta, classes) -> list[int]:
    """Hopcroft partition refinement from an initial partition by ``classes``.

    Returns the coarsest forward-stable refinement as a block id per state:
    two states end in the same block iff every word leads them to states of
    equal class.  Runs in O(n_letters * n_states * log n_states).
    """
    # Initial partition grouped by class label.
    by_class: dict[object, list[int]] = {}
    for q in range(n_states):
        by_class.setdefault(classes[q], []).append(q)

    elems: list[int] = []
    loc = [0] * n_states
    blk = [0] * n_states
    first: list[int] = []
    past: list[int] = []
    for b, members in enumerate(by_class.values()):
        first.append(len(elems))
        for q in members:
            loc[q] = len(elems)
            blk[q] = b
            elems.append(q)
        past.append(len(elems))
    n_blocks = len(first)
    if n_blocks <= 1:
        return blk

    # Reverse transitions, one predecessor list per (letter, state).
    rev: list[list[list[int]]] = [[[] for _ in range(n_states)] for _ in range(n_letters)]
    for q in range(n_states):
        base = q * n_letters
        for c in range(n_letters):
            rev[c][delta[base + c]].append(q)

    # Seed the worklist with every initial block except one largest.
    largest = max(range(n_blocks), key=lambda b: past[b] - first[b])
    worklist = deque(b for b in range(n_blocks) if b != largest)
    in_work = [b != largest for b in range(n_blocks)]
    counter = [0] * n_blocks

    while worklist:
        b = worklist.popleft()
        in_work[b] = False
        splitter = elems[first[b]:past[b]]
        for c in range(n_letters):
            rev_c = rev[c]
            touched: list[int] = []
            for s in splitter:
                for p in rev_c[s]:
                    tb = blk[p]
                    cnt = counter[tb]
                    if cnt == 0:
                        touched.append(tb)
                    # Swap p into the marked zone at the front of its block.
                    dest = first[tb] + cnt
                    pos = loc[p]
                    other = elems[dest]
                    elems[dest] = p
                    elems[pos] = other
                    loc[p] = dest
                    loc[other] = pos
                    counter[tb] = cnt + 1
            for tb in touched:
                cnt = counter[tb]
                counter[tb] = 0
                size = past[tb] - first[tb]
                if cnt == size:
                    continue
                # Marked zone becomes a new block; the rest keeps id tb.
                z = n_blocks
                n_blocks += 1
                first.append(first[tb])
                past.append(first[tb] + cnt)
                first[tb] += cnt
                for i in range(first[z], past[z]):
                    blk[elems[i]] = z
                counter.append(0)
                if in_work[tb]:
                    worklist.append(z)
                    in_work.append(True)
                else:
                    smaller = z if cnt <= size - cnt else tb
                    worklist.append(smaller)
                    in_work.append(smaller == z)
                    if smaller == tb:
                        in_work[tb] = True
    return blk


def find_distinguisher(
    n_letters: int,
    delta_a,
    classes_a,
    src_a: int,
    delta_b,
    classes_b,
    src_b: int,
) -> list[int] | None:
    """Shortest word (as letter indices) on which the two automata disagree.

    Returns None when the automata assign equal classes along every word,
    i.e. when they are equivalent.
    """
    if classes_a[src_a] != classes_b[src_b]:
        return []
    start = (src_a, src_b)
    parent: dict[tuple[int, int], tuple[tuple[int, int], int] | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        base_a = pair[0] * n_letters
        base_b = pair[1] * n_letters
        for c in range(n_letters):
            fol = (delta_a[base_a + c], delta_b[base_b + c])
            if fol in parent:
                continue
            parent[fol] = (pair, c)
            if classes_a[fol[0]] != classes_b[fol[1]]:
                word: list[int] = []
                node = fol
                while parent[node] is not None:
                    node, letter = parent[node]
                    word.append(letter)
                word.reverse()
                return word
            queue.append(fol)
    return None
