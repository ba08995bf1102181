"""Reduced ordered binary decision diagrams.

One ``DdStore`` owns every node of a problem's constraint diagrams.  Nodes
are hash-consed triples (variable ordinal, low child, high child); the
terminals FALSE and TRUE are the handles 0 and 1.  Hash-consing plus the
no-redundant-test rule in ``mk`` keep diagrams canonical, so two handles
denote the same function iff they are the same int — satisfiability is a
comparison against FALSE, never a search.

Boolean variable ordinals are fixed by the caller and never reordered;
nodes are never garbage collected.  Stores are single-writer: sessions do
not share one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import FAnd, FIff, FImp, FMatch, FNot, FOr, Formula

FALSE = 0
TRUE = 1

DdRef = int


@dataclass(frozen=True)
class BooleanVar:
    """One requirement bit: atom ``atom_index`` of variable ``var_index``."""

    var_index: int
    atom_index: int
    ordinal: int


@dataclass(frozen=True)
class BlockVectorSet:
    """A set of acceptance bit-vectors for one variable's ordinal block."""

    var_index: int
    k: int
    vectors: frozenset[tuple[bool, ...]]

    def __post_init__(self):
        for vec in self.vectors:
            if len(vec) != self.k:
                raise ValueError("vector width differs from block width")


class DdStore:
    def __init__(self, n_vars: int):
        self.n_vars = n_vars
        # Terminals sit on a pseudo-level below every real variable.
        self._var = [n_vars, n_vars]
        self._lo = [FALSE, TRUE]
        self._hi = [FALSE, TRUE]
        self._unique: dict[tuple[int, int, int], int] = {}
        self._and_cache: dict[tuple[int, int], int] = {}
        self._or_cache: dict[tuple[int, int], int] = {}
        self._not_cache: dict[int, int] = {}
        self._exists_cache: dict[tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self._var)

    def mk(self, var: int, lo: DdRef, hi: DdRef) -> DdRef:
        if not 0 <= var < self.n_vars:
            raise ValueError(f"variable ordinal {var} out of range")
        if lo == hi:
            return lo
        key = (var, lo, hi)
        node = self._unique.get(key)
        if node is None:
            node = len(self._var)
            self._var.append(var)
            self._lo.append(lo)
            self._hi.append(hi)
            self._unique[key] = node
        return node

    def var_ref(self, var: int) -> DdRef:
        return self.mk(var, FALSE, TRUE)

    def apply_and(self, a: DdRef, b: DdRef) -> DdRef:
        if a == b:
            return a
        if a == FALSE or b == FALSE:
            return FALSE
        if a == TRUE:
            return b
        if b == TRUE:
            return a
        if b < a:
            a, b = b, a
        key = (a, b)
        r = self._and_cache.get(key)
        if r is None:
            r = self._apply_branch(a, b, self.apply_and)
            self._and_cache[key] = r
        return r

    def apply_or(self, a: DdRef, b: DdRef) -> DdRef:
        if a == b:
            return a
        if a == TRUE or b == TRUE:
            return TRUE
        if a == FALSE:
            return b
        if b == FALSE:
            return a
        if b < a:
            a, b = b, a
        key = (a, b)
        r = self._or_cache.get(key)
        if r is None:
            r = self._apply_branch(a, b, self.apply_or)
            self._or_cache[key] = r
        return r

    def _apply_branch(self, a: DdRef, b: DdRef, op) -> DdRef:
        va, vb = self._var[a], self._var[b]
        v = va if va < vb else vb
        a0, a1 = (self._lo[a], self._hi[a]) if va == v else (a, a)
        b0, b1 = (self._lo[b], self._hi[b]) if vb == v else (b, b)
        return self.mk(v, op(a0, b0), op(a1, b1))

    def negate(self, a: DdRef) -> DdRef:
        if a == FALSE:
            return TRUE
        if a == TRUE:
            return FALSE
        r = self._not_cache.get(a)
        if r is None:
            r = self.mk(self._var[a], self.negate(self._lo[a]), self.negate(self._hi[a]))
            self._not_cache[a] = r
        return r

    def exists(self, a: DdRef, ordinal_mask: int) -> DdRef:
        """Existentially quantify every variable whose bit is set in the mask."""
        if a <= TRUE or ordinal_mask == 0:
            return a
        key = (a, ordinal_mask)
        r = self._exists_cache.get(key)
        if r is None:
            v = self._var[a]
            lo = self.exists(self._lo[a], ordinal_mask)
            hi = self.exists(self._hi[a], ordinal_mask)
            if (ordinal_mask >> v) & 1:
                r = self.apply_or(lo, hi)
            else:
                r = self.mk(v, lo, hi)
            self._exists_cache[key] = r
        return r

    def vectors_over(self, a: DdRef, ordinals) -> frozenset[tuple[bool, ...]]:
        """All assignments of ``ordinals`` consistent with ``a``.

        The support of ``a`` must lie within ``ordinals`` (quantify first).
        """
        ordinals = list(ordinals)
        out: set[tuple[bool, ...]] = set()

        def rec(node: DdRef, i: int, prefix: list[bool]) -> None:
            if i == len(ordinals):
                if node == TRUE:
                    out.add(tuple(prefix))
                elif node != FALSE:
                    raise ValueError("diagram support extends past the given ordinals")
                return
            v = ordinals[i]
            nv = self._var[node]
            if node <= TRUE or nv > v:
                if node == FALSE:
                    return
                prefix.append(False)
                rec(node, i + 1, prefix)
                prefix[-1] = True
                rec(node, i + 1, prefix)
                prefix.pop()
            elif nv == v:
                prefix.append(False)
                rec(self._lo[node], i + 1, prefix)
                prefix[-1] = True
                rec(self._hi[node], i + 1, prefix)
                prefix.pop()
            else:
                raise ValueError("diagram support extends past the given ordinals")

        rec(a, 0, [])
        return frozenset(out)

    def node_count(self, a: DdRef) -> int:
        """Decision nodes reachable from ``a`` (terminals excluded)."""
        seen: set[int] = set()
        stack = [a]
        while stack:
            node = stack.pop()
            if node <= TRUE or node in seen:
                continue
            seen.add(node)
            stack.append(self._lo[node])
            stack.append(self._hi[node])
        return len(seen)


def dd_conjoin(store: DdStore, a: DdRef, b: DdRef) -> DdRef:
    return store.apply_and(a, b)


def dd_is_unsat(ref: DdRef) -> bool:
    return ref == FALSE


def encode_formula(store: DdStore, f: Formula, atom_ordinal) -> DdRef:
    """Encode a formula; ``atom_ordinal[(var, pattern)]`` maps each atom to
    its boolean variable ordinal."""
    if isinstance(f, FMatch):
        return store.var_ref(atom_ordinal[(f.var, f.pattern)])
    if isinstance(f, FNot):
        return store.negate(encode_formula(store, f.inner, atom_ordinal))
    if isinstance(f, FAnd):
        return store.apply_and(
            encode_formula(store, f.left, atom_ordinal),
            encode_formula(store, f.right, atom_ordinal),
        )
    if isinstance(f, FOr):
        return store.apply_or(
            encode_formula(store, f.left, atom_ordinal),
            encode_formula(store, f.right, atom_ordinal),
        )
    if isinstance(f, FImp):
        return store.apply_or(
            store.negate(encode_formula(store, f.left, atom_ordinal)),
            encode_formula(store, f.right, atom_ordinal),
        )
    if isinstance(f, FIff):
        left = encode_formula(store, f.left, atom_ordinal)
        right = encode_formula(store, f.right, atom_ordinal)
        return store.apply_or(
            store.apply_and(left, right),
            store.apply_and(store.negate(left), store.negate(right)),
        )
    raise TypeError(f"not a formula node: {f!r}")


def encode_block_membership(store: DdStore, base_ordinal: int, vectors) -> DdRef:
    """The constraint "this block's bits form one of ``vectors``".

    ``vectors`` are bit tuples over the contiguous ordinals starting at
    ``base_ordinal``; the result is the disjunction of their cubes.
    """
    result = FALSE
    for vec in sorted(vectors):
        cube = TRUE
        for offset in range(len(vec) - 1, -1, -1):
            v = base_ordinal + offset
            if vec[offset]:
                cube = store.mk(v, FALSE, cube)
            else:
                cube = store.mk(v, cube, FALSE)
        result = store.apply_or(result, cube)
    return result


def dd_project_block(
    store: DdStore, g: DdRef, var_index: int, base_ordinal: int, k: int
) -> BlockVectorSet:
    """Project the solutions of ``g`` onto one variable's ordinal block."""
    mask = 0
    for v in range(store.n_vars):
        if not base_ordinal <= v < base_ordinal + k:
            mask |= 1 << v
    quantified = store.exists(g, mask)
    vectors = store.vectors_over(quantified, range(base_ordinal, base_ordinal + k))
    return BlockVectorSet(var_index, k, vectors)
