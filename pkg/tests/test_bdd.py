"""Decision diagrams checked against plain truth tables."""

import random
from itertools import product

import pytest

from rexconf.bdd import (
    FALSE,
    TRUE,
    DdStore,
    dd_conjoin,
    dd_is_unsat,
    dd_project_block,
    encode_block_membership,
    encode_formula,
)
from rexconf.formulas import parse_formula

from oracles import dd_eval, dd_truth_table


def random_ref(rng: random.Random, store: DdStore, n_vars: int, depth: int) -> int:
    if depth <= 0 or rng.random() < 0.3:
        return store.var_ref(rng.randrange(n_vars))
    roll = rng.random()
    if roll < 0.4:
        return store.apply_and(
            random_ref(rng, store, n_vars, depth - 1),
            random_ref(rng, store, n_vars, depth - 1),
        )
    if roll < 0.8:
        return store.apply_or(
            random_ref(rng, store, n_vars, depth - 1),
            random_ref(rng, store, n_vars, depth - 1),
        )
    return store.negate(random_ref(rng, store, n_vars, depth - 1))


def test_terminals():
    store = DdStore(2)
    assert dd_is_unsat(FALSE)
    assert not dd_is_unsat(TRUE)
    assert dd_truth_table(store, TRUE, 2) == set(product([False, True], repeat=2))
    assert dd_truth_table(store, FALSE, 2) == set()


def test_operations_match_boolean_algebra():
    rng = random.Random(71)
    store = DdStore(5)
    for _ in range(100):
        a = random_ref(rng, store, 5, 3)
        b = random_ref(rng, store, 5, 3)
        ta = dd_truth_table(store, a, 5)
        tb = dd_truth_table(store, b, 5)
        assert dd_truth_table(store, store.apply_and(a, b), 5) == ta & tb
        assert dd_truth_table(store, store.apply_or(a, b), 5) == ta | tb
        assert dd_truth_table(store, store.negate(a), 5) == (
            set(product([False, True], repeat=5)) - ta
        )
        assert dd_conjoin(store, a, b) == store.apply_and(a, b)


def test_equal_functions_share_one_handle():
    store = DdStore(3)
    x, y = store.var_ref(0), store.var_ref(1)
    direct = store.apply_and(x, y)
    de_morgan = store.negate(store.apply_or(store.negate(x), store.negate(y)))
    assert direct == de_morgan
    assert store.apply_or(x, store.apply_and(x, y)) == x  # absorption
    assert store.apply_and(x, store.negate(x)) == FALSE
    assert store.apply_or(x, store.negate(x)) == TRUE


def test_satisfiability_is_a_handle_comparison():
    rng = random.Random(72)
    store = DdStore(4)
    for _ in range(100):
        ref = random_ref(rng, store, 4, 3)
        assert dd_is_unsat(ref) == (dd_truth_table(store, ref, 4) == set())


def test_store_stays_reduced_and_ordered():
    rng = random.Random(73)
    store = DdStore(6)
    for _ in range(50):
        random_ref(rng, store, 6, 4)
    triples = set()
    for node in range(2, len(store._var)):
        var, lo, hi = store._var[node], store._lo[node], store._hi[node]
        assert lo != hi, "redundant test survived"
        assert (var, lo, hi) not in triples, "duplicate node"
        triples.add((var, lo, hi))
        for child in (lo, hi):
            assert store._var[child] > var, "ordering violated"


def test_exists_quantifies_by_the_mask():
    rng = random.Random(74)
    store = DdStore(4)
    full = list(product([False, True], repeat=4))
    for _ in range(80):
        ref = random_ref(rng, store, 4, 3)
        i = rng.randrange(4)
        quantified = store.exists(ref, 1 << i)
        for bits in full:
            with_true = list(bits)
            with_true[i] = True
            with_false = list(bits)
            with_false[i] = False
            expected = dd_eval(store, ref, tuple(with_true)) or dd_eval(
                store, ref, tuple(with_false)
            )
            assert dd_eval(store, quantified, bits) == expected


def test_exists_supports_multi_variable_masks():
    store = DdStore(3)
    # f = (x0 and x1) or x2 ; quantifying x0,x1 leaves "anything works or x2" = TRUE.
    f = store.apply_or(store.apply_and(store.var_ref(0), store.var_ref(1)), store.var_ref(2))
    assert store.exists(f, 0b011) == TRUE
    # f = x0 and x2 ; quantifying x0 leaves x2.
    g = store.apply_and(store.var_ref(0), store.var_ref(2))
    assert store.exists(g, 0b001) == store.var_ref(2)


def test_vectors_over_enumerates_assignments():
    rng = random.Random(75)
    store = DdStore(4)
    for _ in range(60):
        ref = random_ref(rng, store, 4, 3)
        assert store.vectors_over(ref, range(4)) == frozenset(
            dd_truth_table(store, ref, 4)
        )


def test_vectors_over_rejects_leaking_support():
    store = DdStore(3)
    f = store.apply_and(store.var_ref(0), store.var_ref(2))
    with pytest.raises(ValueError):
        store.vectors_over(f, range(2))


def test_block_membership_round_trips():
    rng = random.Random(76)
    for _ in range(60):
        k = rng.randint(1, 4)
        base = rng.randint(0, 2)
        store = DdStore(base + k)
        all_vectors = list(product([False, True], repeat=k))
        chosen = frozenset(v for v in all_vectors if rng.random() < 0.5)
        ref = encode_block_membership(store, base, chosen)
        projected = store.exists(
            ref, sum(1 << v for v in range(store.n_vars) if not base <= v < base + k)
        )
        assert store.vectors_over(projected, range(base, base + k)) == chosen


def test_block_membership_extremes():
    store = DdStore(3)
    assert encode_block_membership(store, 0, frozenset()) == FALSE
    every = frozenset(product([False, True], repeat=2))
    assert encode_block_membership(store, 1, every) == TRUE


def test_project_block_matches_truth_table_projection():
    rng = random.Random(77)
    widths = [2, 1, 3]
    bases = [0, 2, 3]
    n = sum(widths)
    store = DdStore(n)
    for _ in range(40):
        ref = random_ref(rng, store, n, 4)
        table = dd_truth_table(store, ref, n)
        for i, (base, k) in enumerate(zip(bases, widths)):
            got = dd_project_block(store, ref, i, base, k)
            assert got.var_index == i and got.k == k
            expected = frozenset(bits[base : base + k] for bits in table)
            assert got.vectors == expected


def test_encode_formula_matches_direct_evaluation():
    rng = random.Random(78)
    texts = [
        'match(x, "a") && match(y, "b")',
        'match(x, "a") || !match(y, "b")',
        'match(x, "a") -> match(y, "b")',
        'match(x, "a") <-> (match(y, "b") || match(x, "c"))',
        '!(match(x, "a") && !match(x, "c")) -> match(y, "b")',
    ]
    ordinals = {("x", "a"): 0, ("y", "b"): 1, ("x", "c"): 2}
    from rexconf.formulas import eval_formula

    store = DdStore(3)
    for text in texts:
        f = parse_formula(text)
        ref = encode_formula(store, f, ordinals)
        for bits in product([False, True], repeat=3):
            truth = {key: bits[i] for key, i in ordinals.items()}
            assert dd_eval(store, ref, bits) == eval_formula(f, truth), (text, bits)


def test_node_count():
    store = DdStore(3)
    assert store.node_count(TRUE) == 0
    assert store.node_count(store.var_ref(1)) == 1
    chain = store.apply_and(store.var_ref(0), store.apply_and(store.var_ref(1), store.var_ref(2)))
    assert store.node_count(chain) == 3


def test_mk_rejects_foreign_ordinals():
    store = DdStore(2)
    with pytest.raises(ValueError):
        store.mk(2, FALSE, TRUE)
    with pytest.raises(ValueError):
        store.mk(-1, FALSE, TRUE)
