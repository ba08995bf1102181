"""Times the automaton kernels on both backends.

Usage: python3 benchmarks/bench_kernels.py [--states N] [--rounds R]

Generates random transition tables, runs each kernel on the pure-Python
and compiled backends, and prints the median wall-clock time per call
plus the speedup.  Falls back gracefully when the compiled backend is
not built.
"""

import argparse
import random
import statistics
import time

from rexconf._kernels import py_backend

try:
    from rexconf._kernels import c_backend
except ImportError:
    c_backend = None


def random_table(rng, n_states, n_letters):
    delta = [rng.randrange(n_states) for _ in range(n_states * n_letters)]
    labels = [rng.randrange(4) for _ in range(n_states)]
    return delta, labels


def time_call(fn, rounds):
    samples = []
    for _ in range(rounds):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--states", type=int, default=2000)
    parser.add_argument("--letters", type=int, default=8)
    parser.add_argument("--rounds", type=int, default=9)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    n, k = args.states, args.letters
    delta, labels = random_table(rng, n, k)
    other_delta = list(delta)
    other_delta[rng.randrange(len(other_delta))] = rng.randrange(n)
    word = [rng.randrange(k) for _ in range(50_000)]

    workloads = [
        ("bfs_order", lambda b: b.bfs_order(n, k, delta, 0)),
        ("run_word", lambda b: b.run_word(k, delta, 0, word)),
        ("minimize_blocks", lambda b: b.minimize_blocks(n, k, delta, labels)),
        (
            "find_distinguisher",
            lambda b: b.find_distinguisher(k, delta, labels, 0, other_delta, labels, 0),
        ),
    ]

    print(f"{n} states, {k} letters, median of {args.rounds} rounds")
    header = f"{'kernel':<20}{'python':>12}{'compiled':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, call in workloads:
        py_time = time_call(lambda: call(py_backend), args.rounds)
        if c_backend is None:
            print(f"{name:<20}{py_time * 1000:>10.2f}ms{'n/a':>12}{'n/a':>10}")
            continue
        c_time = time_call(lambda: call(c_backend), args.rounds)
        print(
            f"{name:<20}{py_time * 1000:>10.2f}ms{c_time * 1000:>10.2f}ms"
            f"{py_time / c_time:>9.1f}x"
        )


if __name__ == "__main__":
    main()
