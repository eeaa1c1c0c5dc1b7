"""Compare the numba and pure-numpy oracle kernels on representative graphs.

Run:  python benchmarks/bench_backends.py
"""

from __future__ import annotations

import time

from gfminrank import SimpleGraph, oracle_min_rank
from gfminrank._kernels import HAVE_NUMBA
from gfminrank.oracle import enumeration_size


def cycle(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


CASES = [
    ("K5 / GF(3)", SimpleGraph.complete(5), 3),
    ("C6 / GF(3)", cycle(6), 3),
    ("P5 / GF(5)", SimpleGraph.path(5), 5),
    ("K22 / GF(4)", SimpleGraph.complete_multipartite([2, 2]), 4),
]


def timed(fn, repeats: int = 2) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    if HAVE_NUMBA:
        oracle_min_rank(SimpleGraph.complete(2), 3, backend="numba")  # warm the JIT
    header = f"{'case':<16} {'matrices':>10} " + " ".join(f"{b:>10}" for b in backends)
    print(header)
    print("-" * len(header))
    for name, g, q in CASES:
        total = enumeration_size(g.n, g.edge_count(), q)
        results = {}
        times = {}
        for b in backends:
            times[b] = timed(lambda b=b: results.setdefault(b, oracle_min_rank(g, q, backend=b)))
        assert len(set(results.values())) == 1, f"backend mismatch on {name}"
        row = f"{name:<16} {total:>10} " + " ".join(f"{times[b]:>9.3f}s" for b in backends)
        if HAVE_NUMBA:
            row += f"   ({times['numpy'] / times['numba']:.1f}x)"
        print(row)


if __name__ == "__main__":
    main()
