from __future__ import annotations

import pytest

from gfminrank import SimpleGraph, min_rank, oracle_min_rank
from gfminrank._kernels import HAVE_NUMBA, active_backend
from gfminrank.miner import enumerate_graphs
from gfminrank.oracle import OracleBudgetError, enumeration_size


def test_fullhouse_reference_values(fullhouse):
    assert oracle_min_rank(fullhouse, 2) == 3
    assert oracle_min_rank(fullhouse, 3) == 2


def test_path_needs_rank_two():
    p3 = SimpleGraph.path(3)
    for q in (2, 3, 4, 5):
        assert oracle_min_rank(p3, q) == 2


def test_edgeless_is_rank_zero():
    assert oracle_min_rank(SimpleGraph.empty(4), 2) == 0
    assert oracle_min_rank(SimpleGraph.empty(0), 3) == 0


def test_single_edge_has_rank_one():
    for q in (2, 3, 9):
        assert oracle_min_rank(SimpleGraph.complete(2), q) == 1


def test_budget_refusal():
    g = SimpleGraph.complete(8)
    with pytest.raises(OracleBudgetError):
        oracle_min_rank(g, 16, budget=10 ** 6)
    assert enumeration_size(8, 28, 16) > 10 ** 6


def test_agreement_with_blowup_route(rng):
    for q in (2, 3):
        for n in range(1, 5):
            for g in enumerate_graphs(n):
                assert oracle_min_rank(g, q) == min_rank(g, q)


def test_partitioned_scan_matches_full(fullhouse):
    q = 2
    total = enumeration_size(5, 8, q)
    mid = total // 2
    lo = oracle_min_rank(fullhouse, q, stop=mid)
    hi = oracle_min_rank(fullhouse, q, start=mid)
    assert min(lo, hi) == 3


def test_backends_agree(rng):
    for q in (2, 3, 4):
        for _ in range(15):
            n = rng.randrange(1, 6)
            g = SimpleGraph.from_edges(
                n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5])
            expected = oracle_min_rank(g, q, backend="numpy")
            if HAVE_NUMBA:
                assert oracle_min_rank(g, q, backend="numba") == expected


def test_backend_selection(monkeypatch):
    monkeypatch.delenv("GFMINRANK_BACKEND", raising=False)
    assert active_backend() in ("numba", "numpy")
    monkeypatch.setenv("GFMINRANK_BACKEND", "numpy")
    assert active_backend() == "numpy"
    monkeypatch.setenv("GFMINRANK_BACKEND", "bogus")
    with pytest.raises(ValueError):
        active_backend()
    assert active_backend("numpy") == "numpy"


def test_env_flag_switches_backend(fullhouse, monkeypatch):
    monkeypatch.setenv("GFMINRANK_BACKEND", "numpy")
    assert oracle_min_rank(fullhouse, 2) == 3


def test_batch_rank_kernel_matches_scalar_rank(rng):
    # the numpy batch eliminator against the plain matrix rank, directly
    import numpy as np

    from gfminrank import MatrixFq, field_from_order, rank
    from gfminrank._kernels import _rank_batch_numpy

    for q in (2, 3, 4, 5):
        f = field_from_order(q)
        tables = f.kernel_tables()
        for n in (1, 3, 5):
            batch = np.array([[[rng.randrange(q) for _ in range(n)] for _ in range(n)]
                              for _ in range(64)], dtype=np.int64)
            got = _rank_batch_numpy(batch, *tables)
            want = [rank(MatrixFq(f, m)) for m in batch]
            assert got.tolist() == want


def test_gf2_exhaustive_dense_graphs():
    # over GF(2) the edge values are forced, so 2^n ranks per graph
    for g in (SimpleGraph.complete(8), SimpleGraph.complete_multipartite([4, 4])):
        assert enumeration_size(g.n, g.edge_count(), 2) == 2 ** g.n
        assert oracle_min_rank(g, 2) in (1, 2)
