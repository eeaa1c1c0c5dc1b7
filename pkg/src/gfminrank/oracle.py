"""Independent brute-force minimum rank.

Enumerates every symmetric matrix whose off-diagonal support matches the
graph (all diagonal values, all nonzero edge values) and takes the minimum
rank.  Deliberately simple: it shares no code with the blowup route below
the graph layer, and it is the ground truth the classification pipeline is
validated against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .gf import field_from_order
from .graphs import SimpleGraph

DEFAULT_BUDGET = 10 ** 8


class OracleBudgetError(Exception):
    """The enumeration would exceed the configured budget."""

    def __init__(self, detail: str):
        super().__init__(detail)


@dataclass(frozen=True)
class OracleBudget:
    max_matrices: int = DEFAULT_BUDGET


def enumeration_size(n: int, m: int, q: int) -> int:
    return q ** n * (q - 1) ** m


def oracle_min_rank(g: SimpleGraph, q: int,
                    budget: int | OracleBudget = DEFAULT_BUDGET,
                    backend: str | None = None,
                    start: int | None = None, stop: int | None = None) -> int:
    """Minimum rank of g over GF(q) by exhaustive enumeration.

    ``start``/``stop`` restrict the enumeration ticket range so the work can
    be partitioned across processes; the full range is the default.
    """
    if isinstance(budget, OracleBudget):
        budget = budget.max_matrices
    field = field_from_order(q)
    n = g.n
    edges = sorted(g.edges())
    m = len(edges)
    if m == 0:
        return 0  # the zero matrix realises every edgeless graph
    total = enumeration_size(n, m, q)
    if total > budget:
        raise OracleBudgetError(
            f"enumeration of {total} matrices exceeds budget {budget}")
    try:
        tables = field.kernel_tables()
    except ValueError as exc:
        raise OracleBudgetError(str(exc)) from exc
    edge_arr = np.asarray(edges, dtype=np.int64).reshape(m, 2)
    lo = 0 if start is None else max(0, start)
    hi = total if stop is None else min(stop, total)
    best = _kernels.scan_min_rank(n, edge_arr, q, tables, lo, hi, floor=1,
                                  backend=backend)
    assert 1 <= best <= n
    return best
