"""Published reference data for the small pattern graphs.

The FqRk matrices are the adjacency/Gram matrices U^t B U of the
minimum-rank pattern graphs over GF(q) at rank bound k, under the same
column order as the point matrices stored alongside them.  The rank-2
GF(2) patterns are stored with their original point-column order, which
differs from the canonical enumeration order used by this package;
consumers match columns through the stored point lists.
"""

from __future__ import annotations

F2R3_U = [
    [0, 1, 0, 1, 0, 1, 1],
    [0, 0, 1, 1, 1, 1, 0],
    [1, 1, 1, 1, 0, 0, 0],
]

F2R3_GRAM = [
    [1, 1, 1, 1, 0, 0, 0],
    [1, 0, 1, 0, 0, 1, 1],
    [1, 1, 0, 0, 1, 1, 0],
    [1, 0, 0, 1, 1, 0, 1],
    [0, 0, 1, 1, 1, 1, 0],
    [0, 1, 1, 0, 1, 0, 1],
    [0, 1, 0, 1, 0, 1, 1],
]

F3R3_U = [
    [0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 1],
    [0, 0, 0, 1, 1, 1, 2, 2, 2, 1, 1, 1, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0],
]

F3R3_GRAM = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0],
    [1, 2, 0, 1, 2, 0, 1, 2, 0, 0, 1, 2, 1],
    [1, 0, 2, 1, 0, 2, 1, 0, 2, 0, 2, 1, 2],
    [1, 1, 1, 2, 2, 2, 0, 0, 0, 1, 1, 1, 0],
    [1, 2, 0, 2, 0, 1, 0, 1, 2, 1, 2, 0, 1],
    [1, 0, 2, 2, 1, 0, 0, 2, 1, 1, 0, 2, 2],
    [1, 1, 1, 0, 0, 0, 2, 2, 2, 2, 2, 2, 0],
    [1, 2, 0, 0, 1, 2, 2, 0, 1, 2, 0, 1, 1],
    [1, 0, 2, 0, 2, 1, 2, 1, 0, 2, 1, 0, 2],
    [0, 0, 0, 1, 1, 1, 2, 2, 2, 1, 1, 1, 0],
    [0, 1, 2, 1, 2, 0, 2, 0, 1, 1, 2, 0, 1],
    [0, 2, 1, 1, 0, 2, 2, 1, 0, 1, 0, 2, 2],
    [0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 1],
]

F2R4_U = [
    [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1],
    [0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0],
    [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
]

F2R4A_GRAM = [
    [1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1],
    [1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0],
    [1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1],
    [1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0],
    [1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1],
    [1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0],
    [1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 1],
    [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0],
    [0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1],
    [0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0],
    [0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1],
    [0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0],
    [0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1],
    [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1],
]

F2R4B_GRAM = [
    [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0],
    [0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0],
    [0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1],
    [0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1],
    [1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0],
    [1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1],
    [1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0],
    [1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1],
    [1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1],
    [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1],
    [0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1],
    [0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0],
]

G2F2_U = [
    [1, 0, 1, 0],
    [0, 1, 1, 0],
]

G2F2_IDENTITY_GRAM = [
    [1, 0, 1, 0],
    [0, 1, 1, 0],
    [1, 1, 0, 0],
    [0, 0, 0, 0],
]

G2F2_SYMPLECTIC_GRAM = [
    [0, 1, 1, 0],
    [1, 0, 1, 0],
    [1, 1, 0, 0],
    [0, 0, 0, 0],
]

# the 5-vertex graph whose minimum rank is 3 over GF(2) and 2 elsewhere
FULLHOUSE_EDGES = [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def u_columns(u: list[list[int]]) -> list[tuple[int, ...]]:
    """Columns of a stored point matrix as coordinate tuples."""
    k = len(u)
    n = len(u[0])
    return [tuple(u[i][j] for i in range(k)) for j in range(n)]
