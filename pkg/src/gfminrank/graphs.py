"""Graph value types and utilities: loop-free and looped graphs with
bit-packed adjacency rows, graph6 parsing/emission, complements, twin
reduction, and backtracking isomorphism for desk-scale graphs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


def _check_rows(n: int, rows, allow_loops: bool) -> tuple[int, ...]:
    rows = tuple(int(r) for r in rows)
    if len(rows) != n:
        raise ValueError("adjacency row count does not match n")
    full = (1 << n) - 1
    for i, r in enumerate(rows):
        if r & ~full:
            raise ValueError("adjacency bits outside vertex range")
        if not allow_loops and (r >> i) & 1:
            raise ValueError(f"loop stored in adjacency at vertex {i}")
    for i in range(n):
        for j in range(i + 1, n):
            if ((rows[i] >> j) & 1) != ((rows[j] >> i) & 1):
                raise ValueError("adjacency is not symmetric")
    return rows


class SimpleGraph:
    """Loop-free undirected graph on vertices 0..n-1, rows as bitmasks."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows):
        self.n = n
        self.rows = _check_rows(n, rows, allow_loops=False)

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, [0] * n)

    @classmethod
    def from_edges(cls, n: int, edges) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("simple graphs have no loops")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << i) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete_multipartite(cls, sizes) -> "SimpleGraph":
        sizes = list(sizes)
        n = sum(sizes)
        rows = [0] * n
        starts = []
        at = 0
        for s in sizes:
            starts.append(at)
            at += s
        full = (1 << n) - 1
        for part, s in enumerate(sizes):
            lo = starts[part]
            part_mask = ((1 << s) - 1) << lo
            for v in range(lo, lo + s):
                rows[v] = full & ~part_mask
        return cls(n, rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return bin(self.rows[v]).count("1")

    def edges(self):
        for u in range(self.n):
            m = self.rows[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    yield (u, v)
                m >>= 1
                v += 1

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.rows[v]]

    def induced(self, verts) -> "SimpleGraph":
        verts = list(verts)
        pos = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for i, v in enumerate(verts):
            for j, w in enumerate(verts):
                if i != j and self.has_edge(v, w):
                    rows[i] |= 1 << j
        return SimpleGraph(len(verts), rows)

    def relabel(self, perm) -> "SimpleGraph":
        """perm[i] is the new label of vertex i."""
        rows = [0] * self.n
        for u in range(self.n):
            m = self.rows[u]
            nu = perm[u]
            while m:
                v = (m & -m).bit_length() - 1
                rows[nu] |= 1 << perm[v]
                m &= m - 1
        return SimpleGraph(self.n, rows)

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        return SimpleGraph(self.n, [(~r & full) & ~(1 << i) for i, r in enumerate(self.rows)])

    def add_isolated(self, t: int) -> "SimpleGraph":
        return SimpleGraph(self.n + t, list(self.rows) + [0] * t)

    def disjoint_union(self, other: "SimpleGraph") -> "SimpleGraph":
        rows = list(self.rows) + [r << self.n for r in other.rows]
        return SimpleGraph(self.n + other.n, rows)

    def with_loops(self, loops: int = 0) -> "LoopedGraph":
        return LoopedGraph(self.n, self.rows, loops)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimpleGraph)
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"SimpleGraph({self.n}, edges={list(self.edges())})"


class LoopedGraph:
    """Undirected graph with per-vertex loop flags kept apart from adjacency."""

    __slots__ = ("n", "rows", "loops")

    def __init__(self, n: int, rows, loops: int):
        self.n = n
        self.rows = _check_rows(n, rows, allow_loops=False)
        loops = int(loops)
        if loops & ~((1 << n) - 1):
            raise ValueError("loop bits outside vertex range")
        self.loops = loops

    @classmethod
    def from_parts(cls, n: int, edges, looped) -> "LoopedGraph":
        g = SimpleGraph.from_edges(n, edges)
        mask = 0
        for v in looped:
            mask |= 1 << v
        return cls(n, g.rows, mask)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def has_loop(self, v: int) -> bool:
        return bool((self.loops >> v) & 1)

    def degree(self, v: int) -> int:
        """Neighbor count plus one if looped (the filled-vertex convention)."""
        return bin(self.rows[v]).count("1") + ((self.loops >> v) & 1)

    def looped_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.has_loop(v)]

    def nonlooped_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.has_loop(v)]

    def edges(self):
        yield from SimpleGraph(self.n, self.rows).edges()

    def simple(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.rows)

    def complement(self) -> "LoopedGraph":
        full = (1 << self.n) - 1
        rows = [(~r & full) & ~(1 << i) for i, r in enumerate(self.rows)]
        return LoopedGraph(self.n, rows, ~self.loops & full)

    def relabel(self, perm) -> "LoopedGraph":
        g = SimpleGraph(self.n, self.rows).relabel(perm)
        loops = 0
        for v in range(self.n):
            if self.has_loop(v):
                loops |= 1 << perm[v]
        return LoopedGraph(self.n, g.rows, loops)

    def __eq__(self, other) -> bool:
        return (isinstance(other, LoopedGraph) and self.n == other.n
                and self.rows == other.rows and self.loops == other.loops)

    def __hash__(self):
        return hash((self.n, self.rows, self.loops))

    def __repr__(self) -> str:
        return (f"LoopedGraph({self.n}, edges={list(self.edges())}, "
                f"loops={self.looped_vertices()})")


# -- graph6 ------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise ValueError("empty graph6 input")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise ValueError("truncated graph6 size field")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    if len(data) < 8:
        raise ValueError("truncated graph6 size field")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def _g6_encode_size(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        parts = [126, 126]
        for shift in range(30, -1, -6):
            parts.append(((n >> shift) & 63) + 63)
        return bytes(parts)
    raise ValueError("vertex count too large for graph6")


def parse_graph6(text: str | bytes) -> SimpleGraph:
    """Parse one graph6 line (optional >>graph6<< header allowed)."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise ValueError("empty graph6 input")
    data = s.encode("ascii")
    for b in data:
        if b < 63 or b > 126:
            raise ValueError(f"graph6 byte {b} out of range")
    n, at = _g6_decode_size(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[at:]
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    pad = 6 * need - nbits
    if pad and (bits & ((1 << pad) - 1)):
        raise ValueError("graph6 padding bits are not zero")
    bits >>= pad
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return SimpleGraph(n, rows)


def emit_graph6(g: SimpleGraph) -> str:
    n = g.n
    out = bytearray(_g6_encode_size(n))
    bits = 0
    nbits = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | (1 if g.has_edge(i, j) else 0)
    pad = (6 - nbits % 6) % 6
    bits <<= pad
    for shift in range(nbits + pad - 6, -1, -6):
        out.append(((bits >> shift) & 63) + 63)
    return out.decode("ascii")


# -- looped-graph serialisation ------------------------------------------------

def looped_to_json(g: LoopedGraph) -> dict:
    return {
        "n": g.n,
        "loops": g.looped_vertices(),
        "edges": [list(e) for e in g.edges()],
    }


def looped_from_json(obj: dict) -> LoopedGraph:
    return LoopedGraph.from_parts(int(obj["n"]), [tuple(e) for e in obj["edges"]],
                                  [int(v) for v in obj["loops"]])


def to_dot(g: LoopedGraph | SimpleGraph, name: str = "G") -> str:
    """DOT output; looped vertices are drawn filled, nonlooped empty."""
    if isinstance(g, SimpleGraph):
        g = g.with_loops(0)
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(g.n):
        if g.has_loop(v):
            lines.append(f"  {v} [style=filled, fillcolor=black, fontcolor=white];")
        else:
            lines.append(f"  {v} [style=filled, fillcolor=white];")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


# -- twin reduction ------------------------------------------------------------

class ClassStatus(enum.Enum):
    LOOPED = "looped"        # class is a clique of size >= 2
    NONLOOPED = "nonlooped"  # class is an independent set of size >= 2
    FREE = "free"            # singleton


@dataclass(frozen=True)
class TwinReduction:
    """Fixpoint of merging independent and true twins of a simple graph."""

    classes: tuple[tuple[int, ...], ...]
    statuses: tuple[ClassStatus, ...]
    quotient: LoopedGraph

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


def twin_reduce(g: SimpleGraph) -> TwinReduction:
    """Merge twin vertices until no pair remains.

    Pairs are scanned in lexicographic order and the scan restarts after
    every merge, so the outcome is deterministic.
    """
    classes: list[list[int]] = [[v] for v in range(g.n)]
    statuses: list[ClassStatus] = [ClassStatus.FREE] * g.n
    rows = list(g.rows)

    def merge_scan() -> bool:
        m = len(classes)
        for i in range(m):
            for j in range(i + 1, m):
                adjacent = bool((rows[i] >> j) & 1)
                if adjacent:
                    if ClassStatus.NONLOOPED in (statuses[i], statuses[j]):
                        continue
                    ni = rows[i] | (1 << i) | (1 << j)
                    nj = rows[j] | (1 << i) | (1 << j)
                    if ni != nj:
                        continue
                    new_status = ClassStatus.LOOPED
                else:
                    if ClassStatus.LOOPED in (statuses[i], statuses[j]):
                        continue
                    ni = rows[i] & ~(1 << j)
                    nj = rows[j] & ~(1 << i)
                    if ni != nj:
                        continue
                    new_status = ClassStatus.NONLOOPED
                classes[i].extend(classes[j])
                statuses[i] = new_status
                del classes[j]
                del statuses[j]
                # drop row/column j from the quotient masks
                del rows[j]
                low = (1 << j) - 1
                for t in range(len(rows)):
                    r = rows[t]
                    rows[t] = (r & low) | ((r >> (j + 1)) << j)
                return True
        return False

    while merge_scan():
        pass

    loops = 0
    for i, st in enumerate(statuses):
        if st is ClassStatus.LOOPED:
            loops |= 1 << i
    quotient = LoopedGraph(len(classes), rows, loops)
    return TwinReduction(tuple(tuple(sorted(c)) for c in classes),
                         tuple(statuses), quotient)


def blow_up(pattern: LoopedGraph, sizes) -> SimpleGraph:
    """Expand a looped pattern: looped vertices become cliques, nonlooped
    vertices independent sets, edges become complete joins."""
    sizes = list(sizes)
    if len(sizes) != pattern.n:
        raise ValueError("one size per pattern vertex required")
    starts = []
    at = 0
    for s in sizes:
        starts.append(at)
        at += s
    edges = []
    for v in range(pattern.n):
        if pattern.has_loop(v):
            for a in range(starts[v], starts[v] + sizes[v]):
                for b in range(a + 1, starts[v] + sizes[v]):
                    edges.append((a, b))
    for u, v in pattern.edges():
        for a in range(starts[u], starts[u] + sizes[u]):
            for b in range(starts[v], starts[v] + sizes[v]):
                edges.append((a, b))
    return SimpleGraph.from_edges(at, edges)


# -- isomorphism ----------------------------------------------------------------

class IsoBudgetError(Exception):
    """Raised when the isomorphism search exceeds its node budget."""


def _refined_colors(g: LoopedGraph) -> list[int]:
    """Vertex colors from iterated neighborhood refinement, loops included."""
    colors = [(g.has_loop(v), bin(g.rows[v]).count("1")) for v in range(g.n)]
    palette = {c: i for i, c in enumerate(sorted(set(colors)))}
    cur = [palette[c] for c in colors]
    for _ in range(g.n):
        sigs = []
        for v in range(g.n):
            nbr = sorted(cur[u] for u in range(g.n) if g.has_edge(v, u))
            sigs.append((cur[v], tuple(nbr)))
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        nxt = [palette[s] for s in sigs]
        if nxt == cur:
            break
        cur = nxt
    return cur


def _color_histogram(colors: list[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for c in colors:
        out[c] = out.get(c, 0) + 1
    return out


def are_isomorphic(g: LoopedGraph | SimpleGraph, h: LoopedGraph | SimpleGraph,
                   node_budget: int = 2_000_000) -> bool:
    """Loop-respecting graph isomorphism by backtracking.

    Candidates are pruned by iterated color refinement and each vertex is
    matched after one of its neighbors whenever possible, which keeps the
    search shallow on regular graphs.  Intended for desk-scale inputs; the
    search aborts with IsoBudgetError after node_budget assignments.
    """
    if isinstance(g, SimpleGraph):
        g = g.with_loops(0)
    if isinstance(h, SimpleGraph):
        h = h.with_loops(0)
    if g.n != h.n:
        return False
    gc = _refined_colors(g)
    hc = _refined_colors(h)
    if _color_histogram(gc) != _color_histogram(hc):
        return False

    # order: rarest color first, then prefer vertices adjacent to the mapped set
    order: list[int] = []
    placed = 0
    hist = _color_histogram(gc)
    while len(order) < g.n:
        best = None
        for v in range(g.n):
            if (placed >> v) & 1:
                continue
            touches = any(g.has_edge(v, w) for w in order)
            key = (not touches, hist[gc[v]], v)
            if best is None or key < best[0]:
                best = (key, v)
        order.append(best[1])
        placed |= 1 << best[1]

    by_color: dict[int, list[int]] = {}
    for u in range(h.n):
        by_color.setdefault(hc[u], []).append(u)
    mapped = [-1] * g.n
    used = 0
    nodes = 0

    def backtrack(depth: int) -> bool:
        nonlocal used, nodes
        if depth == g.n:
            return True
        v = order[depth]
        for u in by_color.get(gc[v], ()):
            nodes += 1
            if nodes > node_budget:
                raise IsoBudgetError(f"isomorphism search exceeded {node_budget} nodes")
            if (used >> u) & 1:
                continue
            ok = True
            for d2 in range(depth):
                w = order[d2]
                if g.has_edge(v, w) != h.has_edge(u, mapped[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapped[v] = u
            used |= 1 << u
            if backtrack(depth + 1):
                return True
            used &= ~(1 << u)
            mapped[v] = -1
        return False

    return backtrack(0)
