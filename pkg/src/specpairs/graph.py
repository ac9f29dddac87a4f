"""Immutable dense graphs: constructors, copy-on-write edits, graph6 I/O.

Vertices are the integers 0..n-1.  Every constructor documents its vertex
ordering because downstream constructions assign roles positionally
("the first vertex of ...", "the last vertex of ...").  Graphs are value
objects: the adjacency matrix is frozen on construction and all edit
operations return new graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Graph",
    "Graph6Error",
    "BlockSpec",
    "ComponentPartition",
    "ZERO",
    "ALL_ONES",
    "IDENTITY",
    "ALL_ONES_MINUS_IDENTITY",
    "CYCLE",
    "ALL_ONES_MINUS_CYCLE",
    "circulant",
    "from_blocks",
    "line_graph",
    "delete_vertices",
    "delete_edges",
    "components",
    "disjoint_union",
    "encode_graph6",
    "decode_graph6",
    "empty_graph",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "complete_bipartite",
    "two_coloring",
]


class Graph6Error(ValueError):
    """Malformed graph6 text.  ``offset`` is the byte position of the fault."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.message = message
        self.offset = offset


@dataclass(frozen=True, eq=False)
class Graph:
    """An undirected simple graph stored as a dense boolean adjacency matrix.

    The matrix is validated (square, symmetric, zero diagonal), defensively
    copied, and marked read-only, so a ``Graph`` can never drift out of its
    invariants after construction.
    """

    n: int
    adj: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.adj)
        if a.dtype != bool:
            a = a.astype(bool)
        if a.shape != (self.n, self.n):
            raise ValueError(
                f"adjacency shape {a.shape} does not match n={self.n}"
            )
        if self.n and a.diagonal().any():
            v = int(np.flatnonzero(a.diagonal())[0])
            raise ValueError(f"self-loop at vertex {v}")
        if not np.array_equal(a, a.T):
            bad = np.argwhere(a != a.T)[0]
            raise ValueError(
                f"adjacency not symmetric at ({int(bad[0])}, {int(bad[1])})"
            )
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "adj", a)

    @classmethod
    def from_adjacency(cls, matrix) -> "Graph":
        """Build a graph from any square 0/1 array-like."""
        m = np.asarray(matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {m.shape}")
        return cls(m.shape[0], m.astype(bool))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph on n vertices from an iterable of (u, v) pairs."""
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            a[u, v] = a[v, u] = True
        return cls(n, a)

    # -- queries ---------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return int(self.adj.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1, dtype=np.int64)

    def degree(self, v: int) -> int:
        return int(self.adj[v].sum())

    def min_degree(self) -> int:
        return int(self.degrees().min()) if self.n else 0

    def is_regular(self) -> bool:
        if self.n == 0:
            return True
        d = self.degrees()
        return bool((d == d[0]).all())

    def neighbors(self, v: int) -> list:
        return [int(u) for u in np.flatnonzero(self.adj[v])]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def edges(self) -> list:
        """All edges as (min, max) pairs in lexicographic order."""
        iu = np.argwhere(np.triu(self.adj, k=1))
        return [(int(u), int(v)) for u, v in iu]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


# -- small named constructors ---------------------------------------------


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Graph(n, np.zeros((n, n), dtype=bool))


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = np.ones((n, n), dtype=bool)
    np.fill_diagonal(a, False)
    return Graph(n, a)


def cycle_graph(n: int) -> Graph:
    """The n-cycle 0-1-...-(n-1)-0, n >= 3."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other."""
    if a < 0 or b < 0:
        raise ValueError("part sizes must be nonnegative")
    m = np.zeros((a + b, a + b), dtype=bool)
    m[:a, a:] = True
    m[a:, :a] = True
    return Graph(a + b, m)


def circulant(n: int, jumps) -> Graph:
    """Circulant graph on Z_n: i ~ i+j and i-j (mod n) for each jump j.

    Jumps are reduced mod n and closed under negation, so the result is
    regular of degree |{j, n-j : j in jumps}|.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    js = set()
    for j in jumps:
        r = j % n
        if r == 0:
            raise ValueError(f"jump {j} is 0 mod {n}")
        js.add(r)
        js.add(n - r)
    if not js:
        raise ValueError("jumps must be nonempty")
    row = np.zeros(n, dtype=bool)
    row[sorted(js)] = True
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return Graph(n, row[idx])


# -- block assembly --------------------------------------------------------

ZERO = "zero"
ALL_ONES = "ones"
IDENTITY = "identity"
ALL_ONES_MINUS_IDENTITY = "ones_minus_identity"
CYCLE = "cycle"
ALL_ONES_MINUS_CYCLE = "ones_minus_cycle"

_CELL_NAMES = {
    ZERO,
    ALL_ONES,
    IDENTITY,
    ALL_ONES_MINUS_IDENTITY,
    CYCLE,
    ALL_ONES_MINUS_CYCLE,
}


@dataclass(frozen=True)
class BlockSpec:
    """A block-matrix recipe: class sizes plus one cell per class pair.

    ``cells[i][j]`` is either one of the named patterns (ZERO, ALL_ONES,
    IDENTITY, ALL_ONES_MINUS_IDENTITY, CYCLE, ALL_ONES_MINUS_CYCLE) or an
    explicit 0/1 array of shape (row_sizes[i], col_sizes[j]).
    """

    row_sizes: tuple
    col_sizes: tuple
    cells: tuple

    def __init__(self, row_sizes, col_sizes, cells):
        object.__setattr__(self, "row_sizes", tuple(int(s) for s in row_sizes))
        object.__setattr__(self, "col_sizes", tuple(int(s) for s in col_sizes))
        object.__setattr__(self, "cells", tuple(tuple(r) for r in cells))


def _render_cell(cell, rows, cols, where):
    if isinstance(cell, str):
        if cell not in _CELL_NAMES:
            raise ValueError(f"unknown cell pattern {cell!r} at {where}")
        if cell == ZERO:
            return np.zeros((rows, cols), dtype=bool)
        if cell == ALL_ONES:
            return np.ones((rows, cols), dtype=bool)
        if rows != cols:
            raise ValueError(
                f"pattern {cell!r} at {where} needs a square cell, "
                f"got {rows}x{cols}"
            )
        if cell == IDENTITY:
            return np.eye(rows, dtype=bool)
        if cell == ALL_ONES_MINUS_IDENTITY:
            return ~np.eye(rows, dtype=bool)
        # remaining patterns involve a cycle
        if rows < 3:
            raise ValueError(
                f"pattern {cell!r} at {where} needs size >= 3, got {rows}"
            )
        c = cycle_graph(rows).adj
        return c if cell == CYCLE else ~(c | np.eye(rows, dtype=bool))
    m = np.asarray(cell)
    if m.shape != (rows, cols):
        raise ValueError(
            f"explicit cell at {where} has shape {m.shape}, "
            f"expected {(rows, cols)}"
        )
    return m.astype(bool)


def from_blocks(spec: BlockSpec):
    """Assemble a graph from a BlockSpec.

    Returns (graph, boundaries) where boundaries[i] = (start, stop) gives
    the vertex range occupied by row class i.  The assembled matrix must
    be square and symmetric with a zero diagonal; violations raise
    ValueError naming the offending cell.
    """
    rs, cs = spec.row_sizes, spec.col_sizes
    if any(s <= 0 for s in rs) or any(s <= 0 for s in cs):
        raise ValueError("class sizes must be positive")
    if len(spec.cells) != len(rs) or any(len(r) != len(cs) for r in spec.cells):
        raise ValueError(
            f"cell grid must be {len(rs)}x{len(cs)} to match the class lists"
        )
    if sum(rs) != sum(cs):
        raise ValueError(
            f"assembly is {sum(rs)}x{sum(cs)}, not square"
        )
    blocks = [
        [
            _render_cell(spec.cells[i][j], rs[i], cs[j], f"cell ({i}, {j})")
            for j in range(len(cs))
        ]
        for i in range(len(rs))
    ]
    a = np.block([[b.astype(np.uint8) for b in row] for row in blocks])
    n = a.shape[0]
    # locate symmetry faults per cell pair for a useful message
    if not np.array_equal(a, a.T):
        rb = np.cumsum((0,) + rs)
        cb = np.cumsum((0,) + cs)
        for i in range(len(rs)):
            for j in range(len(cs)):
                block = a[rb[i]:rb[i + 1], cb[j]:cb[j + 1]]
                mirror = a.T[rb[i]:rb[i + 1], cb[j]:cb[j + 1]]
                if not np.array_equal(block, mirror):
                    raise ValueError(
                        f"assembly not symmetric: cell ({i}, {j}) does not "
                        f"mirror cell ({j}, {i})"
                    )
    if a.diagonal().any():
        rb = np.cumsum((0,) + rs)
        v = int(np.flatnonzero(a.diagonal())[0])
        i = int(np.searchsorted(rb, v, side="right")) - 1
        raise ValueError(
            f"assembly has a nonzero diagonal in cell ({i}, {i}) at vertex {v}"
        )
    bounds = []
    start = 0
    for s in rs:
        bounds.append((start, start + s))
        start += s
    return Graph(n, a.astype(bool)), tuple(bounds)


# -- derived graphs and edits ----------------------------------------------


def line_graph(g: Graph) -> Graph:
    """The line graph: one vertex per edge of g, adjacent when edges share
    an endpoint.

    Vertex i of the result is edge ``g.edges()[i]``, i.e. edges are taken
    as (min, max) pairs in lexicographic order.
    """
    es = g.edges()
    m = len(es)
    ends = np.array(es, dtype=np.int64).reshape(m, 2)
    a = np.zeros((m, m), dtype=bool)
    if m:
        shared = (
            (ends[:, None, 0] == ends[None, :, 0])
            | (ends[:, None, 0] == ends[None, :, 1])
            | (ends[:, None, 1] == ends[None, :, 0])
            | (ends[:, None, 1] == ends[None, :, 1])
        )
        np.fill_diagonal(shared, False)
        a = shared
    return Graph(m, a)


def delete_vertices(g: Graph, vertices):
    """Remove a set of vertices.

    Returns (graph, mapping) where mapping[old] = new for every kept
    vertex; kept vertices stay in their original relative order.
    """
    drop = set()
    for v in vertices:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        drop.add(int(v))
    keep = [v for v in range(g.n) if v not in drop]
    mapping = {old: new for new, old in enumerate(keep)}
    sub = g.adj[np.ix_(keep, keep)]
    return Graph(len(keep), sub), mapping


def delete_edges(g: Graph, edges) -> Graph:
    """Remove a set of edges (each must be present; order within a pair
    does not matter)."""
    a = g.adj.copy()
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not a[u, v]:
            raise ValueError(f"edge ({u}, {v}) not in graph")
        a[u, v] = a[v, u] = False
    return Graph(g.n, a)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g followed by h on a fresh vertex range (h's vertex v becomes g.n+v)."""
    n = g.n + h.n
    a = np.zeros((n, n), dtype=bool)
    a[: g.n, : g.n] = g.adj
    a[g.n :, g.n :] = h.adj
    return Graph(n, a)


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components: labels[v] is the component of v, numbered
    0..count-1 in order of first appearance by vertex index."""

    labels: tuple
    count: int


def components(g: Graph) -> ComponentPartition:
    labels = [-1] * g.n
    count = 0
    for start in range(g.n):
        if labels[start] != -1:
            continue
        labels[start] = count
        stack = [start]
        while stack:
            u = stack.pop()
            for w in np.flatnonzero(g.adj[u]):
                w = int(w)
                if labels[w] == -1:
                    labels[w] = count
                    stack.append(w)
        count += 1
    return ComponentPartition(tuple(labels), count)


def two_coloring(g: Graph):
    """A proper 2-coloring as a tuple of 0/1, or None if an odd cycle
    exists.  Color 0 is assigned to the least vertex of each component."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in np.flatnonzero(g.adj[u]):
                w = int(w)
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return tuple(color)


# -- graph6 ----------------------------------------------------------------
#
# Encoding (bit-identical with the standard tools):
#   N(n): n <= 62 -> chr(63+n); 63 <= n <= 258047 -> '~' + 3 chars carrying
#   18 bits; larger (up to 2^36-1) -> '~~' + 6 chars carrying 36 bits.
#   Then the upper triangle x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ... is
#   packed big-endian, 6 bits per character, each character offset by 63,
#   zero-padded to a multiple of 6.


def _encode_bits(bits):
    while len(bits) % 6:
        bits.append(0)
    out = []
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i : i + 6]:
            v = (v << 1) | b
        out.append(chr(63 + v))
    return "".join(out)


def encode_graph6(g: Graph) -> str:
    """One-line graph6 text for g (no trailing newline)."""
    n = g.n
    if n > 68719476735:
        raise ValueError("graph6 supports at most 2^36 - 1 vertices")
    if n <= 62:
        head = chr(63 + n)
    elif n <= 258047:
        head = "~" + _encode_bits([(n >> (17 - i)) & 1 for i in range(18)])
    else:
        head = "~~" + _encode_bits([(n >> (35 - i)) & 1 for i in range(36)])
    cols = []
    for v in range(1, n):
        col = g.adj[:v, v]
        cols.extend(int(b) for b in col)
    return head + _encode_bits(cols)


def decode_graph6(text: str) -> Graph:
    """Parse one graph6 line.  Raises Graph6Error with a byte offset on
    malformed input."""
    s = text.rstrip("\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 text", 0)
    pos = 0

    def take(k, what):
        nonlocal pos
        if pos + k > len(s):
            raise Graph6Error(f"truncated {what}", len(s))
        vals = []
        for i in range(k):
            c = ord(s[pos + i])
            if not (63 <= c <= 126):
                raise Graph6Error(
                    f"character {s[pos + i]!r} outside graph6 range", pos + i
                )
            vals.append(c - 63)
        pos += k
        return vals

    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            pos = 2
            vals = take(6, "36-bit order")
            n = 0
            for v in vals:
                n = (n << 6) | v
        else:
            pos = 1
            vals = take(3, "18-bit order")
            n = 0
            for v in vals:
                n = (n << 6) | v
    else:
        n = take(1, "order")[0]
    need = n * (n - 1) // 2
    chars = (need + 5) // 6
    body_at = pos
    vals = take(chars, "adjacency bits")
    if pos != len(s):
        raise Graph6Error("trailing characters after adjacency bits", pos)
    bits = []
    for v in vals:
        bits.extend((v >> (5 - i)) & 1 for i in range(6))
    for i in range(need, len(bits)):
        if bits[i]:
            raise Graph6Error(
                "nonzero padding in final character", body_at + i // 6
            )
    a = np.zeros((n, n), dtype=bool)
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                a[u, v] = a[v, u] = True
            i += 1
    return Graph(n, a)
