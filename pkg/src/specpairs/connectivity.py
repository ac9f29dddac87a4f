"""Exact vertex and edge connectivity with checkable witnesses.

Local connectivity between a vertex pair is computed by BFS augmenting
paths on a unit-capacity network (the vertex version splits every vertex
into an in/out pair).  Global connectivity reduces to few local runs:

* vertex: fix a lowest-index minimum-degree vertex v0; take the minimum
  of kappa(v0, t) over non-neighbors t and kappa(u, w) over non-adjacent
  pairs of neighbors of v0, seeded with the cut N(v0);
* edge: the minimum of lambda(0, t) over all t, seeded with the edge
  star of a minimum-degree vertex.

Each run is capped at the best value found so far, so only strict
improvements are explored to completion.  Witnesses come from the final
residual reachability cut (for flows that finished below the cap) or
from the seed cut; both are exact minimum cuts.  Iteration orders are
fixed by vertex index, so results are deterministic.

``brute_force_connectivity`` is the independent oracle: it enumerates
deletion subsets in increasing size, with a hard ceiling on how many
subsets it will agree to scan.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import Graph, components, delete_edges, delete_vertices

__all__ = [
    "ConnectivityResult",
    "PathSystem",
    "max_vertex_disjoint_paths",
    "max_edge_disjoint_paths",
    "vertex_connectivity",
    "edge_connectivity",
    "brute_force_connectivity",
    "verify_disconnecting_set",
]


@dataclass(frozen=True)
class ConnectivityResult:
    """A connectivity value with a machine-checkable witness.

    ``witness`` is a sorted tuple of vertices (kind="vertex") or of
    (min, max) edge pairs (kind="edge") whose deletion disconnects the
    graph, () when the graph is already disconnected, and None when no
    disconnecting set exists (complete graphs for the vertex kind,
    graphs on fewer than 2 vertices for the edge kind).
    """

    value: int
    witness: object
    kind: str


@dataclass(frozen=True)
class PathSystem:
    """A set of s-t paths produced by a max-flow run.

    mode="vertex": pairwise internally vertex-disjoint.
    mode="edge": pairwise edge-disjoint.
    """

    s: int
    t: int
    mode: str
    paths: tuple

    @property
    def count(self) -> int:
        return len(self.paths)

    def validate(self, g: Graph) -> None:
        """Raise ValueError unless every path is a simple s-t path in g
        and the disjointness promise of ``mode`` holds."""
        for idx, path in enumerate(self.paths):
            if len(path) < 2 or path[0] != self.s or path[-1] != self.t:
                raise ValueError(f"path {idx} does not run from s to t")
            if len(set(path)) != len(path):
                raise ValueError(f"path {idx} repeats a vertex")
            for u, v in zip(path, path[1:]):
                if not g.has_edge(u, v):
                    raise ValueError(f"path {idx} uses the non-edge ({u}, {v})")
        if self.mode == "vertex":
            seen = set()
            for idx, path in enumerate(self.paths):
                for v in path[1:-1]:
                    if v in (self.s, self.t) or v in seen:
                        raise ValueError(
                            f"path {idx} shares interior vertex {v}"
                        )
                    seen.add(v)
        elif self.mode == "edge":
            seen = set()
            for idx, path in enumerate(self.paths):
                for u, v in zip(path, path[1:]):
                    e = (min(u, v), max(u, v))
                    if e in seen:
                        raise ValueError(f"path {idx} reuses edge {e}")
                    seen.add(e)
        else:
            raise ValueError(f"unknown mode {self.mode!r}")


def _neighbor_lists(g: Graph) -> list:
    return [g.neighbors(v) for v in range(g.n)]


# -- vertex-split network ----------------------------------------------------
#
# Node 2v is "into v", node 2v+1 is "out of v".  Arcs: 2v -> 2v+1 for every
# v except the endpoints (unit capacity, this is what makes paths internally
# disjoint), and (2u+1) -> 2v for every edge uv.  Source 2s+1, sink 2t.
# The residual graph is kept as sets of live out-neighbors; BFS scans
# candidate arcs in a fixed order (internal partner, then neighbors by
# index), so the traversal is deterministic.


def _vertex_flow(g: Graph, nbrs, s: int, t: int, cap=None):
    """Max s-t flow on the split network, stopping early at ``cap``.

    Returns (value, res); if value < cap (or cap is None) the flow is
    maximum and res is its residual adjacency.
    """
    n2 = 2 * g.n
    res = [set() for _ in range(n2)]
    for v in range(g.n):
        if v != s and v != t:
            res[2 * v].add(2 * v + 1)
    for u in range(g.n):
        ru = res[2 * u + 1]
        for v in nbrs[u]:
            ru.add(2 * v)
    S, T = 2 * s + 1, 2 * t
    value = 0
    while cap is None or value < cap:
        parent = [-1] * n2
        parent[S] = S
        dq = deque([S])
        hit = False
        while dq and not hit:
            a = dq.popleft()
            v = a >> 1
            ra = res[a]
            if a & 1:
                cand = [a - 1]
                cand.extend(2 * u for u in nbrs[v])
            else:
                cand = [a + 1]
                cand.extend(2 * u + 1 for u in nbrs[v])
            for b in cand:
                if b in ra and parent[b] == -1:
                    parent[b] = a
                    if b == T:
                        hit = True
                        break
                    dq.append(b)
        if not hit:
            break
        b = T
        while b != S:
            a = parent[b]
            res[a].discard(b)
            res[b].add(a)
            b = a
        value += 1
    return value, res


def _vertex_residual_cut(g: Graph, nbrs, s: int, t: int, res) -> tuple:
    """The minimum vertex cut read off a finished residual: vertices
    whose in-node is reachable from the source but whose out-node is not."""
    n2 = 2 * g.n
    S = 2 * s + 1
    seen = [False] * n2
    seen[S] = True
    dq = deque([S])
    while dq:
        a = dq.popleft()
        v = a >> 1
        ra = res[a]
        if a & 1:
            cand = [a - 1]
            cand.extend(2 * u for u in nbrs[v])
        else:
            cand = [a + 1]
            cand.extend(2 * u + 1 for u in nbrs[v])
        for b in cand:
            if b in ra and not seen[b]:
                seen[b] = True
                dq.append(b)
    return tuple(
        v for v in range(g.n) if seen[2 * v] and not seen[2 * v + 1]
    )


def _vertex_flow_paths(g: Graph, nbrs, s: int, t: int, value: int, res):
    # net flow arcs are the forward arcs missing from the residual
    out = [[] for _ in range(2 * g.n)]
    for v in range(g.n):
        if v != s and v != t and (2 * v + 1) not in res[2 * v]:
            out[2 * v].append(2 * v + 1)
    for u in range(g.n):
        ru = res[2 * u + 1]
        for v in nbrs[u]:
            if 2 * v not in ru:
                out[2 * u + 1].append(2 * v)
    for lst in out:
        lst.sort()
    S, T = 2 * s + 1, 2 * t
    paths = []
    for _ in range(value):
        path = [s]
        a = S
        while a != T:
            b = out[a].pop(0)
            if not (b & 1):
                path.append(b >> 1)
            a = b
        paths.append(tuple(path))
    return tuple(paths)


def max_vertex_disjoint_paths(g: Graph, s: int, t: int) -> PathSystem:
    """A maximum system of internally vertex-disjoint s-t paths."""
    _check_endpoints(g, s, t)
    nbrs = _neighbor_lists(g)
    value, res = _vertex_flow(g, nbrs, s, t)
    return PathSystem(s, t, "vertex", _vertex_flow_paths(g, nbrs, s, t, value, res))


# -- edge network ------------------------------------------------------------
#
# Plain undirected unit capacities.  Net flow is a dict holding the pushed
# ordered pairs; the arc u->v is live in the residual exactly when (u, v)
# is absent (pushing against a stored pair cancels it).


def _edge_flow(g: Graph, nbrs, s: int, t: int, cap=None):
    n = g.n
    f = {}
    value = 0
    while cap is None or value < cap:
        parent = [-1] * n
        parent[s] = s
        dq = deque([s])
        hit = False
        while dq and not hit:
            u = dq.popleft()
            for w in nbrs[u]:
                if parent[w] == -1 and (u, w) not in f:
                    parent[w] = u
                    if w == t:
                        hit = True
                        break
                    dq.append(w)
        if not hit:
            break
        w = t
        while w != s:
            u = parent[w]
            if (w, u) in f:
                del f[(w, u)]
            else:
                f[(u, w)] = 1
            w = u
        value += 1
    return value, f


def _edge_residual_cut(g: Graph, nbrs, s: int, f) -> tuple:
    seen = [False] * g.n
    seen[s] = True
    dq = deque([s])
    while dq:
        u = dq.popleft()
        for w in nbrs[u]:
            if not seen[w] and (u, w) not in f:
                seen[w] = True
                dq.append(w)
    cut = []
    for u in range(g.n):
        if seen[u]:
            for w in nbrs[u]:
                if not seen[w]:
                    cut.append((min(u, w), max(u, w)))
    return tuple(sorted(cut))


def _edge_flow_paths(s: int, t: int, value: int, f):
    out = {}
    for u, w in sorted(f):
        out.setdefault(u, []).append(w)
    paths = []
    for _ in range(value):
        path = [s]
        at = {s: 0}
        u = s
        while u != t:
            w = out[u].pop(0)
            if w in at:
                # a closed detour was consumed; drop it from the path
                i = at[w]
                for v in path[i + 1 :]:
                    del at[v]
                path = path[: i + 1]
            else:
                path.append(w)
                at[w] = len(path) - 1
            u = w
        paths.append(tuple(path))
    return tuple(paths)


def max_edge_disjoint_paths(g: Graph, s: int, t: int) -> PathSystem:
    """A maximum system of pairwise edge-disjoint s-t paths."""
    _check_endpoints(g, s, t)
    nbrs = _neighbor_lists(g)
    value, f = _edge_flow(g, nbrs, s, t)
    return PathSystem(s, t, "edge", _edge_flow_paths(s, t, value, f))


def _check_endpoints(g: Graph, s: int, t: int):
    for v in (s, t):
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    if s == t:
        raise ValueError("endpoints must differ")


# -- global connectivity -----------------------------------------------------


def vertex_connectivity(g: Graph) -> ConnectivityResult:
    """Exact vertex connectivity with a minimum separating set.

    Complete graphs (including n <= 1) have no separating set: the value
    is n-1 by convention and the witness is None.
    """
    n = g.n
    if n <= 1 or g.num_edges == n * (n - 1) // 2:
        return ConnectivityResult(max(n - 1, 0), None, "vertex")
    if components(g).count != 1:
        return ConnectivityResult(0, (), "vertex")
    nbrs = _neighbor_lists(g)
    degs = g.degrees()
    v0 = int(degs.argmin())
    best = int(degs[v0])
    best_cut = tuple(nbrs[v0])
    adj = g.adj
    pairs = [(v0, t) for t in range(n) if t != v0 and not adj[v0, t]]
    nv0 = nbrs[v0]
    pairs.extend(
        (u, w)
        for u, w in combinations(nv0, 2)
        if not adj[u, w]
    )
    for s, t in pairs:
        value, res = _vertex_flow(g, nbrs, s, t, cap=best)
        if value < best:
            best = value
            best_cut = _vertex_residual_cut(g, nbrs, s, t, res)
    return ConnectivityResult(best, best_cut, "vertex")


def edge_connectivity(g: Graph) -> ConnectivityResult:
    """Exact edge connectivity with a minimum disconnecting edge set.

    Graphs on fewer than 2 vertices cannot be disconnected by edge
    deletion: the value is 0 and the witness is None.
    """
    n = g.n
    if n <= 1:
        return ConnectivityResult(0, None, "edge")
    if components(g).count != 1:
        return ConnectivityResult(0, (), "edge")
    nbrs = _neighbor_lists(g)
    degs = g.degrees()
    v0 = int(degs.argmin())
    best = int(degs[v0])
    best_cut = tuple(sorted((min(v0, u), max(v0, u)) for u in nbrs[v0]))
    for t in range(1, n):
        value, f = _edge_flow(g, nbrs, 0, t, cap=best)
        if value < best:
            best = value
            best_cut = _edge_residual_cut(g, nbrs, 0, f)
    return ConnectivityResult(best, best_cut, "edge")


# -- independent oracle ------------------------------------------------------


def brute_force_connectivity(
    g: Graph, mode: str, budget: int, ceiling: int = 2_000_000
):
    """Smallest disconnecting deletion set size, by raw enumeration.

    Scans all vertex subsets (mode="vertex") or edge subsets
    (mode="edge") of size 1..budget in increasing size and lexicographic
    order; returns the first size whose deletion leaves >= 2 components,
    0 if the graph is already disconnected, or None when no subset
    within the budget disconnects.  Refuses to start when the number of
    subsets to scan exceeds ``ceiling``.
    """
    if mode not in ("vertex", "edge"):
        raise ValueError(f"mode must be 'vertex' or 'edge', got {mode!r}")
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    if components(g).count != 1:
        return 0
    if mode == "vertex":
        universe = list(range(g.n))
    else:
        universe = g.edges()
    budget = min(budget, len(universe))
    total = sum(math.comb(len(universe), j) for j in range(1, budget + 1))
    if total > ceiling:
        raise ValueError(
            f"would scan {total} subsets, over the ceiling of {ceiling}"
        )
    masks = [0] * g.n
    for u, v in g.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    full = (1 << g.n) - 1
    if mode == "vertex":
        for size in range(1, budget + 1):
            for combo in combinations(universe, size):
                alive = full
                for v in combo:
                    alive &= ~(1 << v)
                if not _mask_connected(masks, alive):
                    return size
    else:
        for size in range(1, budget + 1):
            for combo in combinations(universe, size):
                m = masks.copy()
                for u, v in combo:
                    m[u] &= ~(1 << v)
                    m[v] &= ~(1 << u)
                if not _mask_connected(m, full):
                    return size
    return None


def _mask_connected(masks, alive: int) -> bool:
    """True unless the alive vertices split into >= 2 components."""
    if alive == 0:
        return True
    start = (alive & -alive).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= masks[v]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen == alive


def verify_disconnecting_set(g: Graph, witness) -> bool:
    """Does deleting the witness (vertices, or edge pairs) leave >= 2
    components?  Unknown vertices or absent edges raise ValueError."""
    items = list(witness)
    if all(isinstance(x, (int, np.integer)) for x in items):
        h, _ = delete_vertices(g, items)
    else:
        h = delete_edges(g, items)
    return components(h).count >= 2
